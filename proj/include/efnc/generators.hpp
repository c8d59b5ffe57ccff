// Copyright 2026 The efnc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "efnc/graph.hpp"

namespace efnc {

enum class GraphKind { kPath, kCycle, kStar, kComplete, kErdosRenyi };

inline std::string_view to_string(GraphKind k) {
  switch (k) {
    case GraphKind::kPath: return "path";
    case GraphKind::kCycle: return "cycle";
    case GraphKind::kStar: return "star";
    case GraphKind::kComplete: return "complete";
    case GraphKind::kErdosRenyi: return "erdos_renyi";
  }
  return "?";
}

inline std::optional<GraphKind> parse_graph_kind(std::string_view s) {
  for (auto k : {GraphKind::kPath, GraphKind::kCycle, GraphKind::kStar,
                 GraphKind::kComplete, GraphKind::kErdosRenyi}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

struct GeneratorSpec {
  GraphKind kind = GraphKind::kPath;
  std::size_t n = 1;
  double p = 0.5;            // erdos_renyi only
  std::uint64_t seed = 0;    // erdos_renyi only
  bool require_connected = false;
  std::size_t max_retries = 1000;
};

// Uniform double in [0, 1) from the top 53 bits; unlike
// std::uniform_real_distribution this is identical across standard libraries.
inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph(n, e);
}

// For n < 3 there is no simple cycle; the path on n vertices is returned.
inline Graph cycle_graph(std::size_t n) {
  if (n < 3) return path_graph(n);
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  e.emplace_back(n - 1, 0);
  return Graph(n, e);
}

// Centre 0, leaves 1..n-1.
inline Graph star_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

// G(n, p): each of the n(n-1)/2 pairs, in lexicographic order, is kept with
// probability p. With require_connected, whole graphs are redrawn from the
// same stream until one is connected.
inline Graph erdos_renyi_graph(std::size_t n, double p, std::uint64_t seed,
                               bool require_connected = false,
                               std::size_t max_retries = 1000) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("erdos_renyi: p must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (unit_draw(rng) < p) e.emplace_back(u, v);
    Graph g(n, e);
    if (!require_connected || is_connected(g)) return g;
  }
  throw GenerationError("erdos_renyi: no connected graph after " +
                        std::to_string(max_retries) + " retries (n=" +
                        std::to_string(n) + ", p=" + std::to_string(p) + ")");
}

inline Graph generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw ValidationError("generate: n must be >= 1");
  switch (spec.kind) {
    case GraphKind::kPath: return path_graph(spec.n);
    case GraphKind::kCycle: return cycle_graph(spec.n);
    case GraphKind::kStar: return star_graph(spec.n);
    case GraphKind::kComplete: return complete_graph(spec.n);
    case GraphKind::kErdosRenyi:
      return erdos_renyi_graph(spec.n, spec.p, spec.seed,
                               spec.require_connected, spec.max_retries);
  }
  throw ValidationError("generate: unknown graph kind");
}

}  // namespace efnc
