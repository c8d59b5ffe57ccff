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
#include <vector>

#include "efnc/graph.hpp"

namespace efnc {

inline constexpr std::size_t kDominatingSetGuard = 24;

namespace detail {

// Closed neighbourhood N[v] of every vertex as a bitmask (requires n <= 64).
inline std::vector<std::uint64_t> closed_neighborhoods(const Graph& g) {
  std::vector<std::uint64_t> nb(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    nb[v] = 1ULL << v;
    for (Vertex w : g.neighbors(v)) nb[v] |= 1ULL << w;
  }
  return nb;
}

inline std::uint64_t full_mask(std::size_t n) {
  return n >= 64 ? ~0ULL : (1ULL << n) - 1;
}

// Depth-first search over k-subsets in lexicographic order; the first hit is
// the lexicographically smallest dominating k-set.
inline bool find_dominating_k_set(const std::vector<std::uint64_t>& nb,
                                  std::uint64_t full, Vertex start,
                                  std::size_t remaining, std::uint64_t covered,
                                  std::vector<Vertex>& chosen) {
  if (remaining == 0) return covered == full;
  const std::size_t n = nb.size();
  for (Vertex v = start; v + remaining <= n; ++v) {
    chosen.push_back(v);
    if (find_dominating_k_set(nb, full, v + 1, remaining - 1, covered | nb[v],
                              chosen)) {
      return true;
    }
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

inline bool is_dominating_set(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  std::vector<bool> covered(g.order(), false);
  for (Vertex v : s) {
    covered[v] = true;
    for (Vertex w : g.neighbors(v)) covered[w] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

/// Adds the vertex covering the most still-uncovered vertices (lowest index on
/// ties) until everything is covered.
inline VertexSet greedy_dominating_set(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> covered(n, false);
  std::size_t uncovered = n;
  std::vector<Vertex> chosen;
  while (uncovered > 0) {
    Vertex best = 0;
    std::size_t best_gain = 0;
    for (Vertex v = 0; v < n; ++v) {
      std::size_t gain = covered[v] ? 0 : 1;
      for (Vertex w : g.neighbors(v)) gain += covered[w] ? 0 : 1;
      if (gain > best_gain) {
        best = v;
        best_gain = gain;
      }
    }
    chosen.push_back(best);
    auto mark = [&](Vertex w) {
      if (!covered[w]) {
        covered[w] = true;
        --uncovered;
      }
    };
    mark(best);
    for (Vertex w : g.neighbors(best)) mark(w);
  }
  return VertexSet(std::move(chosen));
}

/// Exact minimum dominating set by subset enumeration in increasing
/// cardinality. Among minimum sets the lexicographically smallest is returned.
/// The greedy solution bounds the largest cardinality tried.
inline VertexSet min_dominating_set(const Graph& g,
                                    std::size_t guard = kDominatingSetGuard) {
  const std::size_t n = g.order();
  if (n > guard) throw SizeLimitError("dominating-set guard", n, guard);
  if (n == 0) return {};
  const auto nb = detail::closed_neighborhoods(g);
  const auto full = detail::full_mask(n);
  const VertexSet upper = greedy_dominating_set(g);
  std::vector<Vertex> chosen;
  for (std::size_t k = 1; k < upper.size(); ++k) {
    if (detail::find_dominating_k_set(nb, full, 0, k, 0, chosen)) {
      return VertexSet(std::move(chosen));
    }
  }
  // No smaller set exists; the lexicographically first set of the greedy size
  // may still differ from the greedy set itself.
  detail::find_dominating_k_set(nb, full, 0, upper.size(), 0, chosen);
  return VertexSet(std::move(chosen));
}

// γ(g)
inline std::size_t domination_number(const Graph& g,
                                     std::size_t guard = kDominatingSetGuard) {
  return min_dominating_set(g, guard).size();
}

}  // namespace efnc
