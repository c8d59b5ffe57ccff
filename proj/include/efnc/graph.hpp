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

#include <algorithm>
#include <cstddef>
#include <deque>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "efnc/distance.hpp"
#include "efnc/errors.hpp"

namespace efnc {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex indices.
///
/// Ordering is lexicographic on the sorted member list, which is the
/// tie-break order used wherever a set is returned.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
  }

  // Members are the set bits of `mask`.
  static VertexSet from_mask(unsigned long long mask) {
    VertexSet s;
    for (Vertex v = 0; mask != 0; ++v, mask >>= 1) {
      if (mask & 1ULL) s.members_.push_back(v);
    }
    return s;
  }

  unsigned long long to_mask() const {
    unsigned long long mask = 0;
    for (Vertex v : members_) mask |= 1ULL << v;
    return mask;
  }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }
  // Largest member + 1, or 0 for the empty set.
  std::size_t bound() const { return members_.empty() ? 0 : members_.back() + 1; }

  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  VertexSet with(Vertex v) const {
    auto m = members_;
    m.push_back(v);
    return VertexSet(std::move(m));
  }
  VertexSet without(Vertex v) const {
    auto m = members_;
    m.erase(std::remove(m.begin(), m.end(), v), m.end());
    return VertexSet(std::move(m));
  }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  friend std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
    os << '{';
    for (std::size_t i = 0; i < s.members_.size(); ++i) {
      if (i) os << ',';
      os << s.members_[i];
    }
    return os << '}';
  }

 private:
  std::vector<Vertex> members_;
};

/// Undirected, unweighted simple graph on vertices [0, n).
///
/// Edges are stored normalized (u < v) and sorted, so two graphs with the
/// same edge set compare equal regardless of construction order.
class Graph {
 public:
  Graph() = default;

  // Throws ValidationError on a self-loop, an out-of-range endpoint or a
  // duplicate edge, naming the offending pair.
  Graph(std::size_t n, std::span<const Edge> edges) : n_(n), adj_(n) {
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a == b) {
        throw ValidationError("self-loop (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
      }
      if (a >= n || b >= n) {
        throw ValidationError("edge (" + std::to_string(a) + "," +
                              std::to_string(b) + ") out of range for n=" +
                              std::to_string(n));
      }
      edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      throw ValidationError("duplicate edge (" + std::to_string(dup->first) +
                            "," + std::to_string(dup->second) + ")");
    }
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  explicit Graph(std::size_t n) : n_(n), adj_(n) {}

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  // Copy with {u,v} added; a no-op if the edge already exists.
  Graph with_edge(Vertex u, Vertex v) const {
    if (has_edge(u, v)) return *this;
    auto e = edges_;
    e.emplace_back(u, v);
    return Graph(n_, e);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// n×n table of hop distances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n)
      : n_(n), d_(n * n, Distance::infinite()) {}

  std::size_t order() const { return n_; }
  Distance at(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  Distance& at(Vertex u, Vertex v) { return d_[u * n_ + v]; }
  std::span<const Distance> row(Vertex u) const {
    return {d_.data() + u * n_, n_};
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> d_;
};

// Breadth-first hop distances from `source`; Infinite for unreachable vertices.
inline std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  std::vector<Distance> dist(g.order(), Distance::infinite());
  std::deque<Vertex> queue{source};
  dist[source] = Distance(0);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    Distance next = dist[u] + Distance(1);
    for (Vertex w : g.neighbors(u)) {
      if (dist[w].is_infinite()) {
        dist[w] = next;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix m(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), &m.at(s, 0));
  }
  return m;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) throw ValidationError("is_connected: empty graph");
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](Distance d) { return d.is_infinite(); });
}

// Members of `s` must lie in [0, g.order()).
inline void check_members(const Graph& g, const VertexSet& s) {
  if (s.bound() > g.order()) {
    throw ValidationError("vertex " + std::to_string(s.bound() - 1) +
                          " out of range for n=" + std::to_string(g.order()));
  }
}

inline std::ostream& operator<<(std::ostream& os, const Graph& g) {
  os << "Graph(n=" << g.order() << ", {";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) os << ' ';
    os << g.edges()[i].first << '-' << g.edges()[i].second;
  }
  return os << "})";
}

}  // namespace efnc
