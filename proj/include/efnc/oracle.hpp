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

// Best-response oracles for both player levels.
//
// A player's shortest path to any target starts with one edge to a "first
// hop" vertex and then follows a shortest path that never returns to the
// player. So once the player's own edges are removed, the distance from the
// player to target t under strategy S is
//
//   min( base[t], 1 + min_{x ∈ S} d_X(x, t) )
//
// where X is the graph without the player's edges and base[t] covers the
// edges other players bought towards it. All candidate strategies are
// evaluated from one table of BFS rows.

#pragma once

#include <cmath>
#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "efnc/game.hpp"

namespace efnc {

inline constexpr std::size_t kBestResponseGuard = 20;

// Costs within this relative distance are ties; a deviation must beat the
// current cost by more than this to count as an improvement.
inline constexpr double kCostTolerance = 1e-12;

inline bool cost_less(Cost a, Cost b) {
  if (is_infinite(b)) return !is_infinite(a);
  if (is_infinite(a)) return false;
  return a < b - kCostTolerance * std::max(1.0, std::abs(b));
}

inline bool cost_tie(Cost a, Cost b) { return !cost_less(a, b) && !cost_less(b, a); }

struct BestResponse {
  VertexSet strategy;
  Cost cost = kInfiniteCost;
};

// Cheaper first, then fewer purchases, then lexicographically smaller.
inline bool preferred(const BestResponse& a, const BestResponse& b) {
  if (cost_less(a.cost, b.cost)) return true;
  if (cost_less(b.cost, a.cost)) return false;
  if (a.strategy.size() != b.strategy.size())
    return a.strategy.size() < b.strategy.size();
  return a.strategy < b.strategy;
}

namespace detail {

/// Distances from every purchasable vertex to every target of one player,
/// with that player's own edges removed.
struct FirstHopTable {
  std::vector<Vertex> candidates;             // purchasable vertices, ascending
  std::vector<std::vector<Distance>> via;     // via[c][t] = 1 + d_X(candidates[c], t)
  std::vector<Distance> base;                 // distance via edges the player did not buy
  std::function<Cost(std::size_t, Cost)> price;  // (purchases, distance sum) -> cost

  std::size_t targets() const { return base.size(); }

  Cost evaluate(const VertexSet& s) const {
    std::vector<Distance> best = base;
    for (Vertex v : s) {
      auto it = std::lower_bound(candidates.begin(), candidates.end(), v);
      const auto& row = via[static_cast<std::size_t>(it - candidates.begin())];
      for (std::size_t t = 0; t < best.size(); ++t) best[t] = std::min(best[t], row[t]);
    }
    return price(s.size(), distance_sum(best));
  }
};

inline FirstHopTable job_table(std::size_t j, const GameState& state,
                               const GameConfig& cfg) {
  const std::size_t n1 = state.n1();
  FirstHopTable table;
  Graph x = cfg.transit == TransitPolicy::kFogOnly
                ? state.g1()
                : state.with_job_strategy(j, {}).combined_graph();
  table.base.assign(n1, Distance::infinite());
  for (Vertex v = 0; v < n1; ++v) {
    table.candidates.push_back(v);
    auto row = bfs_distances(x, v);
    row.resize(n1);
    for (auto& d : row) d = Distance(1) + d;
    table.via.push_back(std::move(row));
  }
  table.price = [cfg, n1](std::size_t k, Cost d) {
    return job_cost_from_parts(k, d, cfg, n1);
  };
  return table;
}

inline FirstHopTable fog_table(Vertex i, const GameState& state,
                               const GameConfig& cfg) {
  const std::size_t n1 = state.n1();
  const Graph others = state.with_fog_strategy(i, {}).g1();
  std::vector<Edge> kept;
  for (auto e : others.edges())
    if (e.first != i && e.second != i) kept.push_back(e);
  const Graph x(n1, kept);

  FirstHopTable table;
  std::vector<std::vector<Distance>> rows(n1);
  for (Vertex v = 0; v < n1; ++v) {
    if (v == i) continue;
    auto row = bfs_distances(x, v);
    for (auto& d : row) d = Distance(1) + d;
    row.erase(row.begin() + static_cast<std::ptrdiff_t>(i));  // target i is the player
    rows[v] = std::move(row);
  }
  table.base.assign(n1 == 0 ? 0 : n1 - 1, Distance::infinite());
  for (Vertex w : others.neighbors(i))
    for (std::size_t t = 0; t < table.base.size(); ++t)
      table.base[t] = std::min(table.base[t], rows[w][t]);
  for (Vertex v = 0; v < n1; ++v) {
    if (v == i) continue;
    table.candidates.push_back(v);
    table.via.push_back(std::move(rows[v]));
  }
  const double alpha = cfg.alpha;
  table.price = [alpha](std::size_t k, Cost d) {
    return is_infinite(d) ? kInfiniteCost : alpha * static_cast<double>(k) + d;
  };
  return table;
}

// Exhaustive search over all 2^m subsets of the candidates, carrying the
// running minimum distance vector down the include/exclude recursion.
inline BestResponse exhaustive(const FirstHopTable& table) {
  const std::size_t m = table.candidates.size();
  BestResponse best;
  bool have = false;
  std::vector<Vertex> chosen;
  std::vector<std::vector<Distance>> stack(m + 1);
  stack[0] = table.base;

  std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
    if (depth == m) {
      BestResponse cand{VertexSet(chosen), table.price(chosen.size(), distance_sum(stack[depth]))};
      if (!have || preferred(cand, best)) {
        best = std::move(cand);
        have = true;
      }
      return;
    }
    stack[depth + 1] = stack[depth];
    recurse(depth + 1);
    auto& next = stack[depth + 1];
    const auto& row = table.via[depth];
    for (std::size_t t = 0; t < next.size(); ++t)
      next[t] = std::min(stack[depth][t], row[t]);
    chosen.push_back(table.candidates[depth]);
    recurse(depth + 1);
    chosen.pop_back();
  };
  recurse(0);
  return best;
}

// Best single add, drop or swap, repeated while it strictly improves.
inline BestResponse local_search(const FirstHopTable& table, VertexSet start) {
  BestResponse cur{start, table.evaluate(start)};
  for (;;) {
    std::optional<BestResponse> best_move;
    auto consider = [&](VertexSet s) {
      BestResponse cand{s, table.evaluate(s)};
      if (!cost_less(cand.cost, cur.cost)) return;
      if (!best_move || cost_less(cand.cost, best_move->cost)) best_move = std::move(cand);
    };
    for (Vertex v : table.candidates)
      if (!cur.strategy.contains(v)) consider(cur.strategy.with(v));
    for (Vertex v : cur.strategy) consider(cur.strategy.without(v));
    for (Vertex out : cur.strategy)
      for (Vertex in : table.candidates)
        if (!cur.strategy.contains(in)) consider(cur.strategy.without(out).with(in));
    if (!best_move) return cur;
    cur = std::move(*best_move);
  }
}

}  // namespace detail

/// Exact best response of job j by enumerating all 2^n1 strategies.
inline BestResponse best_response_job_exact(std::size_t j, const GameState& state,
                                            const GameConfig& cfg,
                                            std::size_t guard = kBestResponseGuard) {
  if (state.n1() > guard) throw SizeLimitError("job best-response guard", state.n1(), guard);
  return detail::exhaustive(detail::job_table(j, state, cfg));
}

/// Local search from the job's current strategy. Never better than the exact
/// oracle; usable beyond its guard.
inline BestResponse best_response_job_greedy(std::size_t j, const GameState& state,
                                             const GameConfig& cfg) {
  return detail::local_search(detail::job_table(j, state, cfg), state.job_strategy(j));
}

/// Exact best response of fog player i over the 2^(n1-1) subsets of the other
/// vertices. Requires a level-1 profile.
inline BestResponse best_response_fog_exact(Vertex i, const GameState& state,
                                            const GameConfig& cfg,
                                            std::size_t guard = kBestResponseGuard) {
  if (!state.profile_mode())
    throw PolicyError("fog best response requires a level-1 profile");
  if (state.n1() > guard) throw SizeLimitError("fog best-response guard", state.n1(), guard);
  return detail::exhaustive(detail::fog_table(i, state, cfg));
}

inline BestResponse best_response_fog_greedy(Vertex i, const GameState& state,
                                             const GameConfig& cfg) {
  if (!state.profile_mode())
    throw PolicyError("fog best response requires a level-1 profile");
  return detail::local_search(detail::fog_table(i, state, cfg), state.fog_strategy(i));
}

}  // namespace efnc
