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

// Two-level network creation game: edge-fog players build G1 by buying edges
// among themselves, job players buy interconnection edges into G1.

#pragma once

#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "efnc/graph.hpp"

namespace efnc {

// Player and social costs are doubles; +inf encodes an Infinite cost.
using Cost = double;
inline constexpr Cost kInfiniteCost = std::numeric_limits<double>::infinity();
inline bool is_infinite(Cost c) { return std::isinf(c) && c > 0; }

enum class JobCostType { kTypeI, kTypeII };

// Whether a job's shortest paths into G1 may pass through other job vertices.
enum class TransitPolicy { kFogOnly, kFullCombined };

inline std::string_view to_string(JobCostType t) {
  return t == JobCostType::kTypeI ? "TypeI" : "TypeII";
}
inline std::string_view to_string(TransitPolicy t) {
  return t == TransitPolicy::kFogOnly ? "FogOnly" : "FullCombined";
}

/// Prices and policies shared by every player.
///
/// A Type I job that cannot reach some fog vertex is charged an Infinite
/// cost, not the literal beta*|S| - 1/inf; this is fixed, not configurable.
struct GameConfig {
  double alpha = 1.0;  // level-1 edge price
  double beta = 1.0;   // level-2 edge price
  JobCostType job_cost_type = JobCostType::kTypeII;
  double rcs_constant = 1.0;  // constant c of the reverse Cauchy-Schwarz bound
  TransitPolicy transit = TransitPolicy::kFullCombined;

  void validate() const {
    if (!(alpha >= 0.0) || std::isinf(alpha))
      throw ValidationError("alpha must be a finite non-negative number");
    if (!(beta >= 0.0) || std::isinf(beta))
      throw ValidationError("beta must be a finite non-negative number");
    if (!(rcs_constant > 0.0) || std::isinf(rcs_constant))
      throw ValidationError("rcs_constant must be positive");
  }
};

// S_i for every edge-fog player i; i itself is never a member.
struct Level1Profile {
  std::vector<VertexSet> strategies;

  std::size_t players() const { return strategies.size(); }

  void validate() const {
    const std::size_t n1 = strategies.size();
    for (std::size_t i = 0; i < n1; ++i) {
      if (strategies[i].contains(i))
        throw ValidationError("level-1 player " + std::to_string(i) +
                              " buys an edge to itself");
      if (strategies[i].bound() > n1)
        throw ValidationError("level-1 player " + std::to_string(i) +
                              " buys an edge to a vertex outside [0, n1)");
    }
  }

  friend bool operator==(const Level1Profile&, const Level1Profile&) = default;
};

// S_vj ⊆ [n1] for every job player j.
struct Level2Profile {
  std::vector<VertexSet> strategies;

  std::size_t players() const { return strategies.size(); }

  void validate(std::size_t n1) const {
    for (std::size_t j = 0; j < strategies.size(); ++j) {
      if (strategies[j].bound() > n1)
        throw ValidationError("job " + std::to_string(j) +
                              " connects to a vertex outside [0, n1)");
    }
  }

  friend bool operator==(const Level2Profile&, const Level2Profile&) = default;
};

// Edge {i,k} iff k ∈ S_i or i ∈ S_k; a doubly bought edge appears once.
inline Graph build_level1_graph(const Level1Profile& p) {
  p.validate();
  std::vector<Edge> edges;
  for (Vertex i = 0; i < p.players(); ++i) {
    for (Vertex k : p.strategies[i]) {
      if (i < k || !p.strategies[k].contains(i)) edges.emplace_back(i, k);
    }
  }
  return Graph(p.players(), edges);
}

/// Fog vertex i keeps index i, job j becomes vertex n1 + j. Only G1 edges and
/// job-to-fog interconnections exist; there are no job-job edges.
inline Graph build_combined_graph(const Graph& g1, const Level2Profile& p) {
  p.validate(g1.order());
  const std::size_t n1 = g1.order();
  std::vector<Edge> edges = g1.edges();
  for (std::size_t j = 0; j < p.players(); ++j)
    for (Vertex s : p.strategies[j]) edges.emplace_back(s, n1 + j);
  return Graph(n1 + p.players(), edges);
}

inline std::size_t interconnection_count(const Level2Profile& p) {
  std::size_t total = 0;
  for (const auto& s : p.strategies) total += s.size();
  return total;
}

// Number of distinct fog vertices touched by any job. Diagnostic only; the
// interconnection count used by every formula is the edge count above.
inline std::size_t interconnection_vertex_union(const Level2Profile& p) {
  std::vector<Vertex> all;
  for (const auto& s : p.strategies) all.insert(all.end(), s.begin(), s.end());
  return VertexSet(std::move(all)).size();
}

enum class PlayerCountPolicy { kEqual, kRelaxed };

/// Immutable snapshot of both levels. Level 1 is either a strategy profile or
/// a fixed graph G1; G1 is materialized at construction.
class GameState {
 public:
  static GameState from_profiles(Level1Profile level1, Level2Profile level2,
                                 PlayerCountPolicy policy = PlayerCountPolicy::kEqual) {
    GameState s;
    s.g1_ = build_level1_graph(level1);
    s.level1_ = std::move(level1);
    s.level2_ = std::move(level2);
    s.policy_ = policy;
    s.check();
    return s;
  }

  static GameState with_fixed_g1(Graph g1, Level2Profile level2,
                                 PlayerCountPolicy policy = PlayerCountPolicy::kEqual) {
    GameState s;
    s.g1_ = std::move(g1);
    s.level2_ = std::move(level2);
    s.policy_ = policy;
    s.check();
    return s;
  }

  std::size_t n1() const { return g1_.order(); }
  std::size_t n2() const { return level2_.players(); }
  bool profile_mode() const { return level1_.has_value(); }
  bool relaxed() const { return policy_ == PlayerCountPolicy::kRelaxed; }
  PlayerCountPolicy player_count_policy() const { return policy_; }

  const Graph& g1() const { return g1_; }
  // Precondition: profile_mode().
  const Level1Profile& level1() const {
    if (!level1_) throw PolicyError("level-1 profile unavailable in fixed-G1 mode");
    return *level1_;
  }
  const Level2Profile& level2() const { return level2_; }

  // Strategy of fog player i; empty in fixed-G1 mode.
  VertexSet fog_strategy(Vertex i) const {
    return level1_ ? level1_->strategies[i] : VertexSet{};
  }
  const VertexSet& job_strategy(std::size_t j) const {
    return level2_.strategies[j];
  }

  GameState with_job_strategy(std::size_t j, VertexSet s) const {
    GameState next = *this;
    next.level2_.strategies.at(j) = std::move(s);
    next.level2_.validate(n1());
    return next;
  }

  GameState with_fog_strategy(Vertex i, VertexSet s) const {
    auto profile = level1();
    profile.strategies.at(i) = std::move(s);
    return from_profiles(std::move(profile), level2_, policy_);
  }

  Graph combined_graph() const { return build_combined_graph(g1_, level2_); }

  friend bool operator==(const GameState& a, const GameState& b) {
    return a.g1_ == b.g1_ && a.level1_ == b.level1_ && a.level2_ == b.level2_;
  }

 private:
  void check() const {
    level2_.validate(g1_.order());
    if (policy_ == PlayerCountPolicy::kEqual && n1() != n2()) {
      throw ValidationError("n1 (" + std::to_string(n1()) + ") != n2 (" +
                            std::to_string(n2()) +
                            "); use the relaxed player-count policy");
    }
  }

  Graph g1_;
  std::optional<Level1Profile> level1_;
  Level2Profile level2_;
  PlayerCountPolicy policy_ = PlayerCountPolicy::kEqual;
};

// Sum of a finite-or-infinite distance row, as a Cost.
inline Cost distance_sum(std::span<const Distance> row) {
  Distance total(0);
  for (Distance d : row) total = total + d;
  return total.as_double();
}

/// Σ_{ω ∈ V1} dist(job j, ω) under the given transit policy.
///
/// FullCombined measures true shortest paths in the combined graph.
/// FogOnly allows only a first hop into G1: dist = 1 + min_{s∈S} d_G1(s, ω).
inline Cost job_distance_sum(std::size_t j, const GameState& state,
                             TransitPolicy transit) {
  const std::size_t n1 = state.n1();
  if (n1 == 0) return 0.0;
  const VertexSet& s = state.job_strategy(j);
  if (s.empty()) return kInfiniteCost;
  if (transit == TransitPolicy::kFullCombined) {
    auto dist = bfs_distances(state.combined_graph(), n1 + j);
    return distance_sum(std::span<const Distance>(dist.data(), n1));
  }
  std::vector<Distance> best(n1, Distance::infinite());
  for (Vertex src : s) {
    auto from = bfs_distances(state.g1(), src);
    for (Vertex w = 0; w < n1; ++w) best[w] = std::min(best[w], Distance(1) + from[w]);
  }
  return distance_sum(best);
}

// Job cost given its purchase count and distance sum.
inline Cost job_cost_from_parts(std::size_t purchases, Cost distance_total,
                                const GameConfig& cfg, std::size_t n1) {
  if (is_infinite(distance_total)) return kInfiniteCost;
  const double buy = cfg.beta * static_cast<double>(purchases);
  if (cfg.job_cost_type == JobCostType::kTypeII) return buy + distance_total;
  if (n1 == 0 || distance_total <= 0.0) return buy;
  return buy - 1.0 / distance_total;
}

/// alpha*|S_i| + Σ_{ω ∈ V1} d_G1(i, ω). Job edges never shorten fog-fog paths
/// here. In fixed-G1 mode the purchase term is zero.
inline Cost edge_fog_player_cost(Vertex i, const GameState& state,
                                 const GameConfig& cfg) {
  auto dist = bfs_distances(state.g1(), i);
  Cost d = distance_sum(dist);
  if (is_infinite(d)) return kInfiniteCost;
  return cfg.alpha * static_cast<double>(state.fog_strategy(i).size()) + d;
}

inline Cost job_player_cost(std::size_t j, const GameState& state,
                            const GameConfig& cfg) {
  return job_cost_from_parts(state.job_strategy(j).size(),
                             job_distance_sum(j, state, cfg.transit), cfg,
                             state.n1());
}

// Σ_i c(v_i). Counts a doubly bought edge twice.
inline Cost social_cost_level1(const GameState& state, const GameConfig& cfg) {
  if (!state.profile_mode())
    throw PolicyError("social_cost_level1 requires a level-1 profile");
  Cost total = 0.0;
  for (Vertex i = 0; i < state.n1(); ++i) total += edge_fog_player_cost(i, state, cfg);
  return total;
}

inline Cost social_cost_level2(const GameState& state, const GameConfig& cfg) {
  Cost total = 0.0;
  for (std::size_t j = 0; j < state.n2(); ++j) total += job_player_cost(j, state, cfg);
  return total;
}

struct CostReport {
  std::vector<Cost> level1_costs;
  std::vector<Cost> level2_costs;
  Cost social_level1 = 0.0;
  Cost social_level2 = 0.0;
  std::size_t interconnection_count = 0;

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

inline CostReport cost_report(const GameState& state, const GameConfig& cfg) {
  cfg.validate();
  CostReport r;
  for (Vertex i = 0; i < state.n1(); ++i)
    r.level1_costs.push_back(edge_fog_player_cost(i, state, cfg));
  for (std::size_t j = 0; j < state.n2(); ++j)
    r.level2_costs.push_back(job_player_cost(j, state, cfg));
  r.social_level1 = std::accumulate(r.level1_costs.begin(), r.level1_costs.end(), 0.0);
  r.social_level2 = std::accumulate(r.level2_costs.begin(), r.level2_costs.end(), 0.0);
  r.interconnection_count = interconnection_count(state.level2());
  return r;
}

}  // namespace efnc
