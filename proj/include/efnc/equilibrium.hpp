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
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "efnc/dominating_set.hpp"
#include "efnc/game.hpp"
#include "efnc/oracle.hpp"

namespace efnc {

// Joint level-2 enumeration visits 2^(n1*n2) profiles.
inline constexpr std::size_t kJointGuardBits = 12;

enum class Level { kLevel1, kLevel2 };
enum class Scope { kLevel1, kLevel2, kBoth };
enum class Oracle { kExact, kGreedy };
enum class OptimumMethod { kExhaustiveJoint, kSeparablePerJob };

inline std::string_view to_string(Level l) {
  return l == Level::kLevel1 ? "Level1" : "Level2";
}
inline std::string_view to_string(Scope s) {
  switch (s) {
    case Scope::kLevel1: return "Level1";
    case Scope::kLevel2: return "Level2";
    case Scope::kBoth: return "Both";
  }
  return "?";
}
inline std::string_view to_string(Oracle o) {
  return o == Oracle::kExact ? "Exact" : "Greedy";
}
inline std::string_view to_string(OptimumMethod m) {
  return m == OptimumMethod::kExhaustiveJoint ? "ExhaustiveJoint" : "SeparablePerJob";
}

struct DeviationWitness {
  Level level = Level::kLevel2;
  std::size_t player = 0;
  Cost current_cost = kInfiniteCost;
  VertexSet better_strategy;
  Cost better_cost = kInfiniteCost;

  friend bool operator==(const DeviationWitness&, const DeviationWitness&) = default;
};

struct NashResult {
  bool is_nash = true;
  std::optional<DeviationWitness> witness;
};

namespace detail {

inline bool covers(Scope s, Level l) {
  return s == Scope::kBoth || (l == Level::kLevel1 ? s == Scope::kLevel1 : s == Scope::kLevel2);
}

struct PlayerRef {
  Level level;
  std::size_t index;
};

inline std::vector<PlayerRef> scoped_players(const GameState& state, Scope scope) {
  std::vector<PlayerRef> players;
  if (covers(scope, Level::kLevel1)) {
    if (!state.profile_mode())
      throw PolicyError("level-1 scope requires a level-1 profile");
    for (std::size_t i = 0; i < state.n1(); ++i) players.push_back({Level::kLevel1, i});
  }
  if (covers(scope, Level::kLevel2))
    for (std::size_t j = 0; j < state.n2(); ++j) players.push_back({Level::kLevel2, j});
  return players;
}

inline Cost current_cost(PlayerRef p, const GameState& state, const GameConfig& cfg) {
  return p.level == Level::kLevel1 ? edge_fog_player_cost(p.index, state, cfg)
                                   : job_player_cost(p.index, state, cfg);
}

inline const VertexSet& current_strategy(PlayerRef p, const GameState& state) {
  return p.level == Level::kLevel1 ? state.level1().strategies[p.index]
                                   : state.job_strategy(p.index);
}

inline BestResponse respond(PlayerRef p, const GameState& state, const GameConfig& cfg,
                            Oracle oracle) {
  if (p.level == Level::kLevel1) {
    return oracle == Oracle::kExact ? best_response_fog_exact(p.index, state, cfg)
                                    : best_response_fog_greedy(p.index, state, cfg);
  }
  return oracle == Oracle::kExact ? best_response_job_exact(p.index, state, cfg)
                                  : best_response_job_greedy(p.index, state, cfg);
}

inline GameState apply(PlayerRef p, const GameState& state, VertexSet s) {
  return p.level == Level::kLevel1 ? state.with_fog_strategy(p.index, std::move(s))
                                   : state.with_job_strategy(p.index, std::move(s));
}

// Profile key for cycle detection: every player's strategy bitmask.
inline std::vector<std::uint64_t> profile_key(const GameState& state) {
  std::vector<std::uint64_t> key;
  if (state.profile_mode())
    for (const auto& s : state.level1().strategies) key.push_back(s.to_mask());
  for (const auto& s : state.level2().strategies) key.push_back(s.to_mask());
  return key;
}

}  // namespace detail

/// True iff no scoped player has an exact best response strictly cheaper than
/// its current cost. On failure the witness is the first deviating player,
/// level-1 players before jobs, ascending index.
inline NashResult is_nash(const GameState& state, const GameConfig& cfg,
                          Scope scope = Scope::kLevel2) {
  for (auto p : detail::scoped_players(state, scope)) {
    const Cost cur = detail::current_cost(p, state, cfg);
    BestResponse br = detail::respond(p, state, cfg, Oracle::kExact);
    if (cost_less(br.cost, cur)) {
      return {false, DeviationWitness{p.level, p.index, cur, std::move(br.strategy), br.cost}};
    }
  }
  return {true, std::nullopt};
}

struct Schedule {
  enum class Kind { kRoundRobin, kRandomPermutation };
  Kind kind = Kind::kRoundRobin;
  std::uint64_t seed = 0;

  static Schedule round_robin() { return {}; }
  static Schedule random_permutation(std::uint64_t seed) {
    return {Kind::kRandomPermutation, seed};
  }
};

struct Move {
  std::size_t round = 0;
  Level level = Level::kLevel2;
  std::size_t player = 0;
  VertexSet old_strategy;
  VertexSet new_strategy;
  Cost cost_delta = 0.0;  // new - old; -inf when leaving an Infinite cost

  friend bool operator==(const Move&, const Move&) = default;
};

enum class Outcome { kConverged, kCycleDetected, kBudgetExhausted };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kConverged: return "Converged";
    case Outcome::kCycleDetected: return "CycleDetected";
    case Outcome::kBudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

struct DynamicsTrace {
  std::vector<Move> moves;
  Outcome outcome = Outcome::kBudgetExhausted;
  std::size_t period = 0;  // rounds between repeated profiles, for kCycleDetected
  std::size_t rounds = 0;  // full passes started
  GameState final_state;
};

struct DynamicsOptions {
  Scope scope = Scope::kLevel2;
  Schedule schedule;
  std::size_t max_rounds = 100;
  Oracle oracle = Oracle::kExact;
};

/// Best-response dynamics. A round is one pass over the scoped players; a
/// player moves only on strict improvement. Stops when a round has no move
/// (Converged), when a round starts from an already-seen profile
/// (CycleDetected) or after max_rounds rounds.
inline DynamicsTrace best_response_dynamics(const GameState& state0, const GameConfig& cfg,
                                            const DynamicsOptions& opts = {}) {
  cfg.validate();
  DynamicsTrace trace{{}, Outcome::kBudgetExhausted, 0, 0, state0};
  auto players = detail::scoped_players(state0, opts.scope);
  std::mt19937_64 rng(opts.schedule.seed);
  std::map<std::vector<std::uint64_t>, std::size_t> seen;
  GameState& state = trace.final_state;

  for (std::size_t round = 0; round < opts.max_rounds; ++round) {
    auto [it, fresh] = seen.emplace(detail::profile_key(state), round);
    if (!fresh) {
      trace.outcome = Outcome::kCycleDetected;
      trace.period = round - it->second;
      return trace;
    }
    trace.rounds = round + 1;
    if (opts.schedule.kind == Schedule::Kind::kRandomPermutation) {
      for (std::size_t k = players.size(); k > 1; --k)
        std::swap(players[k - 1], players[rng() % k]);
    }
    bool moved = false;
    for (auto p : players) {
      const Cost cur = detail::current_cost(p, state, cfg);
      BestResponse br = detail::respond(p, state, cfg, opts.oracle);
      if (!cost_less(br.cost, cur)) continue;
      trace.moves.push_back({round, p.level, p.index, detail::current_strategy(p, state),
                             br.strategy, br.cost - cur});
      state = detail::apply(p, state, std::move(br.strategy));
      moved = true;
    }
    if (!moved) {
      trace.outcome = Outcome::kConverged;
      return trace;
    }
  }
  return trace;
}

namespace detail {

inline PlayerCountPolicy count_policy(std::size_t n1, std::size_t n2) {
  return n1 == n2 ? PlayerCountPolicy::kEqual : PlayerCountPolicy::kRelaxed;
}

inline Level2Profile profile_from_joint_mask(std::uint64_t mask, std::size_t n1,
                                             std::size_t n2) {
  Level2Profile p;
  const std::uint64_t per_job = n1 >= 64 ? ~0ULL : (1ULL << n1) - 1;
  for (std::size_t j = 0; j < n2; ++j)
    p.strategies.push_back(VertexSet::from_mask((mask >> (j * n1)) & per_job));
  return p;
}

inline void check_joint_guard(std::size_t n1, std::size_t n2) {
  if (n1 * n2 > kJointGuardBits)
    throw SizeLimitError("joint level-2 guard (n1*n2 bits)", n1 * n2, kJointGuardBits);
}

// Calls visit(state) on every level-2 profile over a fixed G1 in mask order.
template <typename Visit>
void for_each_level2_profile(const Graph& g1, std::size_t n2, Visit&& visit) {
  const std::size_t n1 = g1.order();
  check_joint_guard(n1, n2);
  const std::uint64_t count = 1ULL << (n1 * n2);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    visit(GameState::with_fixed_g1(g1, profile_from_joint_mask(mask, n1, n2),
                                   count_policy(n1, n2)));
  }
}

}  // namespace detail

struct Optimum {
  Cost cost = kInfiniteCost;
  Level2Profile profile;
};

/// Minimum level-2 social cost over every profile on a fixed G1.
///
/// ExhaustiveJoint enumerates all joint profiles (n1*n2 <= 12). SeparablePerJob
/// minimizes each job on its own, which is exact only under FogOnly transit
/// where job costs do not interact.
inline Optimum social_optimum_level2(const Graph& g1, const GameConfig& cfg,
                                     OptimumMethod method, std::optional<std::size_t> n2_opt = {}) {
  cfg.validate();
  const std::size_t n1 = g1.order();
  const std::size_t n2 = n2_opt.value_or(n1);
  Optimum best;
  bool have = false;
  if (method == OptimumMethod::kExhaustiveJoint) {
    detail::for_each_level2_profile(g1, n2, [&](const GameState& s) {
      Cost c = social_cost_level2(s, cfg);
      if (!have || cost_less(c, best.cost)) {
        best = {c, s.level2()};
        have = true;
      }
    });
    return best;
  }
  if (cfg.transit != TransitPolicy::kFogOnly)
    throw PolicyError("SeparablePerJob optimum requires FogOnly transit");
  Level2Profile empty{std::vector<VertexSet>(n2)};
  const auto state = GameState::with_fixed_g1(g1, empty, detail::count_policy(n1, n2));
  best.cost = 0.0;
  for (std::size_t j = 0; j < n2; ++j) {
    auto br = best_response_job_exact(j, state, cfg);
    best.cost += br.cost;
    best.profile.strategies.push_back(std::move(br.strategy));
  }
  return best;
}

struct NashProfile {
  Level2Profile profile;
  Cost social_cost = kInfiniteCost;
};

// Every level-2 Nash equilibrium on a fixed G1, in joint-mask order.
inline std::vector<NashProfile> enumerate_nash_level2(const Graph& g1, const GameConfig& cfg,
                                                      std::optional<std::size_t> n2_opt = {}) {
  cfg.validate();
  std::vector<NashProfile> out;
  detail::for_each_level2_profile(g1, n2_opt.value_or(g1.order()), [&](const GameState& s) {
    if (is_nash(s, cfg, Scope::kLevel2).is_nash)
      out.push_back({s.level2(), social_cost_level2(s, cfg)});
  });
  return out;
}

struct PoAReport {
  Cost optimum_cost = kInfiniteCost;
  Level2Profile optimum_profile;
  Cost worst_ne_cost = kInfiniteCost;
  Level2Profile worst_ne_profile;
  double poa = 0.0;
  std::size_t ne_count = 0;

  friend bool operator==(const PoAReport&, const PoAReport&) = default;
};

/// Worst level-2 equilibrium cost over the exhaustive joint optimum.
inline PoAReport empirical_poa(const Graph& g1, const GameConfig& cfg,
                               std::optional<std::size_t> n2_opt = {}) {
  const auto nash = enumerate_nash_level2(g1, cfg, n2_opt);
  if (nash.empty()) throw NoEquilibriumError("no level-2 Nash equilibrium exists on this instance");
  const auto opt = social_optimum_level2(g1, cfg, OptimumMethod::kExhaustiveJoint, n2_opt);
  const NashProfile* worst = &nash.front();
  for (const auto& ne : nash)
    if (cost_less(worst->social_cost, ne.social_cost)) worst = &ne;
  if (is_infinite(opt.cost) || !(opt.cost > 0.0))
    throw DomainError("price of anarchy undefined: optimum social cost is not a positive finite value");
  return {opt.cost, opt.profile, worst->social_cost, worst->profile,
          worst->social_cost / opt.cost, nash.size()};
}

inline Level2Profile construct_complete_bipartite(std::size_t n1, std::size_t n2) {
  std::vector<Vertex> all(n1);
  for (Vertex v = 0; v < n1; ++v) all[v] = v;
  return {std::vector<VertexSet>(n2, VertexSet(all))};
}

// Every job plays the (lexicographically smallest) minimum dominating set.
inline Level2Profile construct_mds_profile(const Graph& g1, std::size_t n2) {
  if (g1.order() == 0 || !is_connected(g1))
    throw ValidationError("construct_mds_profile requires a connected G1");
  return {std::vector<VertexSet>(n2, min_dominating_set(g1))};
}

/// Checks whether a lone Type II job's exact best response is a minimum
/// dominating set of G1, the shape claimed for every beta > 1. That shape is
/// only guaranteed for 1 < beta < 2: past beta = 2 a single well-placed vertex
/// can beat every dominating set, and `flagged` reports that case.
struct DominatingResponseDiagnostic {
  double beta = 0.0;
  VertexSet best_response;
  Cost cost = kInfiniteCost;
  std::size_t domination_number = 0;
  bool is_dominating = false;
  bool is_minimum_dominating = false;
  bool within_guaranteed_regime = false;  // 1 < beta < 2
  bool flagged = false;
  std::string message;
};

inline DominatingResponseDiagnostic diagnose_dominating_response(const Graph& g1, double beta) {
  GameConfig cfg;
  cfg.beta = beta;
  cfg.job_cost_type = JobCostType::kTypeII;
  const std::size_t n1 = g1.order();
  const auto state = GameState::with_fixed_g1(g1, Level2Profile{std::vector<VertexSet>(n1)});
  auto br = best_response_job_exact(0, state, cfg);

  DominatingResponseDiagnostic d;
  d.beta = beta;
  d.domination_number = domination_number(g1);
  d.is_dominating = is_dominating_set(g1, br.strategy);
  d.is_minimum_dominating = d.is_dominating && br.strategy.size() == d.domination_number;
  d.within_guaranteed_regime = beta > 1.0 && beta < 2.0;
  d.flagged = beta > 1.0 && !d.is_minimum_dominating;
  std::ostringstream msg;
  msg << "best response " << br.strategy << " at beta=" << beta;
  if (d.flagged) {
    msg << " is not a minimum dominating set (gamma=" << d.domination_number
        << "); the dominating-set shape holds only for 1 < beta < 2";
  } else if (beta > 1.0) {
    msg << " is a minimum dominating set (gamma=" << d.domination_number << ")";
  } else {
    msg << " (beta <= 1: dominating-set shape not expected)";
  }
  d.message = msg.str();
  d.best_response = std::move(br.strategy);
  d.cost = br.cost;
  return d;
}

}  // namespace efnc
