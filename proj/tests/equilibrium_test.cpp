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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "efnc/efnc.hpp"
#include "oracles.hpp"

namespace efnc {
namespace {

constexpr auto kRelaxed = PlayerCountPolicy::kRelaxed;

GameConfig type2(double beta, TransitPolicy t = TransitPolicy::kFullCombined) {
  GameConfig cfg;
  cfg.beta = beta;
  cfg.transit = t;
  return cfg;
}

GameConfig type1(double beta, TransitPolicy t = TransitPolicy::kFullCombined) {
  GameConfig cfg = type2(beta, t);
  cfg.job_cost_type = JobCostType::kTypeI;
  return cfg;
}

// A lone job facing n1 - 1 empty co-players.
GameState lone_job(const Graph& g1) {
  return GameState::with_fixed_g1(g1, {std::vector<VertexSet>(g1.order())});
}

oracle::Instance to_instance(const GameState& s, const GameConfig& cfg) {
  oracle::Instance in;
  in.n1 = s.n1();
  in.g1.assign(s.g1().edges().begin(), s.g1().edges().end());
  for (const auto& set : s.level2().strategies) in.jobs.push_back(set.members());
  in.beta = cfg.beta;
  in.type_one = cfg.job_cost_type == JobCostType::kTypeI;
  in.fog_only = cfg.transit == TransitPolicy::kFogOnly;
  return in;
}

// Reference exact best response with the documented tie-break: lowest cost,
// then fewest members, then lexicographically smallest member list.
BestResponse reference_job_response(const GameState& s, const GameConfig& cfg, std::size_t j) {
  auto in = to_instance(s, cfg);
  BestResponse best;
  bool have = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.n1()); ++mask) {
    in.jobs[j] = oracle::members(mask);
    const double c = oracle::job_cost(in, j);
    const VertexSet set = VertexSet::from_mask(mask);
    const bool better = !have || (c < best.cost && !oracle::close(c, best.cost)) ||
                        (oracle::close(c, best.cost) &&
                         (set.size() < best.strategy.size() ||
                          (set.size() == best.strategy.size() && set < best.strategy)));
    if (better) {
      best = {set, c};
      have = true;
    }
  }
  return best;
}

TEST(JobOracleTest, PathOfThree) {
  const auto r = best_response_job_exact(0, lone_job(path_graph(3)), type2(1.5));
  EXPECT_EQ(r.strategy, (VertexSet{1}));
  EXPECT_DOUBLE_EQ(r.cost, 6.5);
}

TEST(JobOracleTest, PathOfFiveExpensiveEdges) {
  const auto r = best_response_job_exact(0, lone_job(path_graph(5)), type2(100));
  EXPECT_EQ(r.strategy, (VertexSet{2}));
  EXPECT_DOUBLE_EQ(r.cost, 111.0);
  EXPECT_FALSE(is_dominating_set(path_graph(5), r.strategy));
}

TEST(JobOracleTest, TypeOneOnK2) {
  const auto r = best_response_job_exact(0, lone_job(complete_graph(2)), type1(2));
  EXPECT_EQ(r.strategy, (VertexSet{0}));
  EXPECT_DOUBLE_EQ(r.cost, 2.0 - 1.0 / 3.0);
}

TEST(JobOracleTest, GuardEnforced) {
  const Graph big = path_graph(21);
  const auto s = GameState::with_fixed_g1(big, {{{}}}, kRelaxed);
  EXPECT_THROW(best_response_job_exact(0, s, type2(1)), SizeLimitError);
  EXPECT_NO_THROW(best_response_job_greedy(0, s, type2(1)));
}

TEST(JobOracleTest, GreedyExamples) {
  const auto star = lone_job(star_graph(5));
  const auto g = best_response_job_greedy(0, star, type2(1.5));
  EXPECT_EQ(g.strategy, (VertexSet{0}));
  EXPECT_DOUBLE_EQ(g.cost, 1.5 + 1 + 4 * 2);

  const auto at_opt = star.with_job_strategy(0, {0});
  EXPECT_EQ(best_response_job_greedy(0, at_opt, type2(1.5)).strategy, (VertexSet{0}));
}

TEST(FogOracleTest, Examples) {
  GameConfig cfg;
  cfg.alpha = 1;
  const Level2Profile none3{std::vector<VertexSet>(3)};
  const auto empty = GameState::from_profiles({std::vector<VertexSet>(3)}, none3);
  auto r = best_response_fog_exact(0, empty, cfg);
  EXPECT_EQ(r.strategy, (VertexSet{1, 2}));
  EXPECT_DOUBLE_EQ(r.cost, 4.0);

  cfg.alpha = 5;
  const auto bridged = GameState::from_profiles({{{}, {2}, {}}}, none3);
  r = best_response_fog_exact(0, bridged, cfg);
  EXPECT_EQ(r.strategy, (VertexSet{1}));
  EXPECT_DOUBLE_EQ(r.cost, 8.0);

  const auto single = GameState::from_profiles({{{}}}, {{{}}});
  r = best_response_fog_exact(0, single, cfg);
  EXPECT_TRUE(r.strategy.empty());
  EXPECT_DOUBLE_EQ(r.cost, 0.0);

  EXPECT_THROW(best_response_fog_exact(0, lone_job(path_graph(3)), cfg), PolicyError);
}

// Exhaustive oracle against an independently coded enumeration; greedy never
// does better than it.
TEST(OracleProperty, JobExactMatchesReenumeration) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t n1 = 1 + rng() % 6;
    const std::size_t n2 = 1 + rng() % 4;
    const Graph g1 = erdos_renyi_graph(n1, 0.45, rng(), false);
    const auto s = GameState::with_fixed_g1(g1, random_level2_profile(rng, n1, n2, 0.35), kRelaxed);
    const double beta = 3.0 * unit_draw(rng);
    const auto cfg = (rng() % 2 ? type1 : type2)(
        beta, rng() % 2 ? TransitPolicy::kFogOnly : TransitPolicy::kFullCombined);
    const std::size_t j = rng() % n2;
    const auto got = best_response_job_exact(j, s, cfg);
    const auto want = reference_job_response(s, cfg, j);
    ASSERT_TRUE(oracle::close(got.cost, want.cost)) << "trial " << trial;
    EXPECT_EQ(got.strategy, want.strategy) << "trial " << trial;
    EXPECT_TRUE(oracle::close(got.cost, job_player_cost(j, s.with_job_strategy(j, got.strategy), cfg)));
    const auto greedy = best_response_job_greedy(j, s, cfg);
    EXPECT_FALSE(cost_less(greedy.cost, got.cost));
    EXPECT_TRUE(
        oracle::close(greedy.cost, job_player_cost(j, s.with_job_strategy(j, greedy.strategy), cfg)));
  }
}

TEST(OracleProperty, FogExactMatchesReenumeration) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n1 = 1 + rng() % 6;
    const auto p = random_level1_profile(rng, n1, 0.35);
    GameConfig cfg;
    cfg.alpha = 4.0 * unit_draw(rng);
    const auto s = GameState::from_profiles(p, {std::vector<VertexSet>(n1)});
    const Vertex i = rng() % n1;
    std::vector<std::vector<std::size_t>> buys;
    for (const auto& set : p.strategies) buys.push_back(set.members());
    double best = oracle::kInfCost;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n1); ++mask) {
      if (mask >> i & 1) continue;
      buys[i] = oracle::members(mask);
      best = std::min(best, oracle::fog_cost(n1, buys, cfg.alpha, i));
    }
    const auto got = best_response_fog_exact(i, s, cfg);
    ASSERT_TRUE(oracle::close(got.cost, best)) << "trial " << trial;
    EXPECT_FALSE(got.strategy.contains(i));
    EXPECT_TRUE(oracle::close(got.cost, edge_fog_player_cost(i, s.with_fog_strategy(i, got.strategy), cfg)));
    EXPECT_FALSE(cost_less(best_response_fog_greedy(i, s, cfg).cost, got.cost));
  }
}

// Lone Type II job, 1 < β < 2: best response is a minimum dominating set
// costing 2n1 + (β−1)γ.
TEST(OracleProperty, DominatingBestResponseInGuaranteedRegime) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g1 = random_connected_graph(seed + 500, 2, 10);
    const double beta = 1.05 + 0.9 * static_cast<double>(seed % 10) / 10.0;
    const auto r = best_response_job_exact(0, lone_job(g1), type2(beta));
    const std::size_t gamma =
        oracle::domination_number(g1.order(), {g1.edges().begin(), g1.edges().end()});
    EXPECT_TRUE(is_dominating_set(g1, r.strategy)) << seed;
    EXPECT_EQ(r.strategy.size(), gamma) << seed;
    EXPECT_NEAR(r.cost, 2.0 * g1.order() + (beta - 1.0) * gamma, 1e-9) << seed;
  }
}

// Lone Type I job, β > 1: a singleton minimizing Σ(1 + d(v, ω)).
TEST(OracleProperty, TypeOneExpensiveEdgesPickBestSingleton) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g1 = random_connected_graph(seed + 900, 1, 10);
    const double beta = 1.0 + 0.5 + static_cast<double>(seed % 5);
    const auto r = best_response_job_exact(0, lone_job(g1), type1(beta));
    ASSERT_EQ(r.strategy.size(), 1u) << seed;
    const auto d = oracle::floyd(g1.order(), {g1.edges().begin(), g1.edges().end()});
    int best = oracle::kInf;
    for (std::size_t v = 0; v < g1.order(); ++v) {
      int total = 0;
      for (std::size_t w = 0; w < g1.order(); ++w) total += 1 + d[v][w];
      best = std::min(best, total);
    }
    EXPECT_NEAR(r.cost, beta - 1.0 / best, 1e-12) << seed;
  }
}

TEST(IsNashTest, CompleteBipartiteOnK2) {
  const auto s = GameState::with_fixed_g1(complete_graph(2), construct_complete_bipartite(2, 2));
  EXPECT_TRUE(is_nash(s, type2(0.5)).is_nash);
  const auto r = is_nash(s, type2(1.5));
  ASSERT_FALSE(r.is_nash);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->level, Level::kLevel2);
  EXPECT_EQ(r.witness->player, 0u);
  EXPECT_EQ(r.witness->better_strategy.size(), 1u);
  EXPECT_LT(r.witness->better_cost, r.witness->current_cost);
}

TEST(IsNashTest, InfiniteCostWithFiniteDeviation) {
  const auto s = lone_job(path_graph(3));
  const auto r = is_nash(s, type2(1));
  ASSERT_FALSE(r.is_nash);
  EXPECT_TRUE(is_infinite(r.witness->current_cost));
  EXPECT_FALSE(is_infinite(r.witness->better_cost));
}

TEST(IsNashTest, LevelOneScopeFirst) {
  // Nobody bought anything: every fog player has Infinite cost.
  const auto s = GameState::from_profiles({std::vector<VertexSet>(3)}, construct_complete_bipartite(3, 3));
  GameConfig cfg;
  const auto r = is_nash(s, cfg, Scope::kBoth);
  ASSERT_FALSE(r.is_nash);
  EXPECT_EQ(r.witness->level, Level::kLevel1);
  EXPECT_EQ(r.witness->player, 0u);
  EXPECT_TRUE(is_nash(s, type2(0.5), Scope::kLevel2).is_nash);
}

TEST(DynamicsTest, StarConvergesToCenter) {
  const auto s = lone_job(star_graph(4));
  const auto t = best_response_dynamics(s, type2(1.5), {});
  EXPECT_EQ(t.outcome, Outcome::kConverged);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(t.final_state.job_strategy(j), (VertexSet{0}));
  EXPECT_EQ(t.moves.size(), 4u);
  EXPECT_EQ(t.rounds, 2u);
  for (const auto& m : t.moves) EXPECT_LT(m.cost_delta, 0.0);
}

TEST(DynamicsTest, NashStartDoesNotMove) {
  const auto s = GameState::with_fixed_g1(complete_graph(3), construct_complete_bipartite(3, 3));
  const auto t = best_response_dynamics(s, type2(0.5), {});
  EXPECT_EQ(t.outcome, Outcome::kConverged);
  EXPECT_TRUE(t.moves.empty());
  EXPECT_EQ(t.final_state, s);
}

TEST(DynamicsTest, ZeroBudget) {
  const auto s = lone_job(path_graph(3));
  DynamicsOptions opts;
  opts.max_rounds = 0;
  const auto t = best_response_dynamics(s, type2(1.5), opts);
  EXPECT_EQ(t.outcome, Outcome::kBudgetExhausted);
  EXPECT_EQ(t.final_state, s);
  EXPECT_TRUE(t.moves.empty());
}

TEST(DynamicsTest, RandomScheduleIsSeedDeterministic) {
  const auto s = lone_job(path_graph(5));
  DynamicsOptions opts;
  opts.schedule = Schedule::random_permutation(17);
  const auto a = best_response_dynamics(s, type2(1.5), opts);
  const auto b = best_response_dynamics(s, type2(1.5), opts);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(DynamicsTest, BothLevelsReachJointEquilibrium) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const auto s = GameState::from_profiles(random_level1_profile(rng, n), random_level2_profile(rng, n, n));
    GameConfig cfg;
    cfg.alpha = 0.5 + 3.0 * unit_draw(rng);
    cfg.beta = 0.5 + 3.0 * unit_draw(rng);
    DynamicsOptions opts;
    opts.scope = Scope::kBoth;
    opts.schedule = Schedule::random_permutation(rng());
    const auto t = best_response_dynamics(s, cfg, opts);
    for (const auto& m : t.moves) EXPECT_LT(m.cost_delta, 0.0);
    if (t.outcome == Outcome::kConverged) {
      EXPECT_TRUE(is_nash(t.final_state, cfg, Scope::kBoth).is_nash);
    }
  }
}

// Converged traces end in equilibria and every move strictly improves,
// also for the greedy oracle's moves.
TEST(DynamicsProperty, MovesImproveAndConvergedMeansNash) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const Graph g1 = random_connected_graph(rng(), n, n);
    const auto s = GameState::with_fixed_g1(g1, random_level2_profile(rng, n, n));
    const auto cfg = type2(0.25 + 4.0 * unit_draw(rng), rng() % 2 ? TransitPolicy::kFogOnly
                                                                  : TransitPolicy::kFullCombined);
    DynamicsOptions opts;
    opts.oracle = rng() % 3 == 0 ? Oracle::kGreedy : Oracle::kExact;
    opts.schedule = trial % 2 ? Schedule::random_permutation(trial) : Schedule::round_robin();
    const auto t = best_response_dynamics(s, cfg, opts);
    auto state = s;
    for (const auto& m : t.moves) {
      const Cost before = job_player_cost(m.player, state, cfg);
      EXPECT_EQ(state.job_strategy(m.player), m.old_strategy);
      state = state.with_job_strategy(m.player, m.new_strategy);
      const Cost after = job_player_cost(m.player, state, cfg);
      EXPECT_TRUE(cost_less(after, before));
      EXPECT_LT(m.cost_delta, 0.0);
    }
    EXPECT_EQ(state, t.final_state);
    if (t.outcome == Outcome::kConverged && opts.oracle == Oracle::kExact) {
      EXPECT_TRUE(is_nash(t.final_state, cfg).is_nash);
    }
  }
}

TEST(SocialOptimumTest, Examples) {
  auto opt = social_optimum_level2(complete_graph(3), type2(0.5), OptimumMethod::kExhaustiveJoint);
  EXPECT_DOUBLE_EQ(opt.cost, 13.5);
  EXPECT_EQ(opt.profile, construct_complete_bipartite(3, 3));

  const auto fog = type2(1.5, TransitPolicy::kFogOnly);
  opt = social_optimum_level2(complete_graph(3), fog, OptimumMethod::kSeparablePerJob);
  EXPECT_DOUBLE_EQ(opt.cost, 19.5);
  for (const auto& s : opt.profile.strategies) EXPECT_EQ(s.size(), 1u);
  EXPECT_DOUBLE_EQ(
      social_optimum_level2(complete_graph(3), fog, OptimumMethod::kExhaustiveJoint).cost, 19.5);

  opt = social_optimum_level2(Graph(1), type1(1), OptimumMethod::kExhaustiveJoint);
  EXPECT_DOUBLE_EQ(opt.cost, 0.0);
  EXPECT_EQ(opt.profile.strategies, (std::vector<VertexSet>{{0}}));
}

TEST(SocialOptimumTest, Errors) {
  EXPECT_THROW(social_optimum_level2(complete_graph(3), type2(1.5), OptimumMethod::kSeparablePerJob),
               PolicyError);
  EXPECT_THROW(social_optimum_level2(complete_graph(4), type2(1.5), OptimumMethod::kExhaustiveJoint),
               SizeLimitError);
  EXPECT_NO_THROW(social_optimum_level2(complete_graph(8), type2(1.5, TransitPolicy::kFogOnly),
                                        OptimumMethod::kSeparablePerJob));
}

TEST(EnumerateNashTest, Examples) {
  auto has = [](const std::vector<NashProfile>& list, const Level2Profile& p) {
    return std::any_of(list.begin(), list.end(), [&](const auto& ne) { return ne.profile == p; });
  };
  const auto k2 = complete_graph(2);
  EXPECT_TRUE(has(enumerate_nash_level2(k2, type2(0.5)), construct_complete_bipartite(2, 2)));

  const auto pricey = enumerate_nash_level2(k2, type2(10));
  for (const auto& p : {Level2Profile{{{0}, {0}}}, Level2Profile{{{0}, {1}}},
                        Level2Profile{{{1}, {0}}}, Level2Profile{{{1}, {1}}}})
    EXPECT_TRUE(has(pricey, p));

  const auto k1 = enumerate_nash_level2(Graph(1), type2(3));
  ASSERT_EQ(k1.size(), 1u);
  EXPECT_EQ(k1[0].profile.strategies, (std::vector<VertexSet>{{0}}));
}

TEST(EmpiricalPoATest, Examples) {
  auto r = empirical_poa(complete_graph(3), type2(0.5));
  EXPECT_NEAR(r.poa, 1.0, 1e-9);
  EXPECT_DOUBLE_EQ(r.optimum_cost, 13.5);
  EXPECT_GE(r.ne_count, 1u);

  r = empirical_poa(complete_graph(3), type2(1.5, TransitPolicy::kFogOnly));
  EXPECT_NEAR(r.poa, 1.0, 1e-9);

  r = empirical_poa(path_graph(3), type2(3.5));
  EXPECT_LE(r.poa, 2.5 + 1e-12);
  EXPECT_GE(r.poa, 1.0);
}

TEST(EmpiricalPoATest, TypeOneOptimumIsNotPositive) {
  // One edge per job costs 0.1 - 1/3 < 0, so the ratio is meaningless.
  EXPECT_THROW(empirical_poa(complete_graph(2), type1(0.1)), DomainError);
  EXPECT_NO_THROW(empirical_poa(complete_graph(2), type1(0.5)));
}

// Library PoA against the reference enumeration over every joint profile.
TEST(EmpiricalPoAProperty, MatchesReference) {
  const std::vector<Graph> graphs = {Graph(1), complete_graph(2), path_graph(3), complete_graph(3),
                                     star_graph(3)};
  for (const auto& g1 : graphs) {
    for (double beta : {0.5, 1.0, 1.5, 2.5, 3.5, 6.0}) {
      for (auto t : {TransitPolicy::kFogOnly, TransitPolicy::kFullCombined}) {
        const auto cfg = type2(beta, t);
        const auto got = empirical_poa(g1, cfg);
        oracle::Instance base;
        base.n1 = g1.order();
        base.g1.assign(g1.edges().begin(), g1.edges().end());
        base.beta = beta;
        base.fog_only = t == TransitPolicy::kFogOnly;
        const auto want = oracle::price_of_anarchy(base, g1.order());
        EXPECT_EQ(got.ne_count, want.ne_count) << g1 << " beta " << beta;
        EXPECT_NEAR(got.optimum_cost, want.optimum, 1e-9);
        EXPECT_NEAR(got.worst_ne_cost, want.worst_ne, 1e-9);
        EXPECT_NEAR(got.poa, want.ratio(), 1e-9);
        // The worst equilibrium can never beat the optimum.
        EXPECT_GE(got.poa, 1.0 - 1e-12);
      }
    }
  }
}

TEST(ConstructTest, Profiles) {
  EXPECT_EQ(construct_complete_bipartite(2, 2).strategies, (std::vector<VertexSet>{{0, 1}, {0, 1}}));
  EXPECT_EQ(construct_complete_bipartite(3, 1).strategies, (std::vector<VertexSet>{{0, 1, 2}}));
  EXPECT_EQ(interconnection_count(construct_complete_bipartite(4, 5)), 20u);

  EXPECT_EQ(construct_mds_profile(star_graph(5), 5).strategies, std::vector<VertexSet>(5, {0}));
  EXPECT_EQ(construct_mds_profile(path_graph(4), 4).strategies, std::vector<VertexSet>(4, {0, 2}));
  EXPECT_THROW(construct_mds_profile(Graph(3), 3), ValidationError);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g1 = random_connected_graph(seed, 2, 9);
    const std::size_t n = g1.order();
    const auto s = GameState::with_fixed_g1(g1, construct_mds_profile(g1, n));
    const double gamma = static_cast<double>(domination_number(g1));
    for (std::size_t j = 0; j < n; ++j)
      EXPECT_DOUBLE_EQ(job_player_cost(j, s, type2(1.5, TransitPolicy::kFogOnly)),
                       1.5 * gamma + gamma + 2 * (static_cast<double>(n) - gamma));
  }
}

TEST(DiagnosticTest, FlagsExpensiveEdgeSingleton) {
  const auto d = diagnose_dominating_response(path_graph(5), 100);
  EXPECT_TRUE(d.flagged);
  EXPECT_EQ(d.best_response, (VertexSet{2}));
  EXPECT_FALSE(d.is_dominating);
  EXPECT_FALSE(d.within_guaranteed_regime);
  EXPECT_EQ(d.domination_number, 2u);
  EXPECT_DOUBLE_EQ(d.cost, 111.0);

  const auto ok = diagnose_dominating_response(path_graph(5), 1.5);
  EXPECT_FALSE(ok.flagged);
  EXPECT_TRUE(ok.is_minimum_dominating);
  EXPECT_TRUE(ok.within_guaranteed_regime);
}

}  // namespace
}  // namespace efnc
