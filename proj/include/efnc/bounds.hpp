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

// Closed-form social-cost lower bounds and Price-of-Anarchy bounds for the
// two-level game, and a checker that compares them with measured instances.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "efnc/dominating_set.hpp"
#include "efnc/equilibrium.hpp"
#include "efnc/game.hpp"

namespace efnc {

inline constexpr double kEqualityTolerance = 1e-9;
inline constexpr double kInequalitySlack = 1e-12;

enum class Relation { kLe, kGe, kEq };

inline std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::kLe: return "<=";
    case Relation::kGe: return ">=";
    case Relation::kEq: return "=";
  }
  return "?";
}

/// Verdict of `lhs relation rhs` for one named bound. Informational checks
/// report a comparison without asserting it and never count as failures.
struct BoundCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  Relation relation = Relation::kGe;
  bool holds = false;
  bool informational = false;
  std::string context;

  friend bool operator==(const BoundCheck&, const BoundCheck&) = default;
};

inline bool relation_holds(double lhs, Relation rel, double rhs) {
  if (std::isnan(lhs) || std::isnan(rhs)) return false;
  if (rel == Relation::kEq) {
    if (std::isinf(lhs) || std::isinf(rhs)) return lhs == rhs;
    return std::abs(lhs - rhs) <= kEqualityTolerance * std::max(1.0, std::abs(rhs));
  }
  if (std::isinf(lhs) || std::isinf(rhs)) return rel == Relation::kLe ? lhs <= rhs : lhs >= rhs;
  const double slack = kInequalitySlack * std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return rel == Relation::kLe ? lhs <= rhs + slack : lhs >= rhs - slack;
}

inline BoundCheck make_check(std::string name, double lhs, Relation rel, double rhs,
                             std::string context, bool informational = false) {
  return {std::move(name), lhs, rhs, rel, relation_holds(lhs, rel, rhs), informational,
          std::move(context)};
}

// 2n(n-1) + (alpha-2)m: every non-adjacent ordered pair is at distance >= 2.
inline double level1_lower_bound(std::size_t n, std::size_t m, double alpha) {
  if (n < 1) throw DomainError("level1_lower_bound: n must be >= 1");
  const double nd = static_cast<double>(n);
  return 2.0 * nd * (nd - 1.0) + (alpha - 2.0) * static_cast<double>(m);
}

namespace detail {
inline void check_rcs_inputs(std::span<const double> a, double upper) {
  if (a.empty()) throw DomainError("reverse Cauchy-Schwarz: empty sequence");
  for (double x : a) {
    if (!(x > 0.0)) throw DomainError("reverse Cauchy-Schwarz: a_i must be > 0");
    if (!(x < upper)) throw DomainError("reverse Cauchy-Schwarz: a_i must be < U");
  }
}
}  // namespace detail

/// Σ 1/a_i <= c U² n² / Σ a_i for 0 < a_i < U.
inline BoundCheck rcs_holds(std::span<const double> a, double upper, double c) {
  detail::check_rcs_inputs(a, upper);
  double inv = 0.0, sum = 0.0;
  for (double x : a) {
    inv += 1.0 / x;
    sum += x;
  }
  const double n = static_cast<double>(a.size());
  std::ostringstream ctx;
  ctx << "n=" << a.size() << " U=" << upper << " c=" << c;
  return make_check("reverse_cauchy_schwarz", inv, Relation::kLe, c * upper * upper * n * n / sum,
                    ctx.str());
}

// Least c for which the reverse Cauchy-Schwarz bound holds on this sequence.
inline double rcs_min_constant(std::span<const double> a, double upper) {
  detail::check_rcs_inputs(a, upper);
  double inv = 0.0, sum = 0.0;
  for (double x : a) {
    inv += 1.0 / x;
    sum += x;
  }
  const double n = static_cast<double>(a.size());
  return inv * sum / (upper * upper * n * n);
}

struct Type1Params {
  std::size_t n = 1;  // n1 = n2
  double beta = 1.0;
  double c = 1.0;
  double interconnections = 0.0;  // |I|, real-valued for the saddle point
  std::size_t gamma = 1;
};

/// beta*I - 4cn⁴/(2n² - I), defined for 0 <= I < 2n².
inline double type1_lower_bound(std::size_t n, double beta, double c, double interconnections) {
  const double nd = static_cast<double>(n);
  const double cap = 2.0 * nd * nd;
  if (n < 1) throw DomainError("type1_lower_bound: n must be >= 1");
  if (!(interconnections >= 0.0) || !(interconnections < cap))
    throw DomainError("type1_lower_bound: |I| must lie in [0, 2n^2)");
  return beta * interconnections - 4.0 * c * std::pow(nd, 4) / (cap - interconnections);
}

inline double type1_lower_bound(const Type1Params& p) {
  return type1_lower_bound(p.n, p.beta, p.c, p.interconnections);
}

// d/dI of the Type I lower bound.
inline double type1_lower_bound_slope(std::size_t n, double beta, double c,
                                      double interconnections) {
  const double nd = static_cast<double>(n);
  const double gap = 2.0 * nd * nd - interconnections;
  return beta - 4.0 * c * std::pow(nd, 4) / (gap * gap);
}

struct Type1Optimum {
  double interconnections = 0.0;  // I* = 2n²(1 - sqrt(c/beta))
  double cost = 0.0;              // 2n²(beta - 2 sqrt(c beta))
};

inline Type1Optimum type1_social_optimum(std::size_t n, double beta, double c) {
  if (!(c > 0.0) || !(c <= beta))
    throw DomainError("type1_social_optimum: requires 0 < c <= beta");
  const double nd = static_cast<double>(n);
  return {2.0 * nd * nd * (1.0 - std::sqrt(c / beta)),
          2.0 * nd * nd * (beta - 2.0 * std::sqrt(c * beta))};
}

// 1/(2 - 4 sqrt(c/beta)) for 0 < beta <= 1.
inline double type1_poa_upper(double beta, double c) {
  if (!(beta > 0.0) || beta > 1.0)
    throw DomainError("type1_poa_upper: defined for 0 < beta <= 1");
  if (!(beta > 4.0 * c))
    throw DomainError("type1_poa_upper: degenerate bound, requires beta > 4c");
  return 1.0 / (2.0 - 4.0 * std::sqrt(c / beta));
}

// gamma/(2n(1 - 2 sqrt(c/beta))) for beta > 1.
inline double type1_poa_lower(std::size_t gamma, std::size_t n, double beta, double c) {
  if (!(beta > 1.0)) throw DomainError("type1_poa_lower: defined for beta > 1");
  if (!(beta > 4.0 * c))
    throw DomainError("type1_poa_lower: degenerate bound, requires beta > 4c");
  if (n < 1) throw DomainError("type1_poa_lower: n must be >= 1");
  return static_cast<double>(gamma) /
         (2.0 * static_cast<double>(n) * (1.0 - 2.0 * std::sqrt(c / beta)));
}

// 2n² + (beta-1)I for 0 <= I <= n².
inline double type2_lower_bound(std::size_t n, std::size_t interconnections, double beta) {
  if (interconnections > n * n)
    throw DomainError("type2_lower_bound: |I| must lie in [0, n^2]");
  const double nd = static_cast<double>(n);
  return 2.0 * nd * nd + (beta - 1.0) * static_cast<double>(interconnections);
}

struct Type2PoABound {
  enum class Kind { kExact, kUpper, kUncovered };
  Kind kind = Kind::kUncovered;
  double value = 0.0;  // 1 for kExact, S/2 + 1 for kUpper
  int regime = 0;      // S for kUpper

  friend bool operator==(const Type2PoABound&, const Type2PoABound&) = default;
};

inline std::string_view to_string(Type2PoABound::Kind k) {
  switch (k) {
    case Type2PoABound::Kind::kExact: return "Exact";
    case Type2PoABound::Kind::kUpper: return "Upper";
    case Type2PoABound::Kind::kUncovered: return "Uncovered";
  }
  return "?";
}

/// PoA = 1 for 0 < beta <= 2; PoA <= S/2 + 1 for S < beta <= S+1 with S >= 3;
/// nothing is known for 2 < beta <= 3.
inline Type2PoABound type2_poa_bound(double beta) {
  if (!(beta > 0.0)) throw DomainError("type2_poa_bound: beta must be > 0");
  if (beta <= 2.0) return {Type2PoABound::Kind::kExact, 1.0, 0};
  if (beta <= 3.0) return {Type2PoABound::Kind::kUncovered, 0.0, 0};
  const int s = static_cast<int>(std::ceil(beta)) - 1;
  return {Type2PoABound::Kind::kUpper, s / 2.0 + 1.0, s};
}

/// Evaluates every bound that applies to `state` and reports the verdicts.
///
/// Level-1: measured c(G1) against 2n(n-1)+(alpha-2)|E| (profile mode only).
/// Level-2: measured social cost against the type-specific lower bound.
/// When the joint guard allows, the Type II PoA bound against the empirical
/// PoA on G1, plus (informational) the measured optimum next to
/// 2n² + gamma(beta-1) for 1 < beta <= 2.
inline std::vector<BoundCheck> check_bounds_on_instance(const GameState& state,
                                                        const GameConfig& cfg) {
  cfg.validate();
  if (state.n1() != state.n2())
    throw PolicyError("bound evaluators require n1 = n2");
  const std::size_t n = state.n1();
  std::vector<BoundCheck> out;
  std::ostringstream base_ctx;
  base_ctx << "n=" << n << " alpha=" << cfg.alpha << " beta=" << cfg.beta << ' '
           << to_string(cfg.job_cost_type) << ' ' << to_string(cfg.transit);

  if (state.profile_mode() && n >= 1) {
    std::ostringstream ctx;
    ctx << base_ctx.str() << " |E|=" << state.g1().size();
    out.push_back(make_check("level1_lower_bound", social_cost_level1(state, cfg), Relation::kGe,
                             level1_lower_bound(n, state.g1().size(), cfg.alpha), ctx.str()));
  }
  if (n == 0) return out;

  const std::size_t interconnections = interconnection_count(state.level2());
  const Cost social2 = social_cost_level2(state, cfg);
  std::ostringstream ctx;
  ctx << base_ctx.str() << " |I|=" << interconnections;
  if (cfg.job_cost_type == JobCostType::kTypeII) {
    out.push_back(make_check("type2_lower_bound", social2, Relation::kGe,
                             type2_lower_bound(n, interconnections, cfg.beta), ctx.str()));
  } else {
    out.push_back(make_check("type1_lower_bound", social2, Relation::kGe,
                             type1_lower_bound(n, cfg.beta, cfg.rcs_constant,
                                               static_cast<double>(interconnections)),
                             ctx.str() + " c=" + std::to_string(cfg.rcs_constant)));
  }

  const bool joint_ok = n * n <= kJointGuardBits && is_connected(state.g1());
  if (cfg.job_cost_type != JobCostType::kTypeII || !joint_ok || !(cfg.beta > 0.0)) return out;

  const auto bound = type2_poa_bound(cfg.beta);
  const auto report = empirical_poa(state.g1(), cfg);
  if (bound.kind != Type2PoABound::Kind::kUncovered) {
    out.push_back(make_check("type2_poa_bound", report.poa, Relation::kLe, bound.value,
                             base_ctx.str() + " regime=" + std::string(to_string(bound.kind))));
  }
  if (cfg.beta > 1.0 && cfg.beta <= 2.0) {
    const double gamma = static_cast<double>(domination_number(state.g1()));
    const double nd = static_cast<double>(n);
    out.push_back(make_check("type2_mds_optimum_formula", report.optimum_cost, Relation::kEq,
                             2.0 * nd * nd + gamma * (cfg.beta - 1.0),
                             base_ctx.str() + " gamma=" + std::to_string(static_cast<int>(gamma)),
                             /*informational=*/true));
  }
  return out;
}

inline bool all_hold(std::span<const BoundCheck> checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& b) { return b.informational || b.holds; });
}

}  // namespace efnc
