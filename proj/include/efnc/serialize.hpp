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

// JSON encoding of engine results. Infinite costs are the strings "inf" and
// "-inf"; everything else is a plain JSON number.

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "efnc/bounds.hpp"
#include "efnc/equilibrium.hpp"
#include "efnc/game.hpp"
#include "efnc/graph.hpp"

namespace efnc {

using json = nlohmann::json;

inline json cost_to_json(Cost c) {
  if (std::isinf(c)) return c > 0 ? "inf" : "-inf";
  if (std::isnan(c)) return "nan";
  return c;
}

inline Cost cost_from_json(const json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return kInfiniteCost;
    if (s == "-inf") return -kInfiniteCost;
    if (s == "nan") return std::nan("");
    throw ValidationError("expected a number or \"inf\", got \"" + s + "\"");
  }
  return j.get<double>();
}

inline json costs_to_json(const std::vector<Cost>& v) {
  json out = json::array();
  for (Cost c : v) out.push_back(cost_to_json(c));
  return out;
}

inline std::vector<Cost> costs_from_json(const json& j) {
  std::vector<Cost> out;
  for (const auto& e : j) out.push_back(cost_from_json(e));
  return out;
}

inline json set_to_json(const VertexSet& s) { return s.members(); }
inline VertexSet set_from_json(const json& j) {
  return VertexSet(j.get<std::vector<Vertex>>());
}

inline json sets_to_json(const std::vector<VertexSet>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(set_to_json(s));
  return out;
}

inline std::vector<VertexSet> sets_from_json(const json& j) {
  std::vector<VertexSet> out;
  for (const auto& e : j) out.push_back(set_from_json(e));
  return out;
}

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  return Graph(j.at("n").get<std::size_t>(), edges);
}

inline json to_json(const CostReport& r) {
  return {{"level1_costs", costs_to_json(r.level1_costs)},
          {"level2_costs", costs_to_json(r.level2_costs)},
          {"social_level1", cost_to_json(r.social_level1)},
          {"social_level2", cost_to_json(r.social_level2)},
          {"interconnection_count", r.interconnection_count}};
}

inline CostReport cost_report_from_json(const json& j) {
  CostReport r;
  r.level1_costs = costs_from_json(j.at("level1_costs"));
  r.level2_costs = costs_from_json(j.at("level2_costs"));
  r.social_level1 = cost_from_json(j.at("social_level1"));
  r.social_level2 = cost_from_json(j.at("social_level2"));
  r.interconnection_count = j.at("interconnection_count").get<std::size_t>();
  return r;
}

inline json to_json(const DeviationWitness& w) {
  return {{"level", to_string(w.level)},
          {"player", w.player},
          {"current_cost", cost_to_json(w.current_cost)},
          {"better_strategy", set_to_json(w.better_strategy)},
          {"better_cost", cost_to_json(w.better_cost)}};
}

inline json to_json(const NashResult& r) {
  return {{"is_nash", r.is_nash},
          {"witness", r.witness ? to_json(*r.witness) : json(nullptr)}};
}

inline json to_json(const PoAReport& r) {
  return {{"optimum_cost", cost_to_json(r.optimum_cost)},
          {"optimum_profile", sets_to_json(r.optimum_profile.strategies)},
          {"worst_ne_cost", cost_to_json(r.worst_ne_cost)},
          {"worst_ne_profile", sets_to_json(r.worst_ne_profile.strategies)},
          {"poa", r.poa},
          {"ne_count", r.ne_count}};
}

inline PoAReport poa_report_from_json(const json& j) {
  PoAReport r;
  r.optimum_cost = cost_from_json(j.at("optimum_cost"));
  r.optimum_profile.strategies = sets_from_json(j.at("optimum_profile"));
  r.worst_ne_cost = cost_from_json(j.at("worst_ne_cost"));
  r.worst_ne_profile.strategies = sets_from_json(j.at("worst_ne_profile"));
  r.poa = j.at("poa").get<double>();
  r.ne_count = j.at("ne_count").get<std::size_t>();
  return r;
}

inline json to_json(const Move& m) {
  return {{"round", m.round},
          {"level", to_string(m.level)},
          {"player", m.player},
          {"old_strategy", set_to_json(m.old_strategy)},
          {"new_strategy", set_to_json(m.new_strategy)},
          {"cost_delta", cost_to_json(m.cost_delta)}};
}

inline json to_json(const DynamicsTrace& t) {
  json moves = json::array();
  for (const auto& m : t.moves) moves.push_back(to_json(m));
  json final_state = {{"level2", sets_to_json(t.final_state.level2().strategies)},
                      {"g1", graph_to_json(t.final_state.g1())}};
  if (t.final_state.profile_mode())
    final_state["level1"] = sets_to_json(t.final_state.level1().strategies);
  return {{"moves", moves},
          {"outcome", to_string(t.outcome)},
          {"period", t.period},
          {"rounds", t.rounds},
          {"final_state", final_state}};
}

inline json to_json(const BoundCheck& b) {
  return {{"name", b.name},
          {"lhs", cost_to_json(b.lhs)},
          {"rhs", cost_to_json(b.rhs)},
          {"relation", to_string(b.relation)},
          {"holds", b.holds},
          {"informational", b.informational},
          {"context", b.context}};
}

inline Relation relation_from_string(const std::string& s) {
  if (s == "<=") return Relation::kLe;
  if (s == ">=") return Relation::kGe;
  if (s == "=") return Relation::kEq;
  throw ValidationError("unknown relation \"" + s + "\"");
}

inline BoundCheck bound_check_from_json(const json& j) {
  return {j.at("name").get<std::string>(),
          cost_from_json(j.at("lhs")),
          cost_from_json(j.at("rhs")),
          relation_from_string(j.at("relation").get<std::string>()),
          j.at("holds").get<bool>(),
          j.at("informational").get<bool>(),
          j.at("context").get<std::string>()};
}

inline json to_json(const std::vector<BoundCheck>& checks) {
  json out = json::array();
  for (const auto& b : checks) out.push_back(to_json(b));
  return out;
}

}  // namespace efnc
