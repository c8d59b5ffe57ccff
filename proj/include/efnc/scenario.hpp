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

// Scenario files: a strict JSON schema describing one experiment.
//
//   {
//     "mode": "poa",                       // gen|cost|dynamics|nash|poa|bounds|verify
//     "graph": {"kind": "complete", "n": 3},   // or {"n": 3, "edges": [[0,1],[1,2]]}
//     "level1": [[1,2],[],[]],             // optional; replaces "graph" (profile mode)
//     "level2": [[0],[1],[2]],             // optional; default: every job empty
//     "n2": 3,                             // optional; default n1
//     "config": {"alpha": 1, "beta": 0.5, "job_cost_type": "TypeII",
//                "rcs_constant": 1, "transit_policy": "FullCombined"},
//     "options": {"scope": "Level2", "schedule": "RoundRobin", "seed": 0,
//                 "max_rounds": 100, "oracle": "Exact",
//                 "method": "ExhaustiveJoint", "relaxed_player_count": false},
//     "sweep": {"parameter": "beta", "values": [0.5, 1.5, 3.5]}
//   }
//
// Unknown keys anywhere are errors.

#pragma once

#include <chrono>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "efnc/bounds.hpp"
#include "efnc/equilibrium.hpp"
#include "efnc/generators.hpp"
#include "efnc/serialize.hpp"
#include "efnc/verify.hpp"

namespace efnc {

class ScenarioError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

enum class Mode { kGen, kCost, kDynamics, kNash, kPoa, kBounds, kVerify };

inline constexpr std::string_view kModeNames[] = {"gen", "cost", "dynamics", "nash",
                                                  "poa", "bounds", "verify"};

inline std::string_view to_string(Mode m) { return kModeNames[static_cast<int>(m)]; }

inline std::optional<Mode> parse_mode(std::string_view s) {
  for (int i = 0; i < 7; ++i)
    if (kModeNames[i] == s) return static_cast<Mode>(i);
  return std::nullopt;
}

struct SweepSpec {
  std::string parameter;
  std::vector<double> values;
};

struct ScenarioSpec {
  Mode mode = Mode::kCost;
  std::optional<GeneratorSpec> generator;
  std::optional<Graph> graph;  // inline edge list
  std::optional<Level1Profile> level1;
  std::optional<Level2Profile> level2;
  std::optional<std::size_t> n2;
  GameConfig config;
  DynamicsOptions dynamics;
  OptimumMethod method = OptimumMethod::kExhaustiveJoint;
  bool relaxed_player_count = false;
  std::optional<SweepSpec> sweep;
  json source;  // the parsed document, echoed into run records
};

namespace detail {

// Documents built in code hold signed integers, parsed text unsigned ones.
inline bool is_index(const json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

// Walks a JSON object, rejecting keys not in `allowed` and reporting the
// dotted path of any offending field.
class FieldReader {
 public:
  FieldReader(const json& obj, std::string path, std::set<std::string> allowed)
      : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) fail(path_.empty() ? "<root>" : path_, "expected an object");
    for (auto it = obj_.begin(); it != obj_.end(); ++it)
      if (!allowed.count(it.key())) fail(child(it.key()), "unknown key");
  }

  bool has(const std::string& key) const { return obj_.contains(key); }
  const json& raw(const std::string& key) const { return obj_.at(key); }
  std::string child(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  double number(const std::string& key, double fallback) const {
    if (!has(key)) return fallback;
    const auto& v = obj_.at(key);
    if (!v.is_number()) fail(child(key), "expected a number");
    return v.get<double>();
  }

  std::uint64_t unsigned_int(const std::string& key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    const auto& v = obj_.at(key);
    if (!is_index(v)) fail(child(key), "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }

  bool boolean(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const auto& v = obj_.at(key);
    if (!v.is_boolean()) fail(child(key), "expected true or false");
    return v.get<bool>();
  }

  std::string string(const std::string& key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    const auto& v = obj_.at(key);
    if (!v.is_string()) fail(child(key), "expected a string");
    return v.get<std::string>();
  }

  template <typename T>
  T choice(const std::string& key, T fallback,
           std::initializer_list<std::pair<std::string_view, T>> options) const {
    if (!has(key)) return fallback;
    const std::string s = string(key, "");
    std::string names;
    for (const auto& [name, value] : options) {
      if (name == s) return value;
      names += (names.empty() ? "" : "|") + std::string(name);
    }
    fail(child(key), "unknown value \"" + s + "\" (expected " + names + ")");
  }

  [[noreturn]] static void fail(const std::string& path, const std::string& what) {
    throw ScenarioError("field '" + path + "': " + what);
  }

 private:
  const json& obj_;
  std::string path_;
};

inline std::vector<VertexSet> parse_strategies(const json& v, const std::string& path) {
  if (!v.is_array()) FieldReader::fail(path, "expected an array of vertex lists");
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& s = v[i];
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!s.is_array()) FieldReader::fail(p, "expected an array of vertex indices");
    std::vector<Vertex> members;
    for (const auto& x : s) {
      if (!is_index(x)) FieldReader::fail(p, "vertex indices must be non-negative integers");
      members.push_back(x.get<Vertex>());
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

/// Validates a scenario document. Throws ScenarioError naming the field.
inline ScenarioSpec parse_scenario(const json& doc) {
  using detail::FieldReader;
  FieldReader top(doc, "", {"mode", "graph", "level1", "level2", "n2", "config", "options", "sweep"});
  ScenarioSpec spec;
  spec.source = doc;

  const std::string mode = top.string("mode", "");
  if (mode.empty()) FieldReader::fail("mode", "required");
  if (auto m = parse_mode(mode)) {
    spec.mode = *m;
  } else {
    FieldReader::fail("mode", "unknown mode \"" + mode + "\"");
  }

  if (top.has("graph")) {
    FieldReader g(top.raw("graph"), "graph", {"kind", "n", "edges", "p", "seed", "require_connected"});
    if (!g.has("n")) FieldReader::fail("graph.n", "required");
    const std::size_t n = g.unsigned_int("n", 0);
    if (g.has("kind")) {
      if (g.has("edges")) FieldReader::fail("graph.edges", "not allowed together with graph.kind");
      GeneratorSpec gen;
      gen.kind = g.choice<GraphKind>("kind", GraphKind::kPath,
                                     {{"path", GraphKind::kPath},
                                      {"cycle", GraphKind::kCycle},
                                      {"star", GraphKind::kStar},
                                      {"complete", GraphKind::kComplete},
                                      {"erdos_renyi", GraphKind::kErdosRenyi}});
      gen.n = n;
      if (gen.kind != GraphKind::kErdosRenyi) {
        for (const char* k : {"p", "seed", "require_connected"})
          if (g.has(k)) FieldReader::fail(g.child(k), "only valid for erdos_renyi");
      }
      gen.p = g.number("p", 0.5);
      if (!(gen.p >= 0.0 && gen.p <= 1.0)) FieldReader::fail("graph.p", "must lie in [0, 1]");
      gen.seed = g.unsigned_int("seed", 0);
      gen.require_connected = g.boolean("require_connected", false);
      if (n < 1) FieldReader::fail("graph.n", "must be >= 1");
      spec.generator = gen;
    } else {
      for (const char* k : {"p", "seed", "require_connected"})
        if (g.has(k)) FieldReader::fail(g.child(k), "only valid for erdos_renyi");
      std::vector<Edge> edges;
      if (g.has("edges")) {
        const auto& e = g.raw("edges");
        if (!e.is_array()) FieldReader::fail("graph.edges", "expected an array of [u, v] pairs");
        for (std::size_t i = 0; i < e.size(); ++i) {
          const auto& pair = e[i];
          if (!pair.is_array() || pair.size() != 2 || !detail::is_index(pair[0]) ||
              !detail::is_index(pair[1]))
            FieldReader::fail("graph.edges[" + std::to_string(i) + "]", "expected [u, v]");
          edges.emplace_back(pair[0].get<Vertex>(), pair[1].get<Vertex>());
        }
      }
      try {
        spec.graph = Graph(n, edges);
      } catch (const ValidationError& e) {
        FieldReader::fail("graph.edges", e.what());
      }
    }
  }

  if (top.has("level1")) {
    if (top.has("graph")) FieldReader::fail("level1", "give either graph or level1, not both");
    spec.level1 = Level1Profile{detail::parse_strategies(top.raw("level1"), "level1")};
    try {
      spec.level1->validate();
    } catch (const ValidationError& e) {
      FieldReader::fail("level1", e.what());
    }
  }
  if (top.has("level2")) spec.level2 = Level2Profile{detail::parse_strategies(top.raw("level2"), "level2")};
  if (top.has("n2")) spec.n2 = top.unsigned_int("n2", 0);

  if (top.has("config")) {
    FieldReader c(top.raw("config"), "config",
                  {"alpha", "beta", "job_cost_type", "rcs_constant", "transit_policy"});
    spec.config.alpha = c.number("alpha", spec.config.alpha);
    spec.config.beta = c.number("beta", spec.config.beta);
    spec.config.rcs_constant = c.number("rcs_constant", spec.config.rcs_constant);
    spec.config.job_cost_type = c.choice<JobCostType>(
        "job_cost_type", spec.config.job_cost_type,
        {{"TypeI", JobCostType::kTypeI}, {"TypeII", JobCostType::kTypeII}});
    spec.config.transit = c.choice<TransitPolicy>(
        "transit_policy", spec.config.transit,
        {{"FogOnly", TransitPolicy::kFogOnly}, {"FullCombined", TransitPolicy::kFullCombined}});
    try {
      spec.config.validate();
    } catch (const ValidationError& e) {
      FieldReader::fail("config", e.what());
    }
  }

  if (top.has("options")) {
    FieldReader o(top.raw("options"), "options",
                  {"scope", "schedule", "seed", "max_rounds", "oracle", "method",
                   "relaxed_player_count"});
    spec.dynamics.scope = o.choice<Scope>(
        "scope", Scope::kLevel2,
        {{"Level1", Scope::kLevel1}, {"Level2", Scope::kLevel2}, {"Both", Scope::kBoth}});
    const auto kind = o.choice<Schedule::Kind>(
        "schedule", Schedule::Kind::kRoundRobin,
        {{"RoundRobin", Schedule::Kind::kRoundRobin},
         {"RandomPermutation", Schedule::Kind::kRandomPermutation}});
    spec.dynamics.schedule = {kind, o.unsigned_int("seed", 0)};
    spec.dynamics.max_rounds = o.unsigned_int("max_rounds", spec.dynamics.max_rounds);
    spec.dynamics.oracle =
        o.choice<Oracle>("oracle", Oracle::kExact, {{"Exact", Oracle::kExact}, {"Greedy", Oracle::kGreedy}});
    spec.method = o.choice<OptimumMethod>(
        "method", OptimumMethod::kExhaustiveJoint,
        {{"ExhaustiveJoint", OptimumMethod::kExhaustiveJoint},
         {"SeparablePerJob", OptimumMethod::kSeparablePerJob}});
    spec.relaxed_player_count = o.boolean("relaxed_player_count", false);
  }

  if (top.has("sweep")) {
    FieldReader s(top.raw("sweep"), "sweep", {"parameter", "values"});
    SweepSpec sw;
    sw.parameter = s.choice<std::string>("parameter", "",
                                         {{"beta", "beta"}, {"alpha", "alpha"}, {"n", "n"}, {"p", "p"}});
    if (sw.parameter.empty()) FieldReader::fail("sweep.parameter", "required");
    if (!s.has("values") || !s.raw("values").is_array())
      FieldReader::fail("sweep.values", "expected an array of numbers");
    for (const auto& v : s.raw("values")) {
      if (!v.is_number()) FieldReader::fail("sweep.values", "expected an array of numbers");
      sw.values.push_back(v.get<double>());
    }
    spec.sweep = std::move(sw);
  }

  if (spec.mode != Mode::kVerify && !spec.graph && !spec.generator && !spec.level1)
    FieldReader::fail("graph", "required (or give level1) for mode " + mode);
  if (spec.mode == Mode::kGen && !spec.graph && !spec.generator)
    FieldReader::fail("graph", "mode gen needs a graph description");
  return spec;
}

// Parses scenario text; syntax errors report line and column.
inline ScenarioSpec parse_scenario_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ScenarioError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                        ": " + e.what());
  }
  return parse_scenario(doc);
}

inline Graph resolve_g1(const ScenarioSpec& spec) {
  if (spec.level1) return build_level1_graph(*spec.level1);
  if (spec.graph) return *spec.graph;
  if (spec.generator) return generate(*spec.generator);
  throw ScenarioError("field 'graph': required");
}

inline GameState resolve_state(const ScenarioSpec& spec) {
  const Graph g1 = resolve_g1(spec);
  Level2Profile level2;
  if (spec.level2) {
    level2 = *spec.level2;
    if (spec.n2 && *spec.n2 != level2.players())
      throw ScenarioError("field 'n2': does not match the number of level2 strategies");
  } else {
    level2.strategies.resize(spec.n2.value_or(g1.order()));
  }
  const auto policy = spec.relaxed_player_count ? PlayerCountPolicy::kRelaxed : PlayerCountPolicy::kEqual;
  try {
    if (spec.level1) return GameState::from_profiles(*spec.level1, level2, policy);
    return GameState::with_fixed_g1(g1, level2, policy);
  } catch (const ValidationError& e) {
    throw ScenarioError(std::string("scenario state: ") + e.what());
  }
}

inline constexpr std::string_view kToolVersion = "efnc 0.1.0";

/// One executed scenario. `payload` is deterministic given the spec; the
/// duration is the only field that varies between runs.
struct RunRecord {
  json spec;
  std::string tool_version{kToolVersion};
  double duration_ms = 0.0;
  std::string mode;
  json payload;
  bool verification_failed = false;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

inline json to_json(const RunRecord& r) {
  return {{"spec", r.spec},
          {"tool_version", r.tool_version},
          {"duration_ms", r.duration_ms},
          {"mode", r.mode},
          {"payload", r.payload},
          {"verification_failed", r.verification_failed}};
}

inline RunRecord run_record_from_json(const json& j) {
  RunRecord r;
  r.spec = j.at("spec");
  r.tool_version = j.at("tool_version").get<std::string>();
  r.duration_ms = j.at("duration_ms").get<double>();
  r.mode = j.at("mode").get<std::string>();
  r.payload = j.at("payload");
  r.verification_failed = j.at("verification_failed").get<bool>();
  return r;
}

inline json to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"checks", checks}, {"all_passed", r.all_passed()}};
}

inline json type2_bound_json(double beta) {
  if (!(beta > 0.0)) return nullptr;
  const auto b = type2_poa_bound(beta);
  return {{"kind", to_string(b.kind)}, {"value", b.value}, {"regime", b.regime}};
}

inline json run_payload(const ScenarioSpec& spec, bool& verification_failed) {
  verification_failed = false;
  switch (spec.mode) {
    case Mode::kVerify: {
      const auto report = run_verify_preset();
      verification_failed = !report.all_passed();
      return to_json(report);
    }
    case Mode::kGen:
      return graph_to_json(resolve_g1(spec));
    case Mode::kCost:
      return to_json(cost_report(resolve_state(spec), spec.config));
    case Mode::kDynamics:
      return to_json(best_response_dynamics(resolve_state(spec), spec.config, spec.dynamics));
    case Mode::kNash: {
      json out = to_json(is_nash(resolve_state(spec), spec.config, spec.dynamics.scope));
      out["scope"] = to_string(spec.dynamics.scope);
      return out;
    }
    case Mode::kPoa: {
      const auto state = resolve_state(spec);
      json out;
      if (spec.method == OptimumMethod::kSeparablePerJob) {
        // The separable optimum scales past the joint guard; the PoA itself
        // still needs the joint enumeration and is null beyond it.
        const auto opt =
            social_optimum_level2(state.g1(), spec.config, OptimumMethod::kSeparablePerJob, state.n2());
        const bool joint_ok = state.n1() * state.n2() <= kJointGuardBits;
        out = joint_ok ? to_json(empirical_poa(state.g1(), spec.config, state.n2()))
                       : json{{"poa", nullptr}};
        out["separable_optimum"] = {{"cost", cost_to_json(opt.cost)},
                                    {"profile", sets_to_json(opt.profile.strategies)}};
      } else {
        out = to_json(empirical_poa(state.g1(), spec.config, state.n2()));
      }
      if (spec.config.job_cost_type == JobCostType::kTypeII)
        out["type2_bound"] = type2_bound_json(spec.config.beta);
      return out;
    }
    case Mode::kBounds: {
      const auto checks = check_bounds_on_instance(resolve_state(spec), spec.config);
      verification_failed = !all_hold(checks);
      return to_json(checks);
    }
  }
  throw ScenarioError("unhandled mode");
}

inline RunRecord run(const ScenarioSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord r;
  r.spec = spec.source;
  r.mode = std::string(to_string(spec.mode));
  r.payload = run_payload(spec, r.verification_failed);
  r.duration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Runs `template_doc` once per value with `parameter` substituted
/// (beta/alpha into config, n/p into the graph generator). The "sweep" key of
/// the template is ignored. Order of the returned records follows `values`.
inline std::vector<RunRecord> sweep(const json& template_doc, const std::string& parameter,
                                    const std::vector<double>& values) {
  std::vector<RunRecord> out;
  for (double v : values) {
    json doc = template_doc;
    doc.erase("sweep");
    if (parameter == "beta" || parameter == "alpha") {
      doc["config"][parameter] = v;
    } else if (parameter == "n" || parameter == "p") {
      if (!doc.contains("graph") || !doc["graph"].contains("kind"))
        throw ScenarioError("field 'sweep.parameter': " + parameter + " sweeps need a graph generator");
      if (parameter == "n") {
        if (!(v >= 1.0) || v != std::floor(v))
          throw ScenarioError("field 'sweep.values': n values must be positive integers");
        doc["graph"]["n"] = static_cast<std::size_t>(v);
        if (doc.contains("level2")) throw ScenarioError("field 'level2': cannot be combined with an n sweep");
        if (doc.contains("n2")) doc["n2"] = static_cast<std::size_t>(v);
      } else {
        doc["graph"]["p"] = v;
      }
    } else {
      throw ScenarioError("field 'sweep.parameter': unknown parameter \"" + parameter + "\"");
    }
    out.push_back(run(parse_scenario(doc)));
  }
  return out;
}

inline std::string emit_json(const RunRecord& r) { return to_json(r).dump(2) + "\n"; }

inline std::string emit_json(const std::vector<RunRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string csv_field(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return quoted + "\"";
}

inline std::string csv_row(std::initializer_list<json> fields) {
  std::string line;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) line += ',';
    line += csv_field(f);
    first = false;
  }
  return line + "\n";
}

}  // namespace detail

/// Flattens tabular payloads: per-player costs, bound checks, verify checks,
/// generated edge lists. Other payloads raise FormatError.
inline std::string emit_csv(const RunRecord& r) {
  using detail::csv_row;
  std::string out;
  const json& p = r.payload;
  if (r.mode == "cost") {
    out = "player,level,cost\n";
    for (std::size_t i = 0; i < p.at("level1_costs").size(); ++i)
      out += csv_row({i, "Level1", p["level1_costs"][i]});
    for (std::size_t j = 0; j < p.at("level2_costs").size(); ++j)
      out += csv_row({j, "Level2", p["level2_costs"][j]});
  } else if (r.mode == "bounds") {
    out = "name,relation,lhs,rhs,holds,informational,context\n";
    for (const auto& b : p)
      out += csv_row({b["name"], b["relation"], b["lhs"], b["rhs"], b["holds"], b["informational"],
                      b["context"]});
  } else if (r.mode == "verify") {
    out = "id,name,passed,detail\n";
    for (const auto& c : p.at("checks")) out += csv_row({c["id"], c["name"], c["passed"], c["detail"]});
  } else if (r.mode == "gen") {
    out = "u,v\n";
    for (const auto& e : p.at("edges")) out += csv_row({e[0], e[1]});
  } else {
    throw FormatError("csv output is not available for mode " + r.mode + "; use json");
  }
  return out;
}

/// Sweep rows: one line per record. Only poa sweeps are tabular.
inline std::string emit_csv(const std::vector<RunRecord>& records, const std::string& parameter,
                            const std::vector<double>& values) {
  std::string out = "parameter,value,poa,optimum_cost,worst_ne_cost,ne_count\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.mode != "poa") throw FormatError("csv sweep output needs mode poa; use json");
    out += detail::csv_row({parameter, values[i], r.payload["poa"], r.payload["optimum_cost"],
                            r.payload["worst_ne_cost"], r.payload["ne_count"]});
  }
  return out;
}

}  // namespace efnc
