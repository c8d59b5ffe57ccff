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

// Command-line front end for the two-level network creation game engine.
//
// Exit codes: 0 success, 1 usage or parse error, 2 enumeration guard
// exceeded, 3 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "efnc/efnc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGuard = 2;
constexpr int kExitVerification = 3;

struct Overrides {
  std::optional<double> alpha, beta, rcs_constant;
  std::optional<std::string> job_cost_type, transit, scope, schedule, oracle, method;
  std::optional<std::uint64_t> seed, max_rounds, n2;
  // gen-style graph flags
  std::optional<std::string> kind;
  std::optional<std::size_t> n;
  std::optional<double> p;
  std::optional<std::uint64_t> graph_seed;
  bool connected = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw efnc::ScenarioError("cannot open scenario file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

efnc::json load_document(const std::string& path) {
  if (path.empty()) return efnc::json::object();
  const std::string text = read_input(path);
  // Full validation happens after overrides; this only catches syntax errors
  // with their line numbers.
  try {
    return efnc::json::parse(text);
  } catch (const efnc::json::parse_error&) {
    efnc::parse_scenario_text(text);  // rethrows with line/column
    throw;
  }
}

void apply_overrides(efnc::json& doc, const Overrides& o) {
  auto set = [&doc](const char* section, const char* key, const auto& value) {
    if (value) doc[section][key] = *value;
  };
  set("config", "alpha", o.alpha);
  set("config", "beta", o.beta);
  set("config", "rcs_constant", o.rcs_constant);
  set("config", "job_cost_type", o.job_cost_type);
  set("config", "transit_policy", o.transit);
  set("options", "scope", o.scope);
  set("options", "schedule", o.schedule);
  set("options", "oracle", o.oracle);
  set("options", "method", o.method);
  set("options", "seed", o.seed);
  set("options", "max_rounds", o.max_rounds);
  if (o.n2) doc["n2"] = *o.n2;
  if (o.kind) {
    doc["graph"] = {{"kind", *o.kind}, {"n", o.n.value_or(1)}};
    if (*o.kind == "erdos_renyi") {
      doc["graph"]["p"] = o.p.value_or(0.5);
      doc["graph"]["seed"] = o.graph_seed.value_or(0);
      doc["graph"]["require_connected"] = o.connected;
    }
  } else if (o.n && doc.contains("graph")) {
    doc["graph"]["n"] = *o.n;
  }
}

void add_common_flags(CLI::App* cmd, Overrides& o, std::string& scenario, std::string& format) {
  cmd->add_option("scenario", scenario, "Scenario file (JSON); '-' reads stdin");
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--alpha", o.alpha, "Level-1 edge price");
  cmd->add_option("--beta", o.beta, "Level-2 edge price");
  cmd->add_option("--rcs-constant", o.rcs_constant, "Reverse Cauchy-Schwarz constant c");
  cmd->add_option("--type", o.job_cost_type, "Job cost type")->check(CLI::IsMember({"TypeI", "TypeII"}));
  cmd->add_option("--transit", o.transit, "Level-2 transit policy")
      ->check(CLI::IsMember({"FogOnly", "FullCombined"}));
  cmd->add_option("--scope", o.scope, "Player scope")->check(CLI::IsMember({"Level1", "Level2", "Both"}));
  cmd->add_option("--schedule", o.schedule, "Dynamics schedule")
      ->check(CLI::IsMember({"RoundRobin", "RandomPermutation"}));
  cmd->add_option("--oracle", o.oracle, "Best-response oracle")->check(CLI::IsMember({"Exact", "Greedy"}));
  cmd->add_option("--method", o.method, "Social optimum method")
      ->check(CLI::IsMember({"ExhaustiveJoint", "SeparablePerJob"}));
  cmd->add_option("--seed", o.seed, "Schedule seed");
  cmd->add_option("--max-rounds", o.max_rounds, "Dynamics round budget");
  cmd->add_option("--n2", o.n2, "Number of job players");
  cmd->add_option("--kind", o.kind, "Generate G1 instead of reading it")
      ->check(CLI::IsMember({"path", "cycle", "star", "complete", "erdos_renyi"}));
  cmd->add_option("--n", o.n, "Vertex count for --kind");
  cmd->add_option("--p", o.p, "Edge probability for erdos_renyi");
  cmd->add_option("--graph-seed", o.graph_seed, "Seed for erdos_renyi");
  cmd->add_flag("--connected", o.connected, "Require a connected erdos_renyi graph");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-level edge-fog / job network creation game engine"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(efnc::kToolVersion));

  Overrides overrides;
  std::string scenario;
  std::string format = "json";
  std::string sweep_parameter;
  std::vector<double> sweep_values;

  const std::vector<std::pair<std::string, std::string>> modes = {
      {"gen", "Generate a graph and print its edge list"},
      {"cost", "Per-player and social costs of a profile"},
      {"dynamics", "Run best-response dynamics"},
      {"nash", "Check whether a profile is a Nash equilibrium"},
      {"poa", "Empirical price of anarchy by exhaustive enumeration"},
      {"bounds", "Evaluate every applicable closed-form bound on an instance"},
      {"verify", "Run the built-in verification preset"},
  };
  std::vector<CLI::App*> commands;
  for (const auto& [name, help] : modes) {
    auto* cmd = app.add_subcommand(name, help);
    add_common_flags(cmd, overrides, scenario, format);
    commands.push_back(cmd);
  }
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a scenario once per parameter value (mode defaults to poa)");
  add_common_flags(sweep_cmd, overrides, scenario, format);
  sweep_cmd->add_option("--parameter", sweep_parameter, "Swept parameter")
      ->check(CLI::IsMember({"beta", "alpha", "n", "p"}));
  sweep_cmd->add_option("--values", sweep_values, "Values to sweep")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    efnc::json doc = load_document(scenario);
    apply_overrides(doc, overrides);

    if (sweep_cmd->parsed()) {
      if (!doc.contains("mode")) doc["mode"] = "poa";  // the tabular sweep
      if (sweep_parameter.empty() && doc.contains("sweep")) {
        const auto spec = efnc::parse_scenario(doc);
        sweep_parameter = spec.sweep->parameter;
        if (sweep_values.empty()) sweep_values = spec.sweep->values;
      }
      if (sweep_parameter.empty()) throw efnc::ScenarioError("sweep needs --parameter or a sweep section");
      efnc::parse_scenario(doc);  // validate the template itself
      const auto records = efnc::sweep(doc, sweep_parameter, sweep_values);
      std::cout << (format == "csv" ? efnc::emit_csv(records, sweep_parameter, sweep_values)
                                    : efnc::emit_json(records));
      for (const auto& r : records)
        if (r.verification_failed) return kExitVerification;
      return kExitOk;
    }

    for (std::size_t i = 0; i < commands.size(); ++i)
      if (commands[i]->parsed()) doc["mode"] = modes[i].first;
    const auto spec = efnc::parse_scenario(doc);
    const auto record = efnc::run(spec);
    std::cout << (format == "csv" ? efnc::emit_csv(record) : efnc::emit_json(record));
    if (record.verification_failed) {
      std::cerr << "verification failed\n";
      return kExitVerification;
    }
    return kExitOk;
  } catch (const efnc::SizeLimitError& e) {
    std::cerr << "error: " << e.what()
              << "; use a smaller instance, the Greedy oracle, or SeparablePerJob with FogOnly\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
