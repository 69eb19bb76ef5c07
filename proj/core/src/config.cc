// Copyright 2026 The Balans Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "balans/config.h"

#include <fstream>
#include <set>
#include <sstream>

#include "balans/error.h"
#include "json.hpp"

namespace balans {
namespace {

using nlohmann::json;

void check_keys(const json& object, const std::string& where,
                std::initializer_list<const char*> allowed) {
  if (!object.is_object()) throw ConfigError(where + " must be an object");
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& item : object.items()) {
    if (!keys.contains(item.key())) {
      std::string message = "unknown key '" + item.key() + "' in " + where;
      message += " (allowed:";
      for (const char* k : allowed) message += std::string(" ") + k;
      throw ConfigError(message + ")");
    }
  }
}

double number(const json& value, const std::string& where) {
  if (!value.is_number()) throw ConfigError(where + " must be a number");
  return value.get<double>();
}

long integer(const json& value, const std::string& where) {
  if (!value.is_number_integer() && !value.is_number_unsigned()) {
    throw ConfigError(where + " must be an integer");
  }
  return value.get<long>();
}

std::string text(const json& value, const std::string& where) {
  if (!value.is_string()) throw ConfigError(where + " must be a string");
  return value.get<std::string>();
}

std::vector<OperatorSpec> parse_portfolio(const json& value) {
  if (value.is_string()) {
    const std::string name = value.get<std::string>();
    if (name == "paper16") return paper16_portfolio();
    if (name == "all") return all_operator_portfolio();
    throw ConfigError("unknown portfolio preset '" + name +
                      "' (expected paper16 or all)");
  }
  if (!value.is_array()) {
    throw ConfigError("portfolio must be a list of operator labels");
  }
  std::vector<OperatorSpec> out;
  for (const json& label : value) {
    out.push_back(OperatorSpec::parse(text(label, "portfolio entry")));
  }
  return out;
}

RewardScheme parse_rewards(const json& value) {
  if (value.is_string()) {
    const std::string name = value.get<std::string>();
    if (name == "linear") return RewardScheme::linear();
    if (name == "exp") return RewardScheme::exponential();
    if (name == "accept_same") return RewardScheme::accept_same();
    if (name == "accept_better") return RewardScheme::accept_better();
    throw ConfigError("unknown reward preset '" + name + "'");
  }
  if (!value.is_array() || value.size() != 4) {
    throw ConfigError("rewards must be a list of four numbers");
  }
  RewardScheme scheme;
  for (int i = 0; i < 4; ++i) scheme.values[i] = number(value[i], "rewards");
  return scheme;
}

PolicyConfig parse_policy(const json& value) {
  check_keys(value, "policy", {"name", "epsilon", "tau"});
  PolicyConfig policy;
  if (!value.contains("name")) throw ConfigError("policy.name is required");
  const std::string name = text(value["name"], "policy.name");
  if (name == "epsilon_greedy") {
    policy.kind = PolicyKind::kEpsilonGreedy;
  } else if (name == "softmax") {
    policy.kind = PolicyKind::kSoftmax;
  } else if (name == "thompson_sampling") {
    policy.kind = PolicyKind::kThompsonSampling;
  } else {
    throw ConfigError("unknown policy '" + name +
                      "' (expected epsilon_greedy, softmax, thompson_sampling)");
  }
  if (value.contains("epsilon")) {
    policy.epsilon = number(value["epsilon"], "policy.epsilon");
  }
  if (value.contains("tau")) policy.tau = number(value["tau"], "policy.tau");
  return policy;
}

AcceptanceConfig parse_acceptance(const json& value) {
  AcceptanceConfig out;
  if (value.is_string()) {
    const std::string name = value.get<std::string>();
    if (name == "hc") {
      out.kind = CriterionKind::kHillClimbing;
    } else if (name == "sa") {
      out.kind = CriterionKind::kSimulatedAnnealing;
    } else {
      throw ConfigError("acceptance must be hc or sa");
    }
    return out;
  }
  check_keys(value, "acceptance", {"hc", "sa"});
  if (value.size() != 1) {
    throw ConfigError("acceptance needs exactly one of hc, sa");
  }
  if (value.contains("hc")) {
    check_keys(value["hc"], "acceptance.hc", {});
    out.kind = CriterionKind::kHillClimbing;
    return out;
  }
  const json& sa = value["sa"];
  check_keys(sa, "acceptance.sa", {"t0", "t_end", "step"});
  out.kind = CriterionKind::kSimulatedAnnealing;
  if (sa.contains("t0")) out.t0 = number(sa["t0"], "acceptance.sa.t0");
  if (sa.contains("t_end")) out.t_end = number(sa["t_end"], "acceptance.sa.t_end");
  if (sa.contains("step")) out.step = number(sa["step"], "acceptance.sa.step");
  return out;
}

BackendConfig parse_backend(const json& value) {
  if (value.is_string()) {
    if (value.get<std::string>() == "builtin") return BackendConfig::builtin();
    throw ConfigError("backend must be builtin or {external: {command}}");
  }
  check_keys(value, "backend", {"builtin", "external"});
  if (value.size() != 1) {
    throw ConfigError("backend needs exactly one of builtin, external");
  }
  if (value.contains("builtin")) {
    check_keys(value["builtin"], "backend.builtin", {});
    return BackendConfig::builtin();
  }
  const json& ext = value["external"];
  check_keys(ext, "backend.external", {"command"});
  if (!ext.contains("command")) {
    throw ConfigError("backend.external.command is required");
  }
  return BackendConfig::external(text(ext["command"], "backend.external.command"));
}

void parse_budgets(const json& value, RunConfig& config) {
  check_keys(value, "budgets",
             {"initial_s", "initial_nodes", "iteration_s", "lb_iteration_s",
              "iteration_nodes", "random_point_fraction", "oracle_s",
              "oracle_nodes"});
  SearchConfig& s = config.search;
  if (value.contains("initial_s")) {
    s.initial_budget = Seconds(number(value["initial_s"], "budgets.initial_s"));
  }
  if (value.contains("initial_nodes")) {
    s.initial_node_limit = integer(value["initial_nodes"], "budgets.initial_nodes");
  }
  if (value.contains("iteration_s")) {
    s.iteration_budget =
        Seconds(number(value["iteration_s"], "budgets.iteration_s"));
  }
  if (value.contains("lb_iteration_s")) {
    s.lb_iteration_budget =
        Seconds(number(value["lb_iteration_s"], "budgets.lb_iteration_s"));
  }
  if (value.contains("iteration_nodes")) {
    s.iteration_node_limit =
        integer(value["iteration_nodes"], "budgets.iteration_nodes");
  }
  if (value.contains("random_point_fraction")) {
    s.random_point_fraction = number(value["random_point_fraction"],
                                     "budgets.random_point_fraction");
  }
  if (value.contains("oracle_s")) {
    config.oracle_s = number(value["oracle_s"], "budgets.oracle_s");
  }
  if (value.contains("oracle_nodes")) {
    config.oracle_nodes = integer(value["oracle_nodes"], "budgets.oracle_nodes");
  }
}

void parse_stop(const json& value, StopCriteria& stop) {
  check_keys(value, "stop", {"iterations", "wall_time_s"});
  stop = {};
  if (value.contains("iterations")) {
    stop.max_iterations = integer(value["iterations"], "stop.iterations");
  }
  if (value.contains("wall_time_s")) {
    stop.max_wall_time_s = number(value["wall_time_s"], "stop.wall_time_s");
  }
}

const char* policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kEpsilonGreedy:
      return "epsilon_greedy";
    case PolicyKind::kSoftmax:
      return "softmax";
    case PolicyKind::kThompsonSampling:
      return "thompson_sampling";
  }
  return "";
}

}  // namespace

RunConfig parse_run_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  check_keys(doc, "configuration",
             {"portfolio", "policy", "rewards", "acceptance", "backend",
              "budgets", "stop", "seed", "clock"});
  RunConfig config;
  SearchConfig& s = config.search;
  s.portfolio = paper16_portfolio();
  s.stop.max_iterations = 200;
  if (doc.contains("portfolio")) s.portfolio = parse_portfolio(doc["portfolio"]);
  if (doc.contains("policy")) s.policy = parse_policy(doc["policy"]);
  if (doc.contains("rewards")) s.reward_scheme = parse_rewards(doc["rewards"]);
  if (doc.contains("acceptance")) {
    s.acceptance = parse_acceptance(doc["acceptance"]);
  }
  if (doc.contains("backend")) s.backend = parse_backend(doc["backend"]);
  if (doc.contains("budgets")) parse_budgets(doc["budgets"], config);
  if (doc.contains("stop")) parse_stop(doc["stop"], s.stop);
  if (doc.contains("seed")) {
    const long seed = integer(doc["seed"], "seed");
    if (seed < 0) throw ConfigError("seed must be non-negative");
    s.seed = static_cast<std::uint64_t>(seed);
  }
  if (doc.contains("clock")) {
    const std::string clock = text(doc["clock"], "clock");
    if (clock == "wall") {
      s.clock = ClockKind::kWall;
    } else if (clock == "work") {
      s.clock = ClockKind::kWork;
    } else {
      throw ConfigError("clock must be wall or work");
    }
  }
  s.validate();
  if (!(config.oracle_s > 0.0) || config.oracle_nodes <= 0) {
    throw ConfigError("oracle budgets must be positive");
  }
  return config;
}

RunConfig read_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read configuration '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_run_config(buffer.str());
}

std::string to_json(const RunConfig& config) {
  const SearchConfig& s = config.search;
  json doc;
  json portfolio = json::array();
  for (const OperatorSpec& spec : s.portfolio) portfolio.push_back(spec.label);
  doc["portfolio"] = portfolio;
  json policy = {{"name", policy_name(s.policy.kind)}};
  if (s.policy.kind == PolicyKind::kEpsilonGreedy) {
    policy["epsilon"] = s.policy.epsilon;
  }
  if (s.policy.kind == PolicyKind::kSoftmax) policy["tau"] = s.policy.tau;
  doc["policy"] = policy;
  doc["rewards"] = s.reward_scheme.values;
  if (s.acceptance.kind == CriterionKind::kHillClimbing) {
    doc["acceptance"] = "hc";
  } else {
    doc["acceptance"] = {{"sa",
                          {{"t0", s.acceptance.t0},
                           {"t_end", s.acceptance.t_end},
                           {"step", s.acceptance.step}}}};
  }
  if (s.backend.kind == BackendKind::kBuiltin) {
    doc["backend"] = "builtin";
  } else {
    doc["backend"] = {{"external", {{"command", s.backend.command_template}}}};
  }
  json budgets = {{"initial_s", s.initial_budget.count()},
                  {"iteration_s", s.iteration_budget.count()},
                  {"lb_iteration_s", s.lb_iteration_budget.count()},
                  {"iteration_nodes", s.iteration_node_limit},
                  {"random_point_fraction", s.random_point_fraction},
                  {"oracle_s", config.oracle_s},
                  {"oracle_nodes", config.oracle_nodes}};
  if (s.initial_node_limit != std::numeric_limits<long>::max()) {
    budgets["initial_nodes"] = s.initial_node_limit;
  }
  doc["budgets"] = budgets;
  json stop = json::object();
  if (s.stop.max_iterations) stop["iterations"] = *s.stop.max_iterations;
  if (s.stop.max_wall_time_s) stop["wall_time_s"] = *s.stop.max_wall_time_s;
  doc["stop"] = stop;
  doc["seed"] = s.seed;
  doc["clock"] = s.clock == ClockKind::kWall ? "wall" : "work";
  return doc.dump(2) + "\n";
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const char* policy :
       {"e-Greedy_linear", "e-Greedy_exp", "Softmax_linear", "Softmax_exp",
        "TS_accept_better", "TS_accept_same"}) {
    for (const char* acceptance : {"_HC", "_SA"}) {
      out.push_back(std::string(policy) + acceptance);
    }
  }
  return out;
}

void apply_paper_protocol(RunConfig& config) {
  SearchConfig& s = config.search;
  s.initial_budget = Seconds(20.0);
  s.initial_node_limit = std::numeric_limits<long>::max();
  s.iteration_budget = Seconds(60.0);
  s.lb_iteration_budget = Seconds(150.0);
  s.iteration_node_limit = std::numeric_limits<long>::max();
  s.stop = {};
  s.stop.max_wall_time_s = 3600.0;
  s.clock = ClockKind::kWall;
  config.oracle_s = 3600.0;
}

void apply_desk_budgets(RunConfig& config) {
  SearchConfig& s = config.search;
  s.initial_budget = Seconds(20.0);
  s.initial_node_limit = 50;
  s.iteration_budget = Seconds(10.0);
  s.lb_iteration_budget = Seconds(25.0);
  s.iteration_node_limit = 5000;
  s.stop = {};
  s.stop.max_iterations = 200;
  s.clock = ClockKind::kWork;
  config.oracle_s = 600.0;
  config.oracle_nodes = 1000000;
}

RunConfig preset(const std::string& name) {
  RunConfig config;
  SearchConfig& s = config.search;
  s.portfolio = paper16_portfolio();
  apply_desk_budgets(config);

  std::string policy = name;
  if (name.size() > 3 && (name.ends_with("_HC") || name.ends_with("_SA"))) {
    policy = name.substr(0, name.size() - 3);
    s.acceptance.kind = name.ends_with("_HC") ? CriterionKind::kHillClimbing
                                              : CriterionKind::kSimulatedAnnealing;
  } else {
    throw ConfigError("preset name must end in _HC or _SA: '" + name + "'");
  }
  if (policy == "e-Greedy_linear" || policy == "e-Greedy_exp") {
    s.policy.kind = PolicyKind::kEpsilonGreedy;
    s.reward_scheme = policy.ends_with("_exp") ? RewardScheme::exponential()
                                               : RewardScheme::linear();
  } else if (policy == "Softmax_linear" || policy == "Softmax_exp") {
    s.policy.kind = PolicyKind::kSoftmax;
    s.reward_scheme = policy.ends_with("_exp") ? RewardScheme::exponential()
                                               : RewardScheme::linear();
  } else if (policy == "TS_accept_better") {
    s.policy.kind = PolicyKind::kThompsonSampling;
    s.reward_scheme = RewardScheme::accept_better();
  } else if (policy == "TS_accept_same") {
    s.policy.kind = PolicyKind::kThompsonSampling;
    s.reward_scheme = RewardScheme::accept_same();
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
  s.validate();
  return config;
}

}  // namespace balans
