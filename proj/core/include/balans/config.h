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

#ifndef BALANS_CONFIG_H_
#define BALANS_CONFIG_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "balans/engine.h"

namespace balans {

// A run configuration file: the search settings plus the reference-solve
// budget used by benchmarks.
struct RunConfig {
  SearchConfig search;
  double oracle_s = 600.0;
  long oracle_nodes = 1000000;
};

// JSON document:
//   portfolio: ["crossover", "lb_10", ...] or "paper16" / "all"
//   policy: {name: epsilon_greedy|softmax|thompson_sampling, epsilon, tau}
//   rewards: [best, better, accept, reject] or
//            "linear" / "exp" / "accept_same" / "accept_better"
//   acceptance: "hc" | "sa" | {hc: {}} | {sa: {t0, t_end, step}}
//   backend: "builtin" | {external: {command}}
//   budgets: {initial_s, initial_nodes, iteration_s, lb_iteration_s,
//             iteration_nodes, random_point_fraction, oracle_s, oracle_nodes}
//   stop: {iterations, wall_time_s}
//   seed: integer
//   clock: "wall" | "work"
// Omitted keys keep their defaults; unknown keys raise ConfigError. The
// result is validated.
RunConfig parse_run_config(std::string_view json_text);
RunConfig read_run_config(const std::filesystem::path& path);

// Serializes every field; parse_run_config(to_json(c)) reproduces c.
std::string to_json(const RunConfig& config);

// Named presets: the learning-policy rows (e-Greedy_linear, e-Greedy_exp,
// Softmax_linear, Softmax_exp, TS_accept_better, TS_accept_same) crossed with
// the _HC / _SA suffix, on the paper16 portfolio with desk budgets.
std::vector<std::string> preset_names();
RunConfig preset(const std::string& name);

// Budgets of the original protocol: 20 s initial, 60 s per iteration, 150 s
// for local branching, 3600 s total.
void apply_paper_protocol(RunConfig& config);
// Node-limited budgets: 5000 nodes per iteration, 200 iterations, work clock.
void apply_desk_budgets(RunConfig& config);

}  // namespace balans

#endif  // BALANS_CONFIG_H_
