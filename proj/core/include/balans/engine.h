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

#ifndef BALANS_ENGINE_H_
#define BALANS_ENGINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "balans/acceptance.h"
#include "balans/bandit.h"
#include "balans/bnb.h"
#include "balans/destroy.h"
#include "balans/repair.h"

namespace balans {

struct AcceptanceConfig {
  CriterionKind kind = CriterionKind::kSimulatedAnnealing;
  double t0 = 20.0;
  double t_end = 1.0;
  double step = 0.1;

  AcceptanceCriterion make() const;
};

struct StopCriteria {
  std::optional<long> max_iterations;
  std::optional<double> max_wall_time_s;
};

// kWall measures real time. kWork charges kWorkUnitSeconds per branch-and-
// bound node (plus one per repair call) so that traces, time budgets and
// stopping are reproducible.
enum class ClockKind { kWall, kWork };

inline constexpr double kWorkUnitSeconds = 1e-3;

struct SearchConfig {
  std::vector<OperatorSpec> portfolio;
  PolicyConfig policy;
  RewardScheme reward_scheme = RewardScheme::accept_same();
  AcceptanceConfig acceptance;
  BackendConfig backend;
  Seconds initial_budget{20.0};
  long initial_node_limit = std::numeric_limits<long>::max();
  Seconds iteration_budget{60.0};
  Seconds lb_iteration_budget{150.0};
  long iteration_node_limit = 5000;
  // Share of the iteration budget given to the random-point solve used by
  // crossover.
  double random_point_fraction = 0.1;
  StopCriteria stop;
  std::uint64_t seed = 0;
  ClockKind clock = ClockKind::kWall;

  // Throws ConfigError on invalid settings.
  void validate() const;
};

// Portfolio presets.
std::vector<OperatorSpec> paper16_portfolio();
std::vector<OperatorSpec> all_operator_portfolio();

struct TraceEvent {
  long iteration = 0;
  double time = 0.0;  // seconds since start, on the configured clock
  std::string arm;
  std::optional<double> candidate_obj;  // base objective of the repaired point
  OutcomeKind outcome = OutcomeKind::kRejected;
  bool accepted = false;
  double current_obj = 0.0;
  double best_obj = 0.0;
  double temperature = 0.0;
  std::string note;  // operator or backend failure, if any
};

struct IncumbentPoint {
  double time = 0.0;
  double objective = 0.0;
};

struct SearchTrace {
  std::optional<double> time_to_first_feasible;
  std::optional<double> initial_objective;
  std::vector<TraceEvent> events;
  // Strictly improving best objectives over time, initial phase included.
  std::vector<IncumbentPoint> incumbents;
};

enum class SearchStatus { kCompleted, kSolvedUpfront, kNoInitialFeasible, kAborted };

const char* to_string(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::kCompleted;
  std::optional<SolutionState> best;
  SearchTrace trace;
  std::vector<ArmId> arms;
  std::vector<ArmStats> arm_stats;
  long iterations = 0;
  double elapsed = 0.0;  // on the configured clock
  long root_lp_solves = 0;
  std::string diagnostic;
};

// Admissible arms of `portfolio` on `instance`. Throws ConfigError when none
// is left or labels repeat.
std::vector<ArmId> filter_portfolio(const MipInstance& instance,
                                    const std::vector<OperatorSpec>& portfolio);

// Outcome of one iteration, as decided by the acceptance criterion.
OutcomeKind classify_outcome(const AcceptanceCriterion& criterion,
                             double current, double candidate, double best,
                             Rng& rng);

// Adaptive large neighborhood search.
SearchResult solve(const MipInstance& instance, const SearchConfig& config);

}  // namespace balans

#endif  // BALANS_ENGINE_H_
