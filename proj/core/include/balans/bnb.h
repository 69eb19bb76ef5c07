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

#ifndef BALANS_BNB_H_
#define BALANS_BNB_H_

#include <chrono>
#include <limits>
#include <optional>
#include <vector>

#include "balans/mip.h"

namespace balans {

using Seconds = std::chrono::duration<double>;

enum class MipStatus {
  kOptimal,
  kFeasible,  // stopped at the first feasible solution on request
  kInfeasible,
  kLimitWithIncumbent,
  kLimitNoIncumbent,
};

const char* to_string(MipStatus status);

struct SolveLimits {
  Seconds time_limit{std::numeric_limits<double>::infinity()};
  long node_limit = std::numeric_limits<long>::max();
  bool stop_at_first_feasible = false;
  // Used as the initial incumbent (and cutoff) when feasible.
  std::optional<SolutionState> warm_start;
};

struct IncumbentEvent {
  long node = 0;
  double seconds = 0.0;
  double objective = 0.0;
};

struct MipResult {
  MipStatus status = MipStatus::kLimitNoIncumbent;
  std::optional<SolutionState> best;
  double dual_bound = -kInfinity;
  long nodes_explored = 0;
  Seconds wall_time{0.0};
  // Strictly improving incumbents in discovery order (warm start included
  // as node 0).
  std::vector<IncumbentEvent> incumbents;
  // Set by find_initial when the instance was solved to optimality (or
  // proven infeasible) within the initial budget.
  bool solved_upfront = false;
  // Objective of `best` under the sub-MIP's own objective, when `best` was
  // projected from a sub-MIP with a replaced objective or slacks.
  std::optional<double> sub_objective;

  bool has_solution() const { return best.has_value(); }
};

// LP-based depth-first branch-and-bound. Branches on the most fractional
// discrete variable (ties to the lowest index), down-branch first. Anytime:
// returns the best incumbent when a limit is hit.
MipResult solve_mip(const MipInstance& instance, const SolveLimits& limits = {});

// Initial solution: a budgeted solve_mip. When `node_limit` runs out before
// any feasible point is known, the search continues until the first feasible
// point, the time budget or `hard_node_limit`. solved_upfront is set when
// the budgeted search proves optimality.
MipResult find_initial(const MipInstance& instance, Seconds budget,
                       long node_limit = std::numeric_limits<long>::max(),
                       long hard_node_limit = std::numeric_limits<long>::max());

}  // namespace balans

#endif  // BALANS_BNB_H_
