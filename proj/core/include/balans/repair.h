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

#ifndef BALANS_REPAIR_H_
#define BALANS_REPAIR_H_

#include <optional>
#include <string>

#include "balans/bnb.h"
#include "balans/mip.h"

namespace balans {

enum class BackendKind { kBuiltin, kExternal };

// External commands are shell templates with the placeholders {input} (MPS
// path), {output} (solution path), {timelimit} (whole seconds) and the
// optional {warmstart} (solution file of the warm start, empty path when
// there is none).
struct BackendConfig {
  BackendKind kind = BackendKind::kBuiltin;
  std::string command_template;

  static BackendConfig builtin() { return {}; }
  static BackendConfig external(std::string command) {
    return {BackendKind::kExternal, std::move(command)};
  }
  // Throws ConfigError when an external template lacks {input} or {output}.
  void validate() const;
};

struct RepairRequest {
  const MipInstance* base = nullptr;
  SubMipDelta delta;
  SolveLimits limits;  // limits.warm_start is ignored; see warm_start
  // Point of the base instance used as warm start when it is feasible for
  // the sub-MIP.
  std::optional<SolutionState> warm_start;
};

// Re-optimizes the sub-MIP described by the request. The returned `best`
// lives in the base variable space with its objective evaluated on the base
// objective; `sub_objective` carries the value the sub-MIP optimized.
// Throws BackendError when the external command fails or its output cannot
// be used.
MipResult repair(const RepairRequest& request, const BackendConfig& backend);

// Base objective of the result's point, ignoring trailing slack entries.
// Throws std::invalid_argument when the result has no solution.
double original_objective_of(const MipResult& result, const MipInstance& base);

// Extends a base point with the smallest slack values that satisfy the
// delta's added constraints (within slack bounds).
std::vector<double> extend_with_slacks(const MipInstance& base,
                                       const SubMipDelta& delta,
                                       std::span<const double> values);

}  // namespace balans

#endif  // BALANS_REPAIR_H_
