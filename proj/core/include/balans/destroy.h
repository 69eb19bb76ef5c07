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

#ifndef BALANS_DESTROY_H_
#define BALANS_DESTROY_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "balans/mip.h"
#include "balans/random.h"

namespace balans {

enum class OperatorKind {
  kCrossover,
  kDins,
  kLocalBranching,
  kMutation,
  kProximity,
  kRandomObjective,
  kRens,
  kRins,
};

// Display name of the operator family ("Local Branching", "RENS", ...).
const char* display_name(OperatorKind kind);

struct OperatorSpec {
  OperatorKind kind = OperatorKind::kMutation;
  std::optional<double> delta;  // destroy size, for the sized operators
  std::string label;

  // Parses labels such as "crossover", "dins", "random_objective", "lb_10",
  // "mutation_25", "proximity_05", "rens_50", "rins_75". The numeric suffix
  // is a percentage. Throws ConfigError on anything else.
  static OperatorSpec parse(const std::string& label);
};

// Slack penalty in the proximity objective.
inline constexpr double kProximitySlackPenalty = 100.0;

struct Applicability {
  bool requires_binaries = false;
  bool requires_integers_or_binaries = false;
  bool works_on_any = false;

  bool admits(const MipInstance& instance) const;
};

Applicability applicability(OperatorKind kind);

struct DestroyContext {
  const MipInstance* base = nullptr;
  const SolutionState* previous = nullptr;  // x_{t-1}
  const std::vector<double>* root_lp = nullptr;
  Rng* rng = nullptr;
  // Returns a random feasible point (crossover); nullopt on failure.
  std::function<std::optional<SolutionState>()> random_feasible_provider;
};

SubMipDelta crossover(DestroyContext& ctx);
SubMipDelta dins(DestroyContext& ctx);
SubMipDelta local_branching(DestroyContext& ctx, const OperatorSpec& spec);
SubMipDelta mutation(DestroyContext& ctx, const OperatorSpec& spec);
SubMipDelta proximity(DestroyContext& ctx, const OperatorSpec& spec);
SubMipDelta random_objective(DestroyContext& ctx);
SubMipDelta rens(DestroyContext& ctx, const OperatorSpec& spec);
SubMipDelta rins(DestroyContext& ctx, const OperatorSpec& spec);

// Dispatches on spec.kind. Throws OperatorError when the operator cannot
// build a neighborhood (e.g. crossover without a random point).
SubMipDelta destroy(const OperatorSpec& spec, DestroyContext& ctx);

// Number of destroyed elements: round-half-up of delta * size, clamped to
// [1, size] (0 for an empty set).
int destroy_count(double delta, int size);

// Range [lo, hi] of the local branching flip budget for |B| = num_binaries.
std::pair<int, int> flip_budget_range(double delta, int num_binaries);

// Discrete variables left unfixed by `delta`, ascending.
std::vector<int> destroy_set(const SubMipDelta& delta,
                             const MipInstance& base);

}  // namespace balans

#endif  // BALANS_DESTROY_H_
