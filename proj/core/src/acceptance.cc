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

#include "balans/acceptance.h"

#include <algorithm>
#include <cmath>

#include "balans/error.h"

namespace balans {

AcceptanceCriterion AcceptanceCriterion::hill_climbing() {
  return AcceptanceCriterion();
}

AcceptanceCriterion AcceptanceCriterion::simulated_annealing(double t0,
                                                             double t_end,
                                                             double step) {
  if (!(t_end > 0.0) || !(t0 >= t_end) || !std::isfinite(t0)) {
    throw ConfigError("annealing needs 0 < t_end <= t0");
  }
  if (!(step > 0.0)) throw ConfigError("annealing step must be positive");
  AcceptanceCriterion c;
  c.kind_ = CriterionKind::kSimulatedAnnealing;
  c.t0_ = t0;
  c.t_end_ = t_end;
  c.step_ = step;
  c.temperature_ = t0;
  return c;
}

double AcceptanceCriterion::acceptance_probability(double current,
                                                   double candidate) const {
  const double delta = candidate - current;
  if (delta <= kImprovementTolerance) return 1.0;
  if (kind_ == CriterionKind::kHillClimbing) return 0.0;
  return std::exp(-delta / temperature_);
}

Decision AcceptanceCriterion::decide(double current, double candidate,
                                     double best, Rng& rng) const {
  if (candidate < best - kImprovementTolerance) {
    return {OutcomeKind::kBest, true};
  }
  if (candidate < current - kImprovementTolerance) {
    return {OutcomeKind::kBetter, true};
  }
  bool accepted;
  if (candidate <= current + kImprovementTolerance) {
    accepted = true;
  } else if (kind_ == CriterionKind::kHillClimbing) {
    accepted = false;
  } else {
    accepted = rng.uniform() < acceptance_probability(current, candidate);
  }
  return {accepted ? OutcomeKind::kAccepted : OutcomeKind::kRejected,
          accepted};
}

void AcceptanceCriterion::advance() {
  if (kind_ != CriterionKind::kSimulatedAnnealing) return;
  // Computed from the step count so that rounding does not accumulate.
  ++steps_;
  temperature_ = std::max(t_end_, t0_ - static_cast<double>(steps_) * step_);
}

}  // namespace balans
