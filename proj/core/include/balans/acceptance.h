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

#ifndef BALANS_ACCEPTANCE_H_
#define BALANS_ACCEPTANCE_H_

#include "balans/bandit.h"
#include "balans/random.h"

namespace balans {

// Absolute tolerance for strict improvement.
inline constexpr double kImprovementTolerance = 1e-9;

enum class CriterionKind { kHillClimbing, kSimulatedAnnealing };

struct Decision {
  OutcomeKind outcome = OutcomeKind::kRejected;
  bool accepted = false;
};

// Decides whether a repaired candidate becomes the next state. Objectives are
// minimized.
class AcceptanceCriterion {
 public:
  static AcceptanceCriterion hill_climbing();
  // Throws ConfigError unless 0 < t_end <= t0 and step > 0.
  static AcceptanceCriterion simulated_annealing(double t0 = 20.0,
                                                 double t_end = 1.0,
                                                 double step = 0.1);

  CriterionKind kind() const { return kind_; }
  double temperature() const { return temperature_; }
  double t0() const { return t0_; }
  double t_end() const { return t_end_; }
  double step() const { return step_; }

  // Draws from `rng` only for a worsening candidate under SA.
  Decision decide(double current, double candidate, double best,
                  Rng& rng) const;
  // Probability of accepting `candidate` over `current` when neither is an
  // improvement.
  double acceptance_probability(double current, double candidate) const;

  // One cooling step: T <- max(t_end, T - step). No-op for hill climbing.
  void advance();

 private:
  AcceptanceCriterion() = default;

  CriterionKind kind_ = CriterionKind::kHillClimbing;
  double t0_ = 0.0;
  double t_end_ = 0.0;
  double step_ = 0.0;
  double temperature_ = 0.0;
  long steps_ = 0;
};

}  // namespace balans

#endif  // BALANS_ACCEPTANCE_H_
