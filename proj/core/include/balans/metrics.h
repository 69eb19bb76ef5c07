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

#ifndef BALANS_METRICS_H_
#define BALANS_METRICS_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balans/engine.h"

namespace balans {

inline constexpr double kGapEpsilon = 1e-8;

// |v - v*| / max(|v*|, 1e-8); 1 when v is missing or has the opposite sign.
// Not clamped to [0, 1].
double primal_gap(std::optional<double> v, double v_star);

struct GapSeries {
  std::vector<IncumbentPoint> breakpoints;  // time-ordered
  double v_star = 0.0;
  double horizon = 0.0;
};

// Integral of the primal gap over [0, horizon]. The gap is 1 before the
// first breakpoint and piecewise constant afterwards.
double primal_integral(const GapSeries& series);

struct ArmShare {
  std::string label;
  long count = 0;
  double percentage = 0.0;
};

// Selection shares of the arms in `trace`. Ungrouped rows follow first
// appearance. Grouped rows collapse size variants into operator families and
// always list Crossover, Local Branching, Mutation, Proximity, RENS and RINS
// (then DINS and Random Objective when selected). Empty for an empty trace.
std::vector<ArmShare> arm_distribution(const SearchTrace& trace,
                                       bool group_by_operator_kind);

}  // namespace balans

#endif  // BALANS_METRICS_H_
