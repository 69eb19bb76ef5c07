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

#include "balans/metrics.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "balans/destroy.h"

namespace balans {

double primal_gap(std::optional<double> v, double v_star) {
  if (!v || *v * v_star < 0.0) return 1.0;
  return std::abs(*v - v_star) / std::max(std::abs(v_star), kGapEpsilon);
}

double primal_integral(const GapSeries& series) {
  double total = 0.0;
  double t = 0.0;
  double gap = 1.0;
  for (const IncumbentPoint& p : series.breakpoints) {
    const double until = std::min(p.time, series.horizon);
    if (until > t) {
      total += gap * (until - t);
      t = until;
    }
    gap = primal_gap(p.objective, series.v_star);
  }
  if (series.horizon > t) total += gap * (series.horizon - t);
  return total;
}

std::vector<ArmShare> arm_distribution(const SearchTrace& trace,
                                       bool group_by_operator_kind) {
  std::vector<ArmShare> rows;
  if (trace.events.empty()) return rows;
  if (group_by_operator_kind) {
    for (OperatorKind kind :
         {OperatorKind::kCrossover, OperatorKind::kLocalBranching,
          OperatorKind::kMutation, OperatorKind::kProximity,
          OperatorKind::kRens, OperatorKind::kRins, OperatorKind::kDins,
          OperatorKind::kRandomObjective}) {
      rows.push_back({display_name(kind), 0, 0.0});
    }
  }
  auto row_for = [&rows](const std::string& label) -> ArmShare& {
    for (ArmShare& r : rows) {
      if (r.label == label) return r;
    }
    rows.push_back({label, 0, 0.0});
    return rows.back();
  };
  for (const TraceEvent& e : trace.events) {
    if (group_by_operator_kind) {
      ++row_for(display_name(OperatorSpec::parse(e.arm).kind)).count;
    } else {
      ++row_for(e.arm).count;
    }
  }
  if (group_by_operator_kind) {
    // The six core families always stay; the others only when selected.
    rows.erase(std::remove_if(rows.begin() + 6, rows.end(),
                              [](const ArmShare& r) { return r.count == 0; }),
               rows.end());
  }
  const double total = static_cast<double>(trace.events.size());
  for (ArmShare& r : rows) r.percentage = 100.0 * r.count / total;
  return rows;
}

}  // namespace balans
