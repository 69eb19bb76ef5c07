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

#include <gtest/gtest.h>

#include "balans/error.h"
#include "balans/mip.h"
#include "test_util.h"

namespace balans {
namespace {

MipInstance small() {
  MipBuilder b("small");
  const int x = b.add_binary("x", 2.0);
  const int y = b.add_variable("y", 0, 5, VarKind::kInteger, -1.0);
  const int z = b.add_variable("z", -1, 1, VarKind::kContinuous, 3.0);
  b.add_constraint("c", {{y, 1}, {x, 1}}, Relation::kLessEqual, 4);
  b.add_constraint("d", {{z, 1}, {x, -1}}, Relation::kGreaterEqual, -1);
  return b.build();
}

TEST(Mip, ClassifiesIndexSets) {
  const MipInstance m = small();
  EXPECT_EQ(m.binaries(), std::vector<int>({0}));
  EXPECT_EQ(m.integers(), std::vector<int>({1}));
  EXPECT_EQ(m.discrete(), std::vector<int>({0, 1}));
  EXPECT_EQ(m.continuous(), std::vector<int>({2}));
  EXPECT_EQ(m.find_variable("z"), 2);
  EXPECT_EQ(m.find_variable("nope"), -1);
}

TEST(Mip, SortsConstraintTerms) {
  const MipInstance m = small();
  EXPECT_EQ(m.constraint(0).coeffs[0].index, 0);
  EXPECT_EQ(m.constraint(0).coeffs[1].index, 1);
}

TEST(Mip, MaximizeNegatesObjective) {
  MipBuilder b;
  b.add_binary("x", 3.0);
  b.maximize();
  EXPECT_DOUBLE_EQ(b.build().objective()[0], -3.0);
}

TEST(Mip, RejectsBadModels) {
  EXPECT_THROW(MipInstance("m", {{"x", 2, 1, VarKind::kContinuous}}, {}, {0.0}),
               ModelError);
  EXPECT_THROW(MipInstance("m", {{"x", 0, 1, VarKind::kContinuous}},
                           {{"c", {{3, 1.0}}, Relation::kLessEqual, 1}}, {0.0}),
               ModelError);
  EXPECT_THROW(MipInstance("m", {{"x", 0, 1, VarKind::kContinuous}}, {}, {}),
               DimensionError);
}

TEST(Mip, FeasibilityReportsEachKind) {
  const MipInstance m = small();
  EXPECT_TRUE(is_feasible(m, std::vector<double>{1, 3, 0}));
  const auto r = check_feasibility(m, std::vector<double>{0.5, 6, -2});
  bool bound = false, integrality = false;
  for (const Violation& v : r.violations) {
    bound |= v.kind == ViolationKind::kBound;
    integrality |= v.kind == ViolationKind::kIntegrality;
  }
  EXPECT_TRUE(bound);
  EXPECT_TRUE(integrality);
  EXPECT_FALSE(is_feasible(m, std::vector<double>{1, 4, 0}));  // row c
  EXPECT_THROW(evaluate_objective(m, std::vector<double>{1, 2}), DimensionError);
  EXPECT_DOUBLE_EQ(evaluate_objective(m, std::vector<double>{1, 3, 0.5}),
                   2 - 3 + 1.5);
}

TEST(Mip, ApplyDeltaSharesRowsAndKeepsBase) {
  const MipInstance m = small();
  SubMipDelta d;
  d.fixings[0] = 1.0;
  d.bound_changes[1] = {1.0, 2.0};
  d.slack_vars.push_back({0.0, kInfinity, 10.0});
  d.added_constraints.push_back(
      {"extra", {{1, 1.0}, {3, -1.0}}, Relation::kLessEqual, 1.0});
  const MipInstance sub = apply_delta(m, d);
  EXPECT_TRUE(sub.shares_rows_with(m));
  EXPECT_EQ(sub.num_vars(), 4);
  EXPECT_EQ(sub.num_constraints(), 3);
  EXPECT_EQ(sub.variable(0).lower, 1.0);
  EXPECT_EQ(sub.variable(1).upper, 2.0);
  EXPECT_DOUBLE_EQ(sub.objective()[3], 10.0);
  EXPECT_EQ(m.num_vars(), 3);
  EXPECT_EQ(m.variable(0).lower, 0.0);
  EXPECT_EQ(m, small());
}

TEST(Mip, ApplyDeltaRejectsInvalidChanges) {
  const MipInstance m = small();
  SubMipDelta out_of_range;
  out_of_range.fixings[7] = 0.0;
  EXPECT_THROW(apply_delta(m, out_of_range), InvalidDeltaError);
  SubMipDelta widen;
  widen.bound_changes[1] = {-1.0, 9.0};
  EXPECT_THROW(apply_delta(m, widen), InvalidDeltaError);
  SubMipDelta fractional;
  fractional.fixings[1] = 0.5;
  EXPECT_THROW(apply_delta(m, fractional), InvalidDeltaError);
}

TEST(Mip, ObjectiveReplacementAndProjection) {
  const MipInstance m = small();
  SubMipDelta d;
  d.objective_replacement = ObjectiveReplacement{{1, 1, 1}, 5.0};
  const MipInstance sub = apply_delta(m, d);
  EXPECT_DOUBLE_EQ(sub.objective_constant(), 5.0);
  const std::vector<double> point{1, 2, 0, 42};
  EXPECT_DOUBLE_EQ(project_objective(m, point), 2 - 2);
}

TEST(Mip, SolutionStateCachesObjective) {
  const MipInstance m = small();
  const SolutionState s = SolutionState::evaluate(m, {0, 1, 1});
  EXPECT_DOUBLE_EQ(s.objective(), 2.0);
  EXPECT_DOUBLE_EQ(s[2], 1.0);
}

TEST(Mip, IntegralityTolerance) {
  EXPECT_TRUE(is_integral(3.0000001));
  EXPECT_FALSE(is_integral(3.01));
}

}  // namespace
}  // namespace balans
