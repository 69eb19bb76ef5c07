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

#include <cmath>

#include "balans/simplex.h"
#include "oracles.h"
#include "test_util.h"

namespace balans {
namespace {

TEST(Simplex, KnapsackRelaxation) {
  const LpResult r = solve_lp(testing::corpus("ks3.mps"));
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, -28.0 / 3.0, 1e-9);
  EXPECT_NEAR(r.values[1], 1.0 / 3.0, 1e-9);
}

TEST(Simplex, MatchesVertexEnumeration) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const MipInstance m = testing::random_small_lp(seed, 2 + seed % 4, 1 + seed % 5);
    const auto expected = testing::vertex_enumeration_lp(m);
    const LpResult r = solve_lp(m);
    if (!expected) {
      EXPECT_EQ(r.status, LpStatus::kInfeasible) << "seed " << seed;
      continue;
    }
    ASSERT_EQ(r.status, LpStatus::kOptimal) << "seed " << seed;
    EXPECT_NEAR(r.objective, *expected, 1e-7 * std::max(1.0, std::abs(*expected)))
        << "seed " << seed;
    EXPECT_TRUE(is_feasible(m, r.values, 1e-6)) << "seed " << seed;
  }
}

TEST(Simplex, DetectsInfeasibleAndUnbounded) {
  MipBuilder b;
  const int x = b.add_variable("x", 0, 10, VarKind::kContinuous, 1.0);
  b.add_constraint("lo", {{x, 1}}, Relation::kGreaterEqual, 6);
  b.add_constraint("hi", {{x, 1}}, Relation::kLessEqual, 5);
  EXPECT_EQ(solve_lp(b.build()).status, LpStatus::kInfeasible);

  MipBuilder u;
  const int y = u.add_variable("y", 0, kInfinity, VarKind::kContinuous, -1.0);
  const int z = u.add_variable("z", 0, kInfinity, VarKind::kContinuous, 0.0);
  u.add_constraint("c", {{y, 1}, {z, -1}}, Relation::kLessEqual, 1);
  EXPECT_EQ(solve_lp(u.build()).status, LpStatus::kUnbounded);
}

TEST(Simplex, RowDualsSatisfyStrongDuality) {
  // min -5x1 - 4x2 - 3x3 with one capacity row: y * 4 + bound terms = z.
  const MipInstance m = testing::corpus("ks3.mps");
  const LpResult r = solve_lp(m);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  ASSERT_EQ(r.row_duals.size(), 1u);
  // x2 is basic and fractional, so its reduced cost vanishes: c2 = y * a2.
  EXPECT_NEAR(r.row_duals[0], -4.0 / 3.0, 1e-9);
}

TEST(Simplex, WarmResolveMatchesFreshSolve) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const MipInstance m = testing::random_mixed_instance(seed, 8, 4, 3);
    BoundedSimplex warm(m);
    if (warm.solve() != LpStatus::kOptimal) continue;
    // Tighten a few bounds and compare against a model built with them.
    std::vector<Variable> vars = m.variables();
    for (int j = 0; j < m.num_vars(); j += 3) {
      const double mid = std::floor((vars[j].lower + vars[j].upper) / 2);
      vars[j].upper = mid;
      warm.set_bounds(j, vars[j].lower, mid);
    }
    const MipInstance tightened(m.name(), vars, m.constraints(), m.objective(),
                                m.objective_constant());
    const LpResult fresh = solve_lp(tightened);
    const LpStatus status = warm.solve();
    ASSERT_EQ(status, fresh.status) << "seed " << seed;
    if (status == LpStatus::kOptimal) {
      EXPECT_NEAR(warm.objective(), fresh.objective, 1e-7) << "seed " << seed;
    }
  }
}

TEST(Simplex, CutoffStopsEarly) {
  const MipInstance m = testing::corpus("ks3.mps");
  BoundedSimplex lp(m);
  ASSERT_EQ(lp.solve(), LpStatus::kOptimal);
  // Forcing x1 = 0 raises the bound to -7; a cutoff below it prunes.
  lp.set_bounds(0, 0, 0);
  EXPECT_EQ(lp.solve(100000, -7.5), LpStatus::kCutoff);
  lp.set_bounds(0, 0, 1);
  EXPECT_EQ(lp.solve(100000, -7.5), LpStatus::kOptimal);
  EXPECT_NEAR(lp.objective(), -28.0 / 3.0, 1e-9);
}

TEST(Simplex, FixedColumnsAreEliminated) {
  const MipInstance m = testing::corpus("fixedint.mps");
  BoundedSimplex lp(m);
  EXPECT_LT(lp.num_structural(), m.num_vars());
  ASSERT_EQ(lp.solve(), LpStatus::kOptimal);
  const std::vector<double> x = lp.primal();
  for (int j = 0; j < m.num_vars(); ++j) {
    if (m.variable(j).lower == m.variable(j).upper) {
      EXPECT_EQ(x[j], m.variable(j).lower);
    }
  }
}

TEST(Simplex, BoundsExcludingFixedValueAreInfeasible) {
  const MipInstance m = testing::corpus("fixedint.mps");
  const int f = m.find_variable("f");
  ASSERT_GE(f, 0);
  BoundedSimplex lp(m);
  lp.set_bounds(f, 2, 3);
  EXPECT_EQ(lp.solve(), LpStatus::kInfeasible);
}

TEST(Simplex, IterationLimit) {
  const MipInstance m = testing::random_small_lp(7, 5, 5);
  BoundedSimplex lp(m);
  const LpStatus s = lp.solve(0);
  EXPECT_TRUE(s == LpStatus::kIterationLimit || s == LpStatus::kOptimal ||
              s == LpStatus::kInfeasible);
  EXPECT_EQ(lp.iterations(), 0);
}

}  // namespace
}  // namespace balans
