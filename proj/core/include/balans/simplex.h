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

#ifndef BALANS_SIMPLEX_H_
#define BALANS_SIMPLEX_H_

#include <memory>
#include <vector>

#include "balans/mip.h"

namespace balans {

// kCutoff: the LP bound already exceeds the cutoff passed to solve().
enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit, kCutoff };

const char* to_string(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::kIterationLimit;
  std::vector<double> values;     // structural values, when optimal
  double objective = 0.0;         // c'x + constant, when optimal
  std::vector<double> row_duals;  // one per constraint, when optimal
  long iterations = 0;
};

// Solves the LP relaxation of `instance` (integrality dropped).
LpResult solve_lp(const MipInstance& instance, long iteration_limit = 100000);

// Bounded-variable simplex on a dense compact tableau over
//
//   min c'x  s.t.  A x - s = 0,  l <= x <= u,  row_lo <= s <= row_up
//
// with one logical column s_i per row, so the all-logical basis is always a
// valid starting point. Only B^-1 N is stored (rows x nonbasic columns),
// which keeps tall models cheap. Phase 1 minimizes the sum of bound
// violations of the basic variables and can start from any basis. Dantzig
// pricing switches to Bland's rule after a run of degenerate pivots.
//
// When the current basis is dual feasible (always the case after an optimal
// solve followed by bound changes on boxed columns) solve() runs the dual
// simplex instead, which usually needs only a handful of pivots and can stop
// early once the objective passes a cutoff. Branch-and-bound relies on this:
// one object is re-solved node after node with different bounds.
//
// Variables fixed at construction (lower == upper) are folded into the row
// bounds and rows left without free variables are dropped, so the tableau
// only spans the free part of the model. Public indices always refer to the
// instance's variables and constraints.
class BoundedSimplex {
 public:
  explicit BoundedSimplex(const MipInstance& instance);

  // Tableau dimensions after the reduction.
  int num_rows() const { return rows_; }
  int num_structural() const { return structural_; }

  double lower(int j) const;
  double upper(int j) const;
  // Replaces the bounds of variable j; the current basis is kept. Variables
  // fixed at construction stay fixed: bounds excluding their value make the
  // problem infeasible, anything else is ignored.
  void set_bounds(int j, double lower, double upper);

  // With a finite cutoff, returns kCutoff as soon as the LP bound is known to
  // exceed it.
  LpStatus solve(long iteration_limit = 100000, double cutoff = kInfinity);
  LpStatus status() const { return status_; }

  std::vector<double> primal() const;
  double objective() const;
  std::vector<double> row_duals() const;
  // Reduced cost of every variable at the current basis; 0 for basic and
  // fixed variables.
  std::vector<double> reduced_costs() const;
  // Pivots performed by the most recent solve().
  long iterations() const { return iterations_; }

 private:
  enum class ColStatus : unsigned char { kBasic, kAtLower, kAtUpper, kFree };

  struct Problem {
    std::vector<double> a;  // rows x structural, row-major
    // The same matrix by rows, sparse.
    std::vector<int> row_start;
    std::vector<int> row_index;
    std::vector<double> row_value;
    std::vector<double> cost;
    double constant = 0.0;
  };

  // Columns k < structural_ are variables, the rest are row logicals.
  double cost(int k) const {
    return k < structural_ ? problem_->cost[k] : 0.0;
  }
  // Tableau entry of row i and nonbasic slot s.
  double& tab(int i, int s) { return tableau_[std::size_t(i) * slots_ + s]; }
  double tab(int i, int s) const {
    return tableau_[std::size_t(i) * slots_ + s];
  }
  double* row_ptr(int i) { return &tableau_[std::size_t(i) * slots_]; }
  const double* row_ptr(int i) const {
    return &tableau_[std::size_t(i) * slots_];
  }

  void place_nonbasic(int k);
  void shift_nonbasic(int slot, double delta);
  void refactor();
  void recompute_basic_values();
  bool residuals_ok() const;
  void pivot(int row, int slot);
  void compute_reduced_costs(std::vector<double>& reduced) const;
  bool eligible_wrong_side(int slot, double d) const;
  bool make_dual_feasible(const std::vector<double>& reduced);
  bool dual_feasible(const std::vector<double>& reduced) const;
  LpStatus dual_solve(long iteration_limit, double cutoff,
                      std::vector<double>& reduced);
  LpStatus primal_solve(long iteration_limit);
  double raw_objective() const;

  std::shared_ptr<const Problem> problem_;
  int num_vars_ = 0;
  int num_constraints_ = 0;
  std::vector<int> col_of_;     // variable -> column, -1 when fixed
  std::vector<int> var_of_;     // structural column -> variable
  std::vector<int> source_row_;  // tableau row -> constraint
  std::vector<double> fixed_;   // value of each variable fixed up front
  bool fixed_infeasible_ = false;
  int rows_ = 0;
  int structural_ = 0;
  int cols_ = 0;   // structural + logical columns
  int slots_ = 0;  // nonbasic columns, always structural_
  std::vector<double> tableau_;  // rows x slots: x_B + T x_N = 0
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<double> x_;
  std::vector<ColStatus> col_status_;
  std::vector<int> basis_;     // row -> column
  std::vector<int> nonbasic_;  // slot -> column
  std::vector<int> row_of_;    // column -> row, -1 when nonbasic
  std::vector<int> slot_of_;   // column -> slot, -1 when basic
  std::vector<int> pivot_nz_;  // scratch for pivot()
  LpStatus status_ = LpStatus::kIterationLimit;
  long iterations_ = 0;
};

}  // namespace balans

#endif  // BALANS_SIMPLEX_H_
