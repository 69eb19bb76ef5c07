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

#include "balans/simplex.h"

#include <algorithm>
#include <cmath>

namespace balans {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kPrimalTol = 1e-9;
constexpr double kDualTol = 1e-9;
constexpr int kDegenerateRunBeforeBland = 50;
constexpr int kMaxRefactorsPerSolve = 3;

}  // namespace

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration_limit";
    case LpStatus::kCutoff:
      return "cutoff";
  }
  return "unknown";
}

BoundedSimplex::BoundedSimplex(const MipInstance& instance)
    : num_vars_(instance.num_vars()),
      num_constraints_(instance.num_constraints()) {
  col_of_.assign(num_vars_, -1);
  fixed_.assign(num_vars_, 0.0);
  double constant = instance.objective_constant();
  for (int j = 0; j < num_vars_; ++j) {
    const Variable& v = instance.variable(j);
    if (v.lower == v.upper) {
      fixed_[j] = v.lower;
      constant += instance.objective()[j] * v.lower;
    } else {
      col_of_[j] = static_cast<int>(var_of_.size());
      var_of_.push_back(j);
    }
  }
  // Rows with at least one free variable; the others must hold as constants.
  std::vector<double> offset;
  for (int i = 0; i < num_constraints_; ++i) {
    const LinearConstraint& row = instance.constraint(i);
    bool free = false;
    double fixed_activity = 0.0;
    double scale = 1.0;
    for (const Term& t : row.coeffs) {
      if (col_of_[t.index] >= 0) {
        free = true;
      } else {
        fixed_activity += t.coef * fixed_[t.index];
        scale = std::max(scale, std::abs(t.coef * fixed_[t.index]));
      }
    }
    if (free) {
      source_row_.push_back(i);
      offset.push_back(fixed_activity);
      continue;
    }
    const double tol = 1e-9 * std::max(scale, std::abs(row.rhs));
    const bool ok =
        (row.relation != Relation::kLessEqual || fixed_activity <= row.rhs + tol) &&
        (row.relation != Relation::kGreaterEqual ||
         fixed_activity >= row.rhs - tol) &&
        (row.relation != Relation::kEqual ||
         std::abs(fixed_activity - row.rhs) <= tol);
    if (!ok) fixed_infeasible_ = true;
  }

  rows_ = static_cast<int>(source_row_.size());
  structural_ = static_cast<int>(var_of_.size());
  cols_ = structural_ + rows_;
  slots_ = structural_;
  auto problem = std::make_shared<Problem>();
  problem->a.assign(std::size_t(rows_) * structural_, 0.0);
  problem->cost.resize(structural_);
  for (int k = 0; k < structural_; ++k) {
    problem->cost[k] = instance.objective()[var_of_[k]];
  }
  problem->constant = constant;

  lower_.resize(cols_);
  upper_.resize(cols_);
  x_.assign(cols_, 0.0);
  col_status_.resize(cols_);
  basis_.resize(rows_);
  nonbasic_.resize(slots_);
  row_of_.assign(cols_, -1);
  slot_of_.assign(cols_, -1);
  tableau_.assign(std::size_t(rows_) * slots_, 0.0);

  for (int k = 0; k < structural_; ++k) {
    lower_[k] = instance.variable(var_of_[k]).lower;
    upper_[k] = instance.variable(var_of_[k]).upper;
    nonbasic_[k] = k;
    slot_of_[k] = k;
    place_nonbasic(k);
  }
  problem->row_start.push_back(0);
  for (int i = 0; i < rows_; ++i) {
    const LinearConstraint& row = instance.constraint(source_row_[i]);
    for (const Term& t : row.coeffs) {
      const int k = col_of_[t.index];
      if (k < 0) continue;
      problem->a[std::size_t(i) * structural_ + k] = t.coef;
      problem->row_index.push_back(k);
      problem->row_value.push_back(t.coef);
      // All-logical basis: B = -I, so B^-1 N = -A.
      tab(i, k) = -t.coef;
    }
    const int k = structural_ + i;
    const double rhs = row.rhs - offset[i];
    switch (row.relation) {
      case Relation::kLessEqual:
        lower_[k] = -kInfinity;
        upper_[k] = rhs;
        break;
      case Relation::kGreaterEqual:
        lower_[k] = rhs;
        upper_[k] = kInfinity;
        break;
      case Relation::kEqual:
        lower_[k] = rhs;
        upper_[k] = rhs;
        break;
    }
    basis_[i] = k;
    row_of_[k] = i;
    col_status_[k] = ColStatus::kBasic;
    problem->row_start.push_back(static_cast<int>(problem->row_index.size()));
  }
  problem_ = std::move(problem);
  recompute_basic_values();
}

double BoundedSimplex::lower(int j) const {
  const int k = col_of_[j];
  return k < 0 ? fixed_[j] : lower_[k];
}

double BoundedSimplex::upper(int j) const {
  const int k = col_of_[j];
  return k < 0 ? fixed_[j] : upper_[k];
}

void BoundedSimplex::place_nonbasic(int k) {
  if (std::isfinite(lower_[k])) {
    x_[k] = lower_[k];
    col_status_[k] = ColStatus::kAtLower;
  } else if (std::isfinite(upper_[k])) {
    x_[k] = upper_[k];
    col_status_[k] = ColStatus::kAtUpper;
  } else {
    x_[k] = 0.0;
    col_status_[k] = ColStatus::kFree;
  }
}

// Moves the nonbasic column in `slot` by delta and updates the basics.
void BoundedSimplex::shift_nonbasic(int slot, double delta) {
  if (delta == 0.0) return;
  x_[nonbasic_[slot]] += delta;
  for (int i = 0; i < rows_; ++i) {
    const double t = tab(i, slot);
    if (t != 0.0) x_[basis_[i]] -= t * delta;
  }
}

void BoundedSimplex::set_bounds(int var, double lower, double upper) {
  const int j = col_of_[var];
  if (j < 0) {
    if (lower > fixed_[var] + kPrimalTol || upper < fixed_[var] - kPrimalTol) {
      fixed_infeasible_ = true;
    }
    return;
  }
  lower_[j] = lower;
  upper_[j] = upper;
  if (col_status_[j] == ColStatus::kBasic) return;
  const double old = x_[j];
  // Keep the column on the same side when that side is still finite.
  if (col_status_[j] == ColStatus::kAtUpper && std::isfinite(upper)) {
    x_[j] = upper;
  } else if (col_status_[j] == ColStatus::kAtLower && std::isfinite(lower)) {
    x_[j] = lower;
  } else {
    place_nonbasic(j);
  }
  if (lower <= upper) {
    if (x_[j] == upper && std::isfinite(upper) && x_[j] != lower) {
      col_status_[j] = ColStatus::kAtUpper;
    } else if (std::isfinite(lower) && x_[j] == lower) {
      col_status_[j] = ColStatus::kAtLower;
    }
  }
  const double target = x_[j];
  x_[j] = old;
  shift_nonbasic(slot_of_[j], target - old);
  x_[j] = target;
}

void BoundedSimplex::recompute_basic_values() {
  for (int i = 0; i < rows_; ++i) {
    double sum = 0.0;
    const double* row = row_ptr(i);
    for (int s = 0; s < slots_; ++s) {
      const double v = x_[nonbasic_[s]];
      if (v != 0.0) sum -= row[s] * v;
    }
    x_[basis_[i]] = sum;
  }
}

// Rebuilds B^-1 N from the original matrix for the current basis. Columns
// that turn out to be dependent are swapped for logicals.
void BoundedSimplex::refactor() {
  const Problem& p = *problem_;
  // Full B^-1 [A | -I], only needed here.
  std::vector<double> full(std::size_t(rows_) * cols_, 0.0);
  auto at = [&](int i, int k) -> double& {
    return full[std::size_t(i) * cols_ + k];
  };
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < structural_; ++j) {
      at(i, j) = p.a[std::size_t(i) * structural_ + j];
    }
    at(i, structural_ + i) = -1.0;
  }
  std::vector<int> wanted(basis_.begin(), basis_.end());
  std::sort(wanted.begin(), wanted.end());
  std::vector<char> assigned(rows_, 0);
  std::vector<int> new_basis(rows_, -1);
  std::fill(row_of_.begin(), row_of_.end(), -1);

  auto eliminate = [&](int r, int q) {
    const double inv = 1.0 / at(r, q);
    double* pr = &full[std::size_t(r) * cols_];
    for (int k = 0; k < cols_; ++k) pr[k] *= inv;
    pr[q] = 1.0;
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, q);
      if (f == 0.0) continue;
      double* pi = &full[std::size_t(i) * cols_];
      for (int k = 0; k < cols_; ++k) {
        if (pr[k] != 0.0) pi[k] -= f * pr[k];
      }
      pi[q] = 0.0;
    }
    assigned[r] = 1;
    new_basis[r] = q;
    row_of_[q] = r;
  };

  for (int q : wanted) {
    int best = -1;
    double best_abs = 1e-11;
    for (int i = 0; i < rows_; ++i) {
      if (assigned[i]) continue;
      const double v = std::abs(at(i, q));
      if (v > best_abs) {
        best_abs = v;
        best = i;
      }
    }
    if (best < 0) {
      // Dependent column: leaves the basis at its nearest bound.
      const double v = x_[q];
      if (std::isfinite(lower_[q]) &&
          (!std::isfinite(upper_[q]) ||
           std::abs(v - lower_[q]) <= std::abs(v - upper_[q]))) {
        x_[q] = lower_[q];
        col_status_[q] = ColStatus::kAtLower;
      } else if (std::isfinite(upper_[q])) {
        x_[q] = upper_[q];
        col_status_[q] = ColStatus::kAtUpper;
      } else {
        x_[q] = 0.0;
        col_status_[q] = ColStatus::kFree;
      }
      continue;
    }
    eliminate(best, q);
  }
  for (int r = 0; r < rows_; ++r) {
    if (assigned[r]) continue;
    int best = -1;
    double best_abs = 1e-11;
    for (int k = 0; k < cols_; ++k) {
      if (row_of_[k] >= 0) continue;
      const double v = std::abs(at(r, k));
      if (v > best_abs) {
        best_abs = v;
        best = k;
      }
    }
    if (best < 0) best = structural_ + r;  // cannot happen for full-rank [A|-I]
    eliminate(r, best);
    col_status_[best] = ColStatus::kBasic;
  }
  basis_ = new_basis;
  std::fill(slot_of_.begin(), slot_of_.end(), -1);
  int s = 0;
  for (int k = 0; k < cols_; ++k) {
    if (row_of_[k] >= 0) continue;
    nonbasic_[s] = k;
    slot_of_[k] = s;
    ++s;
  }
  for (int i = 0; i < rows_; ++i) {
    col_status_[basis_[i]] = ColStatus::kBasic;
    for (int t = 0; t < slots_; ++t) tab(i, t) = at(i, nonbasic_[t]);
  }
  recompute_basic_values();
}

bool BoundedSimplex::residuals_ok() const {
  const Problem& p = *problem_;
  for (int i = 0; i < rows_; ++i) {
    double act = 0.0;
    double scale = 1.0;
    for (int e = p.row_start[i]; e < p.row_start[i + 1]; ++e) {
      const double term = p.row_value[e] * x_[p.row_index[e]];
      act += term;
      scale = std::max(scale, std::abs(term));
    }
    if (std::abs(act - x_[structural_ + i]) > 1e-9 * scale) return false;
  }
  return true;
}

// Exchanges basic row r with nonbasic slot s.
void BoundedSimplex::pivot(int r, int s) {
  const int leaving = basis_[r];
  const int entering = nonbasic_[s];
  double* pr = row_ptr(r);
  const double inv = 1.0 / pr[s];
  const int n = slots_;
  pivot_nz_.clear();
  for (int k = 0; k < n; ++k) {
    pr[k] *= inv;
    if (pr[k] != 0.0) pivot_nz_.push_back(k);
  }
  pr[s] = inv;
  // Gather/scatter only pays off well below full density.
  const bool sparse = pivot_nz_.size() * 4 < std::size_t(n);
  for (int i = 0; i < rows_; ++i) {
    if (i == r) continue;
    double* __restrict pi = row_ptr(i);
    const double f = pi[s];
    if (f == 0.0) continue;
    const double* __restrict src = pr;
    if (sparse) {
      for (int k : pivot_nz_) pi[k] -= f * src[k];
    } else {
      for (int k = 0; k < n; ++k) pi[k] -= f * src[k];
    }
    pi[s] = -f * inv;
  }
  basis_[r] = entering;
  nonbasic_[s] = leaving;
  row_of_[entering] = r;
  row_of_[leaving] = -1;
  slot_of_[entering] = -1;
  slot_of_[leaving] = s;
  col_status_[entering] = ColStatus::kBasic;
}

LpStatus BoundedSimplex::solve(long iteration_limit, double cutoff) {
  iterations_ = 0;
  if (fixed_infeasible_) {
    status_ = LpStatus::kInfeasible;
    return status_;
  }
  for (int k = 0; k < cols_; ++k) {
    if (lower_[k] > upper_[k] + kPrimalTol) {
      status_ = LpStatus::kInfeasible;
      return status_;
    }
  }
  std::vector<double> reduced(slots_);
  compute_reduced_costs(reduced);
  if (make_dual_feasible(reduced)) {
    status_ = dual_solve(iteration_limit, cutoff, reduced);
    if (status_ == LpStatus::kIterationLimit && iterations_ < iteration_limit) {
      // Stalled: finish with the primal method from the current basis.
      status_ = primal_solve(iteration_limit);
    }
  } else {
    status_ = primal_solve(iteration_limit);
  }
  if (status_ == LpStatus::kOptimal && raw_objective() > cutoff) {
    status_ = LpStatus::kCutoff;
  }
  return status_;
}

void BoundedSimplex::compute_reduced_costs(std::vector<double>& reduced) const {
  for (int s = 0; s < slots_; ++s) reduced[s] = cost(nonbasic_[s]);
  for (int i = 0; i < rows_; ++i) {
    const double w = cost(basis_[i]);
    if (w == 0.0) continue;
    const double* row = row_ptr(i);
    for (int s = 0; s < slots_; ++s) reduced[s] -= w * row[s];
  }
}

// True when the nonbasic in `slot` sits on the bound its reduced cost d
// does not prefer.
bool BoundedSimplex::eligible_wrong_side(int slot, double d) const {
  const int k = nonbasic_[slot];
  if (lower_[k] == upper_[k]) return false;
  switch (col_status_[k]) {
    case ColStatus::kAtLower:
      return d < -kDualTol;
    case ColStatus::kAtUpper:
      return d > kDualTol;
    case ColStatus::kFree:
      return std::abs(d) > kDualTol;
    case ColStatus::kBasic:
      break;
  }
  return false;
}

// Moves boxed nonbasic columns to the bound their reduced cost prefers.
// Returns false when some column cannot be made dual feasible that way.
bool BoundedSimplex::make_dual_feasible(const std::vector<double>& reduced) {
  for (int s = 0; s < slots_; ++s) {
    if (!eligible_wrong_side(s, reduced[s])) continue;
    const int k = nonbasic_[s];
    if (col_status_[k] == ColStatus::kFree) return false;
    if (!std::isfinite(lower_[k]) || !std::isfinite(upper_[k])) return false;
  }
  for (int s = 0; s < slots_; ++s) {
    if (!eligible_wrong_side(s, reduced[s])) continue;
    const int k = nonbasic_[s];
    const bool to_upper = col_status_[k] == ColStatus::kAtLower;
    const double target = to_upper ? upper_[k] : lower_[k];
    col_status_[k] = to_upper ? ColStatus::kAtUpper : ColStatus::kAtLower;
    shift_nonbasic(s, target - x_[k]);
    x_[k] = target;
  }
  return true;
}

bool BoundedSimplex::dual_feasible(const std::vector<double>& reduced) const {
  for (int s = 0; s < slots_; ++s) {
    if (eligible_wrong_side(s, reduced[s])) return false;
  }
  return true;
}

double BoundedSimplex::raw_objective() const {
  double sum = problem_->constant;
  for (int k = 0; k < structural_; ++k) sum += problem_->cost[k] * x_[k];
  return sum;
}

// Bounded dual simplex from a dual feasible basis. Returns kIterationLimit
// without spending the whole limit when it stalls, so the caller can switch
// to the primal method.
LpStatus BoundedSimplex::dual_solve(long iteration_limit, double cutoff,
                                    std::vector<double>& reduced) {
  const long stall_limit = 50 + 2L * (rows_ + structural_);
  long local = 0;
  int refactors = 0;
  while (true) {
    int r = -1;
    double worst = kPrimalTol;
    for (int i = 0; i < rows_; ++i) {
      const int b = basis_[i];
      const double v = x_[b];
      const double scale = 1.0 + std::abs(v);
      double viol = 0.0;
      if (v < lower_[b]) viol = (lower_[b] - v) / scale;
      else if (v > upper_[b]) viol = (v - upper_[b]) / scale;
      if (viol > worst) {
        worst = viol;
        r = i;
      }
    }
    if (r < 0) {
      if (!residuals_ok() && refactors < kMaxRefactorsPerSolve) {
        ++refactors;
        refactor();
        compute_reduced_costs(reduced);
        if (!make_dual_feasible(reduced)) return LpStatus::kIterationLimit;
        continue;
      }
      if (dual_feasible(reduced)) return LpStatus::kOptimal;
      return primal_solve(iteration_limit);
    }
    if (std::isfinite(cutoff) && raw_objective() > cutoff) {
      return LpStatus::kCutoff;
    }
    if (iterations_ >= iteration_limit || local >= stall_limit) {
      return LpStatus::kIterationLimit;
    }

    const int leaving = basis_[r];
    const bool increase = x_[leaving] < lower_[leaving];
    const double target = increase ? lower_[leaving] : upper_[leaving];
    // x_b = -sum_s T[r][s] x_N(s); raising x_N(s) changes x_b by -T[r][s].
    const double* row = row_ptr(r);
    int q = -1;
    double best_ratio = kInfinity;
    double best_abs = 0.0;
    for (int s = 0; s < slots_; ++s) {
      const int k = nonbasic_[s];
      if (lower_[k] == upper_[k]) continue;
      const double t = row[s];
      if (std::abs(t) < kPivotTol) continue;
      const double gain = increase ? -t : t;
      const ColStatus st = col_status_[k];
      if (st == ColStatus::kAtLower && gain <= 0.0) continue;
      if (st == ColStatus::kAtUpper && gain >= 0.0) continue;
      const double ratio = std::abs(reduced[s]) / std::abs(t);
      if (ratio < best_ratio - 1e-12 ||
          (ratio <= best_ratio + 1e-12 && std::abs(t) > best_abs)) {
        best_ratio = std::min(best_ratio, ratio);
        best_abs = std::abs(t);
        q = s;
      }
    }
    if (q < 0) return LpStatus::kInfeasible;

    ++iterations_;
    ++local;
    shift_nonbasic(q, (target - x_[leaving]) / -row[q]);
    pivot(r, q);
    x_[leaving] = target;
    col_status_[leaving] = increase ? ColStatus::kAtLower : ColStatus::kAtUpper;
    const double dq = reduced[q];
    reduced[q] = 0.0;
    const double* pr = row_ptr(r);
    for (int s = 0; s < slots_; ++s) reduced[s] -= dq * pr[s];
  }
}

LpStatus BoundedSimplex::primal_solve(long iteration_limit) {
  std::vector<double> weight(rows_);
  std::vector<double> reduced(slots_);
  int degenerate_run = 0;
  int refactors = 0;
  // Phase 2 reduced costs are updated after each pivot instead of being
  // recomputed; they are rebuilt after a refactor and before declaring
  // optimality.
  bool reduced_valid = false;
  bool reduced_fresh = false;

  while (true) {
    // Phase selection: penalize basic variables outside their bounds.
    bool phase1 = false;
    for (int i = 0; i < rows_; ++i) {
      const int b = basis_[i];
      const double v = x_[b];
      if (v < lower_[b] - kPrimalTol) {
        weight[i] = -1.0;
        phase1 = true;
      } else if (v > upper_[b] + kPrimalTol) {
        weight[i] = 1.0;
        phase1 = true;
      } else {
        weight[i] = 0.0;
      }
    }

    if (phase1) {
      std::fill(reduced.begin(), reduced.end(), 0.0);
      for (int i = 0; i < rows_; ++i) {
        const double w = weight[i];
        if (w == 0.0) continue;
        const double* row = row_ptr(i);
        for (int s = 0; s < slots_; ++s) reduced[s] -= w * row[s];
      }
      reduced_valid = false;
      reduced_fresh = true;
    } else if (!reduced_valid) {
      compute_reduced_costs(reduced);
      reduced_valid = true;
      reduced_fresh = true;
    }

    // Pricing. Bland picks the lowest column id.
    const bool bland = degenerate_run >= kDegenerateRunBeforeBland;
    int entering = -1;
    int direction = 0;
    double best_score = 0.0;
    for (int s = 0; s < slots_; ++s) {
      const double d = reduced[s];
      if (!eligible_wrong_side(s, d)) continue;
      const int dir = d < 0.0 ? 1 : -1;
      if (bland) {
        if (entering < 0 || nonbasic_[s] < nonbasic_[entering]) {
          entering = s;
          direction = dir;
        }
      } else if (std::abs(d) > best_score) {
        best_score = std::abs(d);
        entering = s;
        direction = dir;
      }
    }

    if (entering < 0) {
      if (phase1) return LpStatus::kInfeasible;
      if (!reduced_fresh) {
        reduced_valid = false;
        continue;
      }
      if (!residuals_ok() && refactors < kMaxRefactorsPerSolve) {
        ++refactors;
        refactor();
        reduced_valid = false;
        continue;
      }
      return LpStatus::kOptimal;
    }

    if (iterations_ >= iteration_limit) return LpStatus::kIterationLimit;

    // Ratio test. alpha is the rate of change of basic variable i.
    const int se = entering;
    const int q = nonbasic_[se];
    double step = kInfinity;
    int leave_row = -1;
    bool leave_at_upper = false;
    double leave_pivot = 0.0;
    if (std::isfinite(lower_[q]) && std::isfinite(upper_[q])) {
      step = upper_[q] - lower_[q];
    }
    for (int i = 0; i < rows_; ++i) {
      const double tiq = tab(i, se);
      if (std::abs(tiq) < kPivotTol) continue;
      const double alpha = -direction * tiq;
      const int b = basis_[i];
      const double v = x_[b];
      double limit = kInfinity;
      bool to_upper = false;
      const bool below = v < lower_[b] - kPrimalTol;
      const bool above = v > upper_[b] + kPrimalTol;
      if (alpha > 0.0) {
        if (below) {
          limit = (lower_[b] - v) / alpha;
        } else if (!above && std::isfinite(upper_[b])) {
          limit = (upper_[b] - v) / alpha;
          to_upper = true;
        }
      } else {
        if (above) {
          limit = (v - upper_[b]) / -alpha;
          to_upper = true;
        } else if (!below && std::isfinite(lower_[b])) {
          limit = (v - lower_[b]) / -alpha;
        }
      }
      if (!std::isfinite(limit)) continue;
      limit = std::max(limit, 0.0);
      bool take = false;
      if (limit < step - 1e-12) {
        take = true;
      } else if (leave_row >= 0 && limit <= step + 1e-12) {
        take = bland ? b < basis_[leave_row]
                     : std::abs(tiq) > std::abs(leave_pivot);
      }
      if (take) {
        step = std::min(step, limit);
        leave_row = i;
        leave_at_upper = to_upper;
        leave_pivot = tiq;
      }
    }

    if (!std::isfinite(step)) {
      if (phase1) {
        // Cannot happen in exact arithmetic; rebuild and retry.
        if (refactors < kMaxRefactorsPerSolve) {
          ++refactors;
          refactor();
          reduced_valid = false;
          continue;
        }
        return LpStatus::kIterationLimit;
      }
      return LpStatus::kUnbounded;
    }

    ++iterations_;
    degenerate_run = step <= 1e-12 ? degenerate_run + 1 : 0;
    shift_nonbasic(se, direction * step);

    if (leave_row < 0) {
      // Bound flip of the entering column.
      if (direction > 0) {
        x_[q] = upper_[q];
        col_status_[q] = ColStatus::kAtUpper;
      } else {
        x_[q] = lower_[q];
        col_status_[q] = ColStatus::kAtLower;
      }
      continue;
    }

    const int leaving = basis_[leave_row];
    pivot(leave_row, se);
    if (reduced_valid) {
      const double dq = reduced[se];
      reduced[se] = 0.0;
      const double* pr = row_ptr(leave_row);
      for (int s = 0; s < slots_; ++s) reduced[s] -= dq * pr[s];
      reduced_fresh = false;
    }
    if (leave_at_upper) {
      x_[leaving] = upper_[leaving];
      col_status_[leaving] = ColStatus::kAtUpper;
    } else {
      x_[leaving] = lower_[leaving];
      col_status_[leaving] = ColStatus::kAtLower;
    }
  }
}

std::vector<double> BoundedSimplex::primal() const {
  std::vector<double> values = fixed_;
  for (int k = 0; k < structural_; ++k) {
    values[var_of_[k]] = std::clamp(x_[k], lower_[k], upper_[k]);
  }
  return values;
}

double BoundedSimplex::objective() const {
  double sum = problem_->constant;
  for (int k = 0; k < structural_; ++k) {
    sum += problem_->cost[k] * std::clamp(x_[k], lower_[k], upper_[k]);
  }
  return sum;
}

std::vector<double> BoundedSimplex::row_duals() const {
  // y_i is the reduced cost of logical column i; basic logicals and dropped
  // rows get 0.
  std::vector<double> duals(num_constraints_, 0.0);
  std::vector<double> reduced(slots_);
  compute_reduced_costs(reduced);
  for (int i = 0; i < rows_; ++i) {
    const int s = slot_of_[structural_ + i];
    if (s >= 0) duals[source_row_[i]] = reduced[s];
  }
  return duals;
}

std::vector<double> BoundedSimplex::reduced_costs() const {
  std::vector<double> out(num_vars_, 0.0);
  std::vector<double> reduced(slots_);
  compute_reduced_costs(reduced);
  for (int s = 0; s < slots_; ++s) {
    const int k = nonbasic_[s];
    if (k < structural_) out[var_of_[k]] = reduced[s];
  }
  return out;
}

LpResult solve_lp(const MipInstance& instance, long iteration_limit) {
  BoundedSimplex lp(instance);
  LpResult result;
  result.status = lp.solve(iteration_limit);
  result.iterations = lp.iterations();
  if (result.status == LpStatus::kOptimal) {
    result.values = lp.primal();
    result.objective = lp.objective();
    result.row_duals = lp.row_duals();
  }
  return result;
}

}  // namespace balans
