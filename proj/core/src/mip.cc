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

#include "balans/mip.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "balans/error.h"

namespace balans {
namespace {

void normalize_terms(LinearConstraint& row, int num_vars) {
  std::sort(row.coeffs.begin(), row.coeffs.end(),
            [](const Term& a, const Term& b) { return a.index < b.index; });
  std::vector<Term> merged;
  merged.reserve(row.coeffs.size());
  for (const Term& t : row.coeffs) {
    if (t.index < 0 || t.index >= num_vars) {
      throw ModelError("constraint '" + row.name + "' references variable " +
                       std::to_string(t.index) + " out of range");
    }
    if (!std::isfinite(t.coef)) {
      throw ModelError("constraint '" + row.name + "' has a non-finite coef");
    }
    if (!merged.empty() && merged.back().index == t.index) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0.0; });
  if (merged.empty()) {
    throw ModelError("constraint '" + row.name + "' has no coefficients");
  }
  if (!std::isfinite(row.rhs)) {
    throw ModelError("constraint '" + row.name + "' has a non-finite rhs");
  }
  row.coeffs = std::move(merged);
}

void validate_variable(const Variable& v) {
  if (std::isnan(v.lower) || std::isnan(v.upper) || v.lower == kInfinity ||
      v.upper == -kInfinity) {
    throw ModelError("variable '" + v.name + "' has invalid bounds");
  }
  if (v.lower > v.upper) {
    throw ModelError("variable '" + v.name + "' has lower > upper");
  }
  if (v.kind == VarKind::kBinary && (v.lower < 0.0 || v.upper > 1.0)) {
    throw ModelError("binary variable '" + v.name + "' outside [0, 1]");
  }
}

}  // namespace

double LinearConstraint::activity(std::span<const double> values) const {
  double sum = 0.0;
  for (const Term& t : coeffs) sum += t.coef * values[t.index];
  return sum;
}

MipInstance::MipInstance(std::string name, std::vector<Variable> variables,
                         std::vector<LinearConstraint> constraints,
                         std::vector<double> objective,
                         double objective_constant)
    : name_(std::move(name)),
      variables_(std::move(variables)),
      objective_(std::move(objective)),
      objective_constant_(objective_constant) {
  if (objective_.size() != variables_.size()) {
    throw DimensionError("objective has " + std::to_string(objective_.size()) +
                         " coefficients for " +
                         std::to_string(variables_.size()) + " variables");
  }
  for (Variable& v : variables_) {
    validate_variable(v);
    // A 0/1 general integer is a binary.
    if (v.kind == VarKind::kInteger && v.lower == 0.0 && v.upper == 1.0) {
      v.kind = VarKind::kBinary;
    }
  }
  for (double c : objective_) {
    if (!std::isfinite(c)) throw ModelError("non-finite objective coef");
  }
  if (!std::isfinite(objective_constant_)) {
    throw ModelError("non-finite objective constant");
  }
  for (LinearConstraint& row : constraints) normalize_terms(row, num_vars());
  base_rows_ = std::make_shared<const std::vector<LinearConstraint>>(
      std::move(constraints));
  classify();
}

void MipInstance::classify() {
  binaries_.clear();
  integers_.clear();
  discrete_.clear();
  continuous_.clear();
  for (int j = 0; j < num_vars(); ++j) {
    switch (variables_[j].kind) {
      case VarKind::kBinary:
        binaries_.push_back(j);
        discrete_.push_back(j);
        break;
      case VarKind::kInteger:
        integers_.push_back(j);
        discrete_.push_back(j);
        break;
      case VarKind::kContinuous:
        continuous_.push_back(j);
        break;
    }
  }
}

std::vector<LinearConstraint> MipInstance::constraints() const {
  std::vector<LinearConstraint> rows(base_rows_->begin(), base_rows_->end());
  rows.insert(rows.end(), extra_rows_.begin(), extra_rows_.end());
  return rows;
}

int MipInstance::find_variable(const std::string& name) const {
  for (int j = 0; j < num_vars(); ++j) {
    if (variables_[j].name == name) return j;
  }
  return -1;
}

bool operator==(const MipInstance& a, const MipInstance& b) {
  if (a.name_ != b.name_ || a.variables_ != b.variables_ ||
      a.objective_ != b.objective_ ||
      a.objective_constant_ != b.objective_constant_ ||
      a.num_constraints() != b.num_constraints()) {
    return false;
  }
  for (int i = 0; i < a.num_constraints(); ++i) {
    if (!(a.constraint(i) == b.constraint(i))) return false;
  }
  return true;
}

int MipBuilder::add_variable(std::string name, double lower, double upper,
                             VarKind kind, double objective_coef) {
  variables_.push_back({std::move(name), lower, upper, kind});
  objective_.push_back(objective_coef);
  return static_cast<int>(variables_.size()) - 1;
}

void MipBuilder::add_constraint(std::string name, std::vector<Term> coeffs,
                                Relation relation, double rhs) {
  constraints_.push_back({std::move(name), std::move(coeffs), relation, rhs});
}

MipInstance MipBuilder::build() const {
  std::vector<double> objective = objective_;
  double constant = constant_;
  if (maximize_) {
    for (double& c : objective) c = -c;
    constant = -constant;
  }
  return MipInstance(name_, variables_, constraints_, std::move(objective),
                     constant);
}

SolutionState SolutionState::evaluate(const MipInstance& instance,
                                      std::vector<double> values) {
  const double objective = evaluate_objective(instance, values);
  return SolutionState(std::move(values), objective);
}

double FeasibilityReport::max_violation() const {
  double worst = 0.0;
  for (const Violation& v : violations) worst = std::max(worst, v.amount);
  return worst;
}

double evaluate_objective(const MipInstance& instance,
                          std::span<const double> values) {
  if (static_cast<int>(values.size()) != instance.num_vars()) {
    throw DimensionError("expected " + std::to_string(instance.num_vars()) +
                         " values, got " + std::to_string(values.size()));
  }
  double sum = instance.objective_constant();
  const auto& c = instance.objective();
  for (std::size_t j = 0; j < values.size(); ++j) sum += c[j] * values[j];
  return sum;
}

double project_objective(const MipInstance& base,
                         std::span<const double> values) {
  if (static_cast<int>(values.size()) < base.num_vars()) {
    throw DimensionError("solution shorter than the base instance");
  }
  return evaluate_objective(base, values.first(base.num_vars()));
}

bool is_integral(double value, double tol) {
  return std::abs(value - std::round(value)) <= tol;
}

FeasibilityReport check_feasibility(const MipInstance& instance,
                                    std::span<const double> values,
                                    double tol) {
  if (static_cast<int>(values.size()) != instance.num_vars()) {
    throw DimensionError("expected " + std::to_string(instance.num_vars()) +
                         " values, got " + std::to_string(values.size()));
  }
  FeasibilityReport report;
  for (int j = 0; j < instance.num_vars(); ++j) {
    const Variable& v = instance.variable(j);
    const double x = values[j];
    if (std::isnan(x)) {
      report.violations.push_back({ViolationKind::kBound, j, kInfinity});
      continue;
    }
    if (x < v.lower - tol) {
      report.violations.push_back({ViolationKind::kBound, j, v.lower - x});
    } else if (x > v.upper + tol) {
      report.violations.push_back({ViolationKind::kBound, j, x - v.upper});
    }
    if (v.is_discrete() && !is_integral(x, tol)) {
      report.violations.push_back(
          {ViolationKind::kIntegrality, j, std::abs(x - std::round(x))});
    }
  }
  for (int i = 0; i < instance.num_constraints(); ++i) {
    const LinearConstraint& row = instance.constraint(i);
    const double act = row.activity(values);
    double excess = 0.0;
    switch (row.relation) {
      case Relation::kLessEqual:
        excess = act - row.rhs;
        break;
      case Relation::kGreaterEqual:
        excess = row.rhs - act;
        break;
      case Relation::kEqual:
        excess = std::abs(act - row.rhs);
        break;
    }
    if (excess > tol) {
      report.violations.push_back({ViolationKind::kConstraint, i, excess});
    }
  }
  return report;
}

MipInstance apply_delta(const MipInstance& base, const SubMipDelta& delta) {
  const int n = base.num_vars();
  MipInstance sub = base;
  for (const auto& [j, value] : delta.fixings) {
    if (j < 0 || j >= n) {
      throw InvalidDeltaError("fixing references variable " +
                              std::to_string(j) + " out of range");
    }
    if (delta.bound_changes.contains(j)) {
      throw InvalidDeltaError("variable " + std::to_string(j) +
                              " is both fixed and bound-changed");
    }
    const Variable& v = base.variable(j);
    double fixed = value;
    if (v.is_discrete()) {
      if (!is_integral(value)) {
        throw InvalidDeltaError("discrete variable '" + v.name +
                                "' fixed to non-integral value " +
                                std::to_string(value));
      }
      fixed = std::round(value);
    }
    if (fixed < v.lower - 1e-9 || fixed > v.upper + 1e-9) {
      throw InvalidDeltaError("fixing of '" + v.name +
                              "' lies outside its bounds");
    }
    fixed = std::clamp(fixed, v.lower, v.upper);
    sub.variables_[j].lower = fixed;
    sub.variables_[j].upper = fixed;
  }
  for (const auto& [j, bounds] : delta.bound_changes) {
    if (j < 0 || j >= n) {
      throw InvalidDeltaError("bound change references variable " +
                              std::to_string(j) + " out of range");
    }
    const Variable& v = base.variable(j);
    const auto [lo, up] = bounds;
    if (std::isnan(lo) || std::isnan(up) || lo > up) {
      throw InvalidDeltaError("bound change of '" + v.name +
                              "' has lower > upper");
    }
    if (lo < v.lower - 1e-9 || up > v.upper + 1e-9) {
      throw InvalidDeltaError("bound change of '" + v.name +
                              "' widens its original bounds");
    }
    sub.variables_[j].lower = std::max(lo, v.lower);
    sub.variables_[j].upper = std::min(up, v.upper);
  }

  for (std::size_t k = 0; k < delta.slack_vars.size(); ++k) {
    const SlackVariable& s = delta.slack_vars[k];
    Variable slack{"balans_slack_" + std::to_string(k), s.lower, s.upper,
                   VarKind::kContinuous};
    try {
      validate_variable(slack);
    } catch (const ModelError& e) {
      throw InvalidDeltaError(e.what());
    }
    sub.variables_.push_back(std::move(slack));
  }

  if (delta.objective_replacement) {
    const ObjectiveReplacement& rep = *delta.objective_replacement;
    if (static_cast<int>(rep.coeffs.size()) != n) {
      throw InvalidDeltaError("objective replacement has wrong length");
    }
    sub.objective_ = rep.coeffs;
    sub.objective_constant_ = rep.constant;
  }
  for (const SlackVariable& s : delta.slack_vars) {
    sub.objective_.push_back(s.penalty);
  }

  for (LinearConstraint row : delta.added_constraints) {
    try {
      normalize_terms(row, sub.num_vars());
    } catch (const ModelError& e) {
      throw InvalidDeltaError(e.what());
    }
    sub.extra_rows_.push_back(std::move(row));
  }
  sub.classify();
  return sub;
}

}  // namespace balans
