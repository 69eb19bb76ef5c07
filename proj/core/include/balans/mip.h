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

#ifndef BALANS_MIP_H_
#define BALANS_MIP_H_

#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace balans {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Default absolute tolerances for bound/row feasibility and integrality.
inline constexpr double kFeasibilityTolerance = 1e-6;
inline constexpr double kIntegralityTolerance = 1e-6;

struct SubMipDelta;

enum class VarKind { kContinuous, kInteger, kBinary };

struct Variable {
  std::string name;
  double lower = 0.0;
  double upper = kInfinity;
  VarKind kind = VarKind::kContinuous;

  bool is_discrete() const { return kind != VarKind::kContinuous; }
  friend bool operator==(const Variable&, const Variable&) = default;
};

struct Term {
  int index = 0;
  double coef = 0.0;
  friend bool operator==(const Term&, const Term&) = default;
};

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LinearConstraint {
  std::string name;
  std::vector<Term> coeffs;  // sorted by index, no duplicates
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;

  double activity(std::span<const double> values) const;
  friend bool operator==(const LinearConstraint&,
                         const LinearConstraint&) = default;
};

// Canonical minimization MIP: min c'x + constant s.t. rows, bounds,
// integrality. Immutable once built; copies share the constraint rows of the
// instance they were derived from, so materializing a sub-MIP only pays for
// the variable array and the rows it adds.
class MipInstance {
 public:
  MipInstance() = default;
  // Validates every invariant and throws ModelError on violation. Constraint
  // coefficient lists are sorted and merged.
  MipInstance(std::string name, std::vector<Variable> variables,
              std::vector<LinearConstraint> constraints,
              std::vector<double> objective, double objective_constant = 0.0);

  const std::string& name() const { return name_; }
  int num_vars() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const {
    return static_cast<int>(base_rows_->size() + extra_rows_.size());
  }

  const std::vector<Variable>& variables() const { return variables_; }
  const Variable& variable(int j) const { return variables_[j]; }
  const LinearConstraint& constraint(int i) const {
    const int base = static_cast<int>(base_rows_->size());
    return i < base ? (*base_rows_)[i] : extra_rows_[i - base];
  }
  std::vector<LinearConstraint> constraints() const;

  // Dense objective c, length num_vars().
  const std::vector<double>& objective() const { return objective_; }
  double objective_constant() const { return objective_constant_; }

  // Index sets. B and I are disjoint; D = B u I; continuous = V \ D.
  const std::vector<int>& binaries() const { return binaries_; }
  const std::vector<int>& integers() const { return integers_; }
  const std::vector<int>& discrete() const { return discrete_; }
  const std::vector<int>& continuous() const { return continuous_; }

  // Looks up a variable by name; -1 when absent.
  int find_variable(const std::string& name) const;

  // True when the rows of this instance are stored in the same buffer as
  // `other`'s (no deep copy happened).
  bool shares_rows_with(const MipInstance& other) const {
    return base_rows_ == other.base_rows_;
  }

  friend bool operator==(const MipInstance& a, const MipInstance& b);

 private:
  friend MipInstance apply_delta(const MipInstance&, const SubMipDelta&);

  void classify();

  std::string name_;
  std::vector<Variable> variables_;
  std::shared_ptr<const std::vector<LinearConstraint>> base_rows_ =
      std::make_shared<const std::vector<LinearConstraint>>();
  std::vector<LinearConstraint> extra_rows_;
  std::vector<double> objective_;
  double objective_constant_ = 0.0;

  std::vector<int> binaries_;
  std::vector<int> integers_;
  std::vector<int> discrete_;
  std::vector<int> continuous_;
};

// Incremental construction helper; `maximize()` negates the objective at
// build time so every instance is stored in minimization form.
class MipBuilder {
 public:
  explicit MipBuilder(std::string name = "model") : name_(std::move(name)) {}

  int add_variable(std::string name, double lower, double upper,
                   VarKind kind, double objective_coef = 0.0);
  int add_binary(std::string name, double objective_coef = 0.0) {
    return add_variable(std::move(name), 0.0, 1.0, VarKind::kBinary,
                        objective_coef);
  }
  void add_constraint(std::string name, std::vector<Term> coeffs,
                      Relation relation, double rhs);
  void set_objective_coef(int j, double coef) { objective_[j] = coef; }
  void set_objective_constant(double constant) { constant_ = constant; }
  void maximize() { maximize_ = true; }

  MipInstance build() const;

 private:
  std::string name_;
  std::vector<Variable> variables_;
  std::vector<LinearConstraint> constraints_;
  std::vector<double> objective_;
  double constant_ = 0.0;
  bool maximize_ = false;
};

// A complete assignment with its cached objective value.
class SolutionState {
 public:
  SolutionState() = default;
  // Evaluates the objective of `values` on `instance`.
  static SolutionState evaluate(const MipInstance& instance,
                                std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  double objective() const { return objective_; }
  double operator[](int j) const { return values_[j]; }

  friend bool operator==(const SolutionState&, const SolutionState&) = default;

 private:
  SolutionState(std::vector<double> values, double objective)
      : values_(std::move(values)), objective_(objective) {}
  std::vector<double> values_;
  double objective_ = 0.0;
};

// Objective replaced by a destroy operator (proximity, random objective).
// Coefficients cover the base variables; slack penalties are added on top.
struct ObjectiveReplacement {
  std::vector<double> coeffs;
  double constant = 0.0;
};

// Fresh continuous variable appended by a delta.
struct SlackVariable {
  double lower = 0.0;
  double upper = kInfinity;
  double penalty = 0.0;
};

// A destroy operator's output, layered over the base instance. Added
// constraints may reference slack variables by index num_vars() + k.
struct SubMipDelta {
  std::map<int, double> fixings;
  std::map<int, std::pair<double, double>> bound_changes;
  std::vector<LinearConstraint> added_constraints;
  std::optional<ObjectiveReplacement> objective_replacement;
  std::vector<SlackVariable> slack_vars;

  bool empty() const {
    return fixings.empty() && bound_changes.empty() &&
           added_constraints.empty() && !objective_replacement &&
           slack_vars.empty();
  }
};

enum class ViolationKind { kBound, kIntegrality, kConstraint };

struct Violation {
  ViolationKind kind;
  int index;  // variable index, or constraint index for kConstraint
  double amount;
};

struct FeasibilityReport {
  std::vector<Violation> violations;
  bool feasible() const { return violations.empty(); }
  double max_violation() const;
};

// Returns c'x + constant. Throws DimensionError on length mismatch.
double evaluate_objective(const MipInstance& instance,
                          std::span<const double> values);

FeasibilityReport check_feasibility(const MipInstance& instance,
                                    std::span<const double> values,
                                    double tol = kFeasibilityTolerance);

inline bool is_feasible(const MipInstance& instance,
                        std::span<const double> values,
                        double tol = kFeasibilityTolerance) {
  return check_feasibility(instance, values, tol).feasible();
}

// Materializes the sub-MIP described by `delta`. The base is never modified
// and its rows are shared with the result. Throws InvalidDeltaError.
MipInstance apply_delta(const MipInstance& base, const SubMipDelta& delta);

// Value of `values` under the objective of `base`, reading only the first
// base.num_vars() entries (trailing slack entries are ignored).
double project_objective(const MipInstance& base,
                         std::span<const double> values);

bool is_integral(double value, double tol = kIntegralityTolerance);

}  // namespace balans

#endif  // BALANS_MIP_H_
