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

#include "balans/destroy.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "balans/error.h"

namespace balans {
namespace {

const MipInstance& base_of(const DestroyContext& ctx) {
  if (ctx.base == nullptr || ctx.previous == nullptr || ctx.rng == nullptr) {
    throw OperatorError("destroy context is incomplete");
  }
  return *ctx.base;
}

const std::vector<double>& root_lp_of(const DestroyContext& ctx) {
  if (ctx.root_lp == nullptr ||
      static_cast<int>(ctx.root_lp->size()) != ctx.base->num_vars()) {
    throw OperatorError("root LP solution is not available");
  }
  return *ctx.root_lp;
}

double prev_value(const DestroyContext& ctx, int j) {
  return std::round((*ctx.previous)[j]);
}

double delta_of(const OperatorSpec& spec) {
  if (!spec.delta) {
    throw OperatorError("operator '" + spec.label + "' needs a size");
  }
  return *spec.delta;
}

// Fixes every discrete variable outside `free` to its previous value.
void fix_all_but(const DestroyContext& ctx, const std::vector<int>& free,
                 SubMipDelta& delta) {
  std::size_t f = 0;
  for (int k : ctx.base->discrete()) {
    while (f < free.size() && free[f] < k) ++f;
    if (f < free.size() && free[f] == k) continue;
    delta.fixings[k] = prev_value(ctx, k);
  }
}

// Adds [lo, up] for variable k, kept only where it tightens the original
// bounds.
void tighten(const MipInstance& base, int k, double lo, double up,
             SubMipDelta& delta) {
  const Variable& v = base.variable(k);
  lo = std::max(lo, v.lower);
  up = std::min(up, v.upper);
  if (lo == v.lower && up == v.upper) return;
  delta.bound_changes[k] = {lo, up};
}

// Linearized Hamming distance to the previous binary values, as terms plus
// the constant (number of ones).
std::vector<Term> hamming_terms(const DestroyContext& ctx, double& ones) {
  std::vector<Term> terms;
  ones = 0.0;
  for (int k : ctx.base->binaries()) {
    if (prev_value(ctx, k) >= 0.5) {
      terms.push_back({k, -1.0});
      ones += 1.0;
    } else {
      terms.push_back({k, 1.0});
    }
  }
  return terms;
}

SubMipDelta subset_neighborhood(DestroyContext& ctx,
                                const std::vector<int>& candidates,
                                double size) {
  SubMipDelta delta;
  const std::vector<int> free = ctx.rng->sample(
      candidates, destroy_count(size, static_cast<int>(candidates.size())));
  fix_all_but(ctx, free, delta);
  return delta;
}

}  // namespace

const char* display_name(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::kCrossover:
      return "Crossover";
    case OperatorKind::kDins:
      return "DINS";
    case OperatorKind::kLocalBranching:
      return "Local Branching";
    case OperatorKind::kMutation:
      return "Mutation";
    case OperatorKind::kProximity:
      return "Proximity";
    case OperatorKind::kRandomObjective:
      return "Random Objective";
    case OperatorKind::kRens:
      return "RENS";
    case OperatorKind::kRins:
      return "RINS";
  }
  return "unknown";
}

OperatorSpec OperatorSpec::parse(const std::string& label) {
  OperatorSpec spec;
  spec.label = label;
  if (label == "crossover") {
    spec.kind = OperatorKind::kCrossover;
    return spec;
  }
  if (label == "dins") {
    spec.kind = OperatorKind::kDins;
    return spec;
  }
  if (label == "random_objective") {
    spec.kind = OperatorKind::kRandomObjective;
    return spec;
  }
  static const std::pair<const char*, OperatorKind> kSized[] = {
      {"lb", OperatorKind::kLocalBranching},
      {"mutation", OperatorKind::kMutation},
      {"proximity", OperatorKind::kProximity},
      {"rens", OperatorKind::kRens},
      {"rins", OperatorKind::kRins},
  };
  const std::size_t cut = label.rfind('_');
  if (cut != std::string::npos) {
    const std::string prefix = label.substr(0, cut);
    const std::string digits = label.substr(cut + 1);
    for (const auto& [name, kind] : kSized) {
      if (prefix != name) continue;
      int percent = -1;
      const auto [ptr, ec] = std::from_chars(
          digits.data(), digits.data() + digits.size(), percent);
      if (digits.empty() || ec != std::errc() ||
          ptr != digits.data() + digits.size() || percent < 1 ||
          percent > 100) {
        break;
      }
      spec.kind = kind;
      spec.delta = percent / 100.0;
      return spec;
    }
  }
  throw ConfigError(
      "unknown operator label '" + label +
      "' (expected crossover, dins, random_objective or one of lb_, "
      "mutation_, proximity_, rens_, rins_ followed by a percentage)");
}

bool Applicability::admits(const MipInstance& instance) const {
  if (works_on_any) return true;
  if (requires_binaries) return !instance.binaries().empty();
  if (requires_integers_or_binaries) return !instance.discrete().empty();
  return true;
}

Applicability applicability(OperatorKind kind) {
  Applicability a;
  switch (kind) {
    case OperatorKind::kRandomObjective:
      a.works_on_any = true;
      break;
    case OperatorKind::kLocalBranching:
    case OperatorKind::kProximity:
      a.requires_binaries = true;
      a.requires_integers_or_binaries = true;
      break;
    default:
      a.requires_integers_or_binaries = true;
      break;
  }
  return a;
}

int destroy_count(double delta, int size) {
  if (size <= 0) return 0;
  const int m = static_cast<int>(std::floor(delta * size + 0.5 + 1e-9));
  return std::clamp(m, 1, size);
}

std::pair<int, int> flip_budget_range(double delta, int num_binaries) {
  const int hi = std::max(
      1, static_cast<int>(std::floor(delta * num_binaries + 1e-9)));
  const int lo = std::max(
      1, static_cast<int>(std::ceil(0.10 * num_binaries - 1e-9)));
  return {std::min(lo, hi), hi};
}

std::vector<int> destroy_set(const SubMipDelta& delta,
                             const MipInstance& base) {
  std::vector<int> out;
  for (int k : base.discrete()) {
    if (!delta.fixings.contains(k)) out.push_back(k);
  }
  return out;
}

SubMipDelta crossover(DestroyContext& ctx) {
  const MipInstance& base = base_of(ctx);
  if (!ctx.random_feasible_provider) {
    throw OperatorError("crossover needs a random solution provider");
  }
  const std::optional<SolutionState> rnd = ctx.random_feasible_provider();
  if (!rnd || static_cast<int>(rnd->values().size()) < base.num_vars()) {
    throw OperatorError("crossover could not obtain a random feasible point");
  }
  SubMipDelta delta;
  for (int k : base.discrete()) {
    if (std::abs((*ctx.previous)[k] - (*rnd)[k]) <= kIntegralityTolerance) {
      delta.fixings[k] = prev_value(ctx, k);
    }
  }
  return delta;
}

SubMipDelta dins(DestroyContext& ctx) {
  const MipInstance& base = base_of(ctx);
  const std::vector<double>& lp = root_lp_of(ctx);
  SubMipDelta delta;
  for (int k : base.discrete()) {
    const double prev = prev_value(ctx, k);
    const double d = std::abs(prev - lp[k]);
    if (d < 0.5) {
      delta.fixings[k] = prev;
      continue;
    }
    // Integral endpoints containing [lp - d, lp + d]; the guard keeps prev,
    // which sits exactly on the boundary, inside.
    const double lo = std::floor(lp[k] - d + 1e-9);
    const double up = std::ceil(lp[k] + d - 1e-9);
    tighten(base, k, std::min(lo, prev), std::max(up, prev), delta);
  }
  return delta;
}

SubMipDelta local_branching(DestroyContext& ctx, const OperatorSpec& spec) {
  const MipInstance& base = base_of(ctx);
  if (base.binaries().empty()) {
    throw OperatorError("local branching needs binary variables");
  }
  const auto [lo, hi] =
      flip_budget_range(delta_of(spec), static_cast<int>(base.binaries().size()));
  const long kappa = ctx.rng->uniform_int(lo, hi);
  double ones = 0.0;
  std::vector<Term> terms = hamming_terms(ctx, ones);
  SubMipDelta delta;
  delta.added_constraints.push_back({"balans_local_branching", std::move(terms),
                                     Relation::kLessEqual,
                                     static_cast<double>(kappa) - ones});
  return delta;
}

SubMipDelta mutation(DestroyContext& ctx, const OperatorSpec& spec) {
  base_of(ctx);
  return subset_neighborhood(ctx, ctx.base->discrete(), delta_of(spec));
}

SubMipDelta proximity(DestroyContext& ctx, const OperatorSpec& spec) {
  const MipInstance& base = base_of(ctx);
  if (base.binaries().empty()) {
    throw OperatorError("proximity needs binary variables");
  }
  const int n = base.num_vars();
  double ones = 0.0;
  const std::vector<Term> distance = hamming_terms(ctx, ones);

  SubMipDelta delta;
  ObjectiveReplacement objective;
  objective.coeffs.assign(n, 0.0);
  for (const Term& t : distance) objective.coeffs[t.index] = t.coef;
  objective.constant = ones;
  delta.objective_replacement = std::move(objective);
  delta.slack_vars.push_back({0.0, kInfinity, kProximitySlackPenalty});

  // c^T x + c0 - s <= f - delta * max(|f|, 1)
  const double f = ctx.previous->objective();
  const double target = f - delta_of(spec) * std::max(std::abs(f), 1.0);
  std::vector<Term> row;
  for (int j = 0; j < n; ++j) {
    if (base.objective()[j] != 0.0) row.push_back({j, base.objective()[j]});
  }
  row.push_back({n, -1.0});
  delta.added_constraints.push_back({"balans_proximity", std::move(row),
                                     Relation::kLessEqual,
                                     target - base.objective_constant()});
  return delta;
}

SubMipDelta random_objective(DestroyContext& ctx) {
  const MipInstance& base = base_of(ctx);
  ObjectiveReplacement objective;
  objective.coeffs.resize(base.num_vars());
  for (double& c : objective.coeffs) c = ctx.rng->uniform(-1.0, 1.0);
  SubMipDelta delta;
  delta.objective_replacement = std::move(objective);
  return delta;
}

SubMipDelta rens(DestroyContext& ctx, const OperatorSpec& spec) {
  const MipInstance& base = base_of(ctx);
  const std::vector<double>& lp = root_lp_of(ctx);
  std::vector<int> fractional;
  for (int k : base.discrete()) {
    if (!is_integral(lp[k])) fractional.push_back(k);
  }
  SubMipDelta delta =
      subset_neighborhood(ctx, fractional, delta_of(spec));
  for (int k : destroy_set(delta, base)) {
    tighten(base, k, std::floor(lp[k]), std::ceil(lp[k]), delta);
  }
  return delta;
}

SubMipDelta rins(DestroyContext& ctx, const OperatorSpec& spec) {
  const MipInstance& base = base_of(ctx);
  const std::vector<double>& lp = root_lp_of(ctx);
  std::vector<int> differing;
  for (int k : base.discrete()) {
    if (std::abs((*ctx.previous)[k] - lp[k]) > kIntegralityTolerance) {
      differing.push_back(k);
    }
  }
  return subset_neighborhood(ctx, differing, delta_of(spec));
}

SubMipDelta destroy(const OperatorSpec& spec, DestroyContext& ctx) {
  switch (spec.kind) {
    case OperatorKind::kCrossover:
      return crossover(ctx);
    case OperatorKind::kDins:
      return dins(ctx);
    case OperatorKind::kLocalBranching:
      return local_branching(ctx, spec);
    case OperatorKind::kMutation:
      return mutation(ctx, spec);
    case OperatorKind::kProximity:
      return proximity(ctx, spec);
    case OperatorKind::kRandomObjective:
      return random_objective(ctx);
    case OperatorKind::kRens:
      return rens(ctx, spec);
    case OperatorKind::kRins:
      return rins(ctx, spec);
  }
  throw OperatorError("unknown operator kind");
}

}  // namespace balans
