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

#include "balans/bnb.h"

#include <algorithm>
#include <cmath>
#include <memory>

#include "balans/simplex.h"

namespace balans {
namespace {

using Clock = std::chrono::steady_clock;

constexpr long kNodeIterationLimit = 20000;
constexpr double kRcTolerance = 1e-7;

// Bounds of the discrete variables at a node, indexed like
// MipInstance::discrete().
struct Node {
  std::vector<double> lower;
  std::vector<double> upper;
  double parent_bound;
};

// True when every feasible objective value differs from the constant by an
// integer, which lets LP bounds be rounded up.
bool has_integral_objective(const MipInstance& instance) {
  for (int j = 0; j < instance.num_vars(); ++j) {
    const double c = instance.objective()[j];
    if (c == 0.0) continue;
    if (!instance.variable(j).is_discrete()) return false;
    if (c != std::round(c)) return false;
  }
  return true;
}

class BranchAndBound {
 public:
  BranchAndBound(const MipInstance& instance, const SolveLimits& limits,
                 bool extend_until_feasible,
                 long hard_node_limit = std::numeric_limits<long>::max())
      : instance_(instance),
        limits_(limits),
        extend_until_feasible_(extend_until_feasible),
        hard_node_limit_(hard_node_limit),
        integral_objective_(has_integral_objective(instance)) {}

  MipResult run() {
    start_ = Clock::now();
    MipResult result;
    if (limits_.warm_start &&
        static_cast<int>(limits_.warm_start->values().size()) ==
            instance_.num_vars() &&
        is_feasible(instance_, limits_.warm_start->values())) {
      accept(*limits_.warm_start, 0, result);
    }

    // One LP is re-solved at every node with that node's bounds; the basis
    // left by the previous node is the warm start.
    BoundedSimplex lp(instance_);
    const std::vector<int>& discrete = instance_.discrete();
    Node root{{}, {}, -kInfinity};
    for (int j : discrete) {
      root.lower.push_back(lp.lower(j));
      root.upper.push_back(lp.upper(j));
    }
    std::vector<Node> stack;
    stack.push_back(std::move(root));
    bool complete = true;
    bool stopped_on_first = false;
    double open_bound = kInfinity;  // bound of dropped/unfinished nodes

    while (!stack.empty()) {
      if (elapsed() >= limits_.time_limit.count()) {
        complete = false;
        break;
      }
      if (result.nodes_explored >= hard_node_limit_ ||
          (result.nodes_explored >= limits_.node_limit &&
           !(extend_until_feasible_ && !result.best))) {
        complete = false;
        break;
      }
      Node node = std::move(stack.back());
      stack.pop_back();
      if (prunable(node.parent_bound, result)) continue;

      ++result.nodes_explored;
      for (std::size_t d = 0; d < discrete.size(); ++d) {
        const int j = discrete[d];
        if (lp.lower(j) != node.lower[d] || lp.upper(j) != node.upper[d]) {
          lp.set_bounds(j, node.lower[d], node.upper[d]);
        }
      }
      const LpStatus status = lp.solve(kNodeIterationLimit, cutoff(result));
      if (status == LpStatus::kInfeasible || status == LpStatus::kCutoff) {
        continue;
      }
      if (status != LpStatus::kOptimal) {
        // Iteration limit or unbounded relaxation: the subtree stays open.
        complete = false;
        open_bound = std::min(open_bound, node.parent_bound);
        continue;
      }
      const double bound = lp.objective();
      if (prunable(bound, result)) continue;

      const std::vector<double> x = lp.primal();
      const int branch = select_branching_variable(x);
      if (branch < 0) {
        std::vector<double> values = x;
        for (int j : discrete) values[j] = std::round(values[j]);
        if (is_feasible(instance_, values)) {
          const bool improved = accept(
              SolutionState::evaluate(instance_, std::move(values)),
              result.nodes_explored, result);
          if (improved && limits_.stop_at_first_feasible) {
            stopped_on_first = true;
            complete = false;
            open_bound = std::min(open_bound, bound);
            break;
          }
          if (improved && extend_until_feasible_ &&
              result.nodes_explored >= limits_.node_limit) {
            complete = false;
            open_bound = std::min(open_bound, bound);
            break;
          }
        }
        continue;
      }

      if (result.best) fix_by_reduced_cost(lp, x, bound, result, node);

      const double value = x[branch];
      const std::size_t d = static_cast<std::size_t>(
          std::lower_bound(discrete.begin(), discrete.end(), branch) -
          discrete.begin());
      Node up{node.lower, node.upper, bound};
      up.lower[d] = std::ceil(value);
      node.upper[d] = std::floor(value);
      node.parent_bound = bound;
      stack.push_back(std::move(up));
      stack.push_back(std::move(node));
    }

    result.wall_time = Seconds(elapsed());
    for (const Node& n : stack) open_bound = std::min(open_bound, n.parent_bound);

    if (complete) {
      if (result.best) {
        result.status = MipStatus::kOptimal;
        result.dual_bound = result.best->objective();
      } else {
        result.status = MipStatus::kInfeasible;
        result.dual_bound = kInfinity;
      }
      return result;
    }
    if (result.best) {
      result.status = stopped_on_first ? MipStatus::kFeasible
                                       : MipStatus::kLimitWithIncumbent;
      result.dual_bound =
          std::min(result.best->objective(), rounded(open_bound));
    } else {
      result.status = MipStatus::kLimitNoIncumbent;
      result.dual_bound = rounded(open_bound);
    }
    return result;
  }

 private:
  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

  double rounded(double bound) const {
    if (!integral_objective_ || !std::isfinite(bound)) return bound;
    const double constant = instance_.objective_constant();
    return std::ceil(bound - constant - 1e-6) + constant;
  }

  // LP values above this cannot lead to an improving solution.
  double cutoff(const MipResult& result) const {
    if (!result.best) return kInfinity;
    const double incumbent = result.best->objective();
    if (integral_objective_) return incumbent - 1.0 + 1e-5;
    return incumbent + std::max(1e-6, 1e-9 * std::abs(incumbent));
  }

  // Moving a nonbasic variable t units off its bound raises the LP value by
  // at least |d| t, so the node's subtree never needs t > (cutoff - bound)/|d|.
  void fix_by_reduced_cost(const BoundedSimplex& lp,
                           const std::vector<double>& x, double bound,
                           const MipResult& result, Node& node) const {
    const double room = cutoff(result) - bound;
    if (!(room >= 0.0) || !std::isfinite(room)) return;
    const std::vector<double> d = lp.reduced_costs();
    const std::vector<int>& discrete = instance_.discrete();
    for (std::size_t i = 0; i < discrete.size(); ++i) {
      const int j = discrete[i];
      double& lo = node.lower[i];
      double& up = node.upper[i];
      if (lo == up) continue;
      if (d[j] > kRcTolerance && x[j] == lo) {
        up = std::min(up, lo + std::floor(room / d[j] + 1e-6));
      } else if (d[j] < -kRcTolerance && x[j] == up) {
        lo = std::max(lo, up - std::floor(room / -d[j] + 1e-6));
      }
    }
  }

  bool prunable(double bound, const MipResult& result) const {
    if (!result.best) return false;
    const double incumbent = result.best->objective();
    return rounded(bound) >=
           incumbent - std::max(1e-6, 1e-9 * std::abs(incumbent));
  }

  int select_branching_variable(const std::vector<double>& x) const {
    int best = -1;
    double best_score = kInfinity;
    for (int j : instance_.discrete()) {
      const double frac = x[j] - std::floor(x[j]);
      if (frac <= kIntegralityTolerance || frac >= 1.0 - kIntegralityTolerance) {
        continue;
      }
      const double score = std::abs(frac - 0.5);
      if (score < best_score) {
        best_score = score;
        best = j;
      }
    }
    return best;
  }

  bool accept(SolutionState candidate, long node, MipResult& result) {
    if (result.best) {
      const double inc = result.best->objective();
      if (candidate.objective() >= inc - 1e-9 * std::max(1.0, std::abs(inc))) {
        return false;
      }
    }
    result.incumbents.push_back({node, elapsed(), candidate.objective()});
    result.best = std::move(candidate);
    return true;
  }

  const MipInstance& instance_;
  const SolveLimits& limits_;
  const bool extend_until_feasible_;
  const long hard_node_limit_;
  const bool integral_objective_;
  Clock::time_point start_;
};

}  // namespace

const char* to_string(MipStatus status) {
  switch (status) {
    case MipStatus::kOptimal:
      return "optimal";
    case MipStatus::kFeasible:
      return "feasible";
    case MipStatus::kInfeasible:
      return "infeasible";
    case MipStatus::kLimitWithIncumbent:
      return "limit_with_incumbent";
    case MipStatus::kLimitNoIncumbent:
      return "limit_no_incumbent";
  }
  return "unknown";
}

MipResult solve_mip(const MipInstance& instance, const SolveLimits& limits) {
  return BranchAndBound(instance, limits, false).run();
}

MipResult find_initial(const MipInstance& instance, Seconds budget,
                       long node_limit, long hard_node_limit) {
  SolveLimits limits;
  limits.time_limit = budget;
  limits.node_limit = node_limit;
  MipResult result =
      BranchAndBound(instance, limits, true, hard_node_limit).run();
  result.solved_upfront = result.status == MipStatus::kOptimal ||
                          result.status == MipStatus::kInfeasible;
  return result;
}

}  // namespace balans
