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

#include "balans/engine.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include "balans/error.h"
#include "balans/simplex.h"

namespace balans {
namespace {

constexpr int kMaxConsecutiveBackendErrors = 10;

class SearchClock {
 public:
  explicit SearchClock(ClockKind kind)
      : kind_(kind), start_(std::chrono::steady_clock::now()) {}

  double now() const {
    if (kind_ == ClockKind::kWork) return work_ * kWorkUnitSeconds;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }
  void charge(long units) { work_ += units; }
  bool is_work() const { return kind_ == ClockKind::kWork; }

 private:
  ClockKind kind_;
  std::chrono::steady_clock::time_point start_;
  long work_ = 0;
};

class Search {
 public:
  Search(const MipInstance& instance, const SearchConfig& config)
      : instance_(instance),
        config_(config),
        clock_(config.clock),
        rng_(config.seed) {}

  SearchResult run();

 private:
  bool should_stop(long iteration) const {
    if (config_.stop.max_iterations && iteration >= *config_.stop.max_iterations) {
      return true;
    }
    return config_.stop.max_wall_time_s &&
           clock_.now() >= *config_.stop.max_wall_time_s;
  }

  static long work_units(Seconds budget) {
    const double units = budget.count() / kWorkUnitSeconds;
    if (!(units < 9e18)) return std::numeric_limits<long>::max();
    return std::max(1L, static_cast<long>(units));
  }

  // Repair with the search's budgets; charges the work clock.
  MipResult run_repair(const SubMipDelta& delta, Seconds budget, long nodes,
                       const std::optional<SolutionState>& warm) {
    RepairRequest request;
    request.base = &instance_;
    request.delta = delta;
    request.limits.time_limit = budget;
    request.limits.node_limit = nodes;
    if (clock_.is_work() && config_.backend.kind == BackendKind::kBuiltin) {
      // The budget becomes a node cap so that no real clock is consulted.
      request.limits.node_limit = std::min(nodes, work_units(budget));
      request.limits.time_limit = Seconds(kInfinity);
    }
    request.warm_start = warm;
    try {
      MipResult r = repair(request, config_.backend);
      clock_.charge(r.nodes_explored + 1);
      return r;
    } catch (...) {
      clock_.charge(1);
      throw;
    }
  }

  std::optional<SolutionState> random_point() {
    DestroyContext ctx;
    ctx.base = &instance_;
    ctx.previous = &*current_;
    ctx.rng = &rng_;
    const SubMipDelta delta = random_objective(ctx);
    const double fraction = config_.random_point_fraction;
    const long nodes = std::max(
        1L, static_cast<long>(config_.iteration_node_limit * fraction));
    const MipResult r = run_repair(
        delta, Seconds(config_.iteration_budget.count() * fraction), nodes,
        std::nullopt);
    if (!r.best) return std::nullopt;
    return r.best;
  }

  void record_incumbent(double objective) {
    trace_.incumbents.push_back({clock_.now(), objective});
  }

  const MipInstance& instance_;
  const SearchConfig& config_;
  SearchClock clock_;
  Rng rng_;
  std::optional<SolutionState> current_;
  SearchTrace trace_;
};

SearchResult Search::run() {
  SearchResult out;
  const std::vector<ArmId> arms = filter_portfolio(instance_, config_.portfolio);
  std::vector<OperatorSpec> specs;
  for (const ArmId& arm : arms) {
    for (const OperatorSpec& spec : config_.portfolio) {
      if (spec.label == arm.destroy_label) specs.push_back(spec);
    }
  }
  out.arms = arms;

  // (1) initial solution
  MipResult initial =
      clock_.is_work()
          ? find_initial(instance_, Seconds(kInfinity),
                         config_.initial_node_limit,
                         work_units(config_.initial_budget))
          : find_initial(instance_, config_.initial_budget,
                         config_.initial_node_limit);
  const double initial_start = clock_.now();
  clock_.charge(initial.nodes_explored);
  for (const IncumbentEvent& e : initial.incumbents) {
    const double t = clock_.is_work()
                         ? initial_start + e.node * kWorkUnitSeconds
                         : e.seconds;
    trace_.incumbents.push_back({t, e.objective});
  }
  if (!initial.best) {
    out.status = SearchStatus::kNoInitialFeasible;
    out.diagnostic = initial.status == MipStatus::kInfeasible
                         ? "instance is infeasible"
                         : "no feasible solution within the initial budget";
    out.elapsed = clock_.now();
    out.trace = std::move(trace_);
    return out;
  }
  trace_.time_to_first_feasible = trace_.incumbents.front().time;
  trace_.initial_objective = initial.best->objective();
  current_ = initial.best;
  SolutionState best = *initial.best;

  if (initial.solved_upfront) {
    out.status = SearchStatus::kSolvedUpfront;
    out.best = std::move(best);
    out.elapsed = clock_.now();
    out.trace = std::move(trace_);
    return out;
  }

  // (2) root LP, solved once
  std::vector<double> root_lp;
  {
    const LpResult lp = solve_lp(instance_);
    ++out.root_lp_solves;
    clock_.charge(1);
    if (lp.status == LpStatus::kOptimal) root_lp = lp.values;
  }

  // (3) main loop
  BanditPolicy policy(config_.policy, arms);
  AcceptanceCriterion criterion = config_.acceptance.make();
  int consecutive_errors = 0;
  long iteration = 0;
  while (!should_stop(iteration)) {
    const std::size_t a = policy.select(rng_);
    const OperatorSpec& spec = specs[a];
    TraceEvent event;
    event.iteration = iteration;
    event.arm = spec.label;

    std::optional<SolutionState> candidate;
    try {
      DestroyContext ctx;
      ctx.base = &instance_;
      ctx.previous = &*current_;
      ctx.root_lp = root_lp.empty() ? nullptr : &root_lp;
      ctx.rng = &rng_;
      ctx.random_feasible_provider = [this] { return random_point(); };
      const SubMipDelta delta = destroy(spec, ctx);
      const Seconds budget = spec.kind == OperatorKind::kLocalBranching
                                 ? config_.lb_iteration_budget
                                 : config_.iteration_budget;
      MipResult r =
          run_repair(delta, budget, config_.iteration_node_limit, current_);
      consecutive_errors = 0;
      if (r.best) {
        if (is_feasible(instance_, r.best->values())) {
          candidate = std::move(r.best);
        } else {
          event.note = "repaired point infeasible for the base instance";
        }
      } else {
        event.note = r.status == MipStatus::kInfeasible ? "sub-MIP infeasible"
                                                        : "no solution";
      }
    } catch (const OperatorError& e) {
      event.note = std::string("operator: ") + e.what();
    } catch (const BackendError& e) {
      event.note = std::string("backend: ") + e.what();
      if (++consecutive_errors >= kMaxConsecutiveBackendErrors) {
        out.status = SearchStatus::kAborted;
        out.diagnostic = "repair backend failed " +
                         std::to_string(consecutive_errors) +
                         " times in a row; last error: " + e.what();
        if (!e.captured_output().empty()) {
          out.diagnostic += "\n" + e.captured_output();
        }
      }
    }

    Decision decision;
    if (candidate) {
      event.candidate_obj = candidate->objective();
      decision = criterion.decide(current_->objective(),
                                  candidate->objective(), best.objective(), rng_);
      if (decision.accepted) current_ = candidate;
      if (decision.outcome == OutcomeKind::kBest) {
        best = *candidate;
        record_incumbent(best.objective());
      }
    }
    event.outcome = decision.outcome;
    event.accepted = decision.accepted;
    policy.update(a, outcome_to_reward(config_.reward_scheme, decision.outcome));
    event.temperature = criterion.temperature();
    criterion.advance();
    event.time = clock_.now();
    event.current_obj = current_->objective();
    event.best_obj = best.objective();
    trace_.events.push_back(std::move(event));
    ++iteration;
    if (out.status == SearchStatus::kAborted) break;
  }

  if (!is_feasible(instance_, best.values())) {
    throw ModelError("internal error: best solution is infeasible");
  }
  for (std::size_t a = 0; a < arms.size(); ++a) {
    out.arm_stats.push_back(policy.stats(a));
  }
  out.best = std::move(best);
  out.iterations = iteration;
  out.elapsed = clock_.now();
  out.trace = std::move(trace_);
  return out;
}

}  // namespace

AcceptanceCriterion AcceptanceConfig::make() const {
  if (kind == CriterionKind::kHillClimbing) {
    return AcceptanceCriterion::hill_climbing();
  }
  return AcceptanceCriterion::simulated_annealing(t0, t_end, step);
}

void SearchConfig::validate() const {
  if (portfolio.empty()) throw ConfigError("portfolio is empty");
  std::set<std::string> labels;
  for (const OperatorSpec& spec : portfolio) {
    if (!labels.insert(spec.label).second) {
      throw ConfigError("duplicate operator label '" + spec.label + "'");
    }
  }
  reward_scheme.validate();
  if (policy.kind == PolicyKind::kThompsonSampling &&
      !reward_scheme.is_binary()) {
    throw ConfigError("Thompson sampling needs a binary reward scheme");
  }
  if (policy.kind == PolicyKind::kEpsilonGreedy &&
      !(policy.epsilon >= 0.0 && policy.epsilon <= 1.0)) {
    throw ConfigError("epsilon must lie in [0, 1]");
  }
  if (policy.kind == PolicyKind::kSoftmax && !(policy.tau > 0.0)) {
    throw ConfigError("softmax tau must be positive");
  }
  acceptance.make();
  backend.validate();
  if (!(initial_budget.count() > 0.0) || !(iteration_budget.count() > 0.0) ||
      !(lb_iteration_budget.count() > 0.0)) {
    throw ConfigError("time budgets must be positive");
  }
  if (initial_node_limit <= 0 || iteration_node_limit <= 0) {
    throw ConfigError("node limits must be positive");
  }
  if (!(random_point_fraction > 0.0 && random_point_fraction <= 1.0)) {
    throw ConfigError("random point fraction must lie in (0, 1]");
  }
  if (stop.max_iterations && *stop.max_iterations < 0) {
    throw ConfigError("iteration limit must be non-negative");
  }
  if (stop.max_wall_time_s && !(*stop.max_wall_time_s >= 0.0)) {
    throw ConfigError("wall time limit must be non-negative");
  }
  if (!stop.max_iterations && !stop.max_wall_time_s) {
    throw ConfigError("a stop criterion (iterations or wall time) is required");
  }
}

std::vector<OperatorSpec> paper16_portfolio() {
  std::vector<OperatorSpec> out;
  for (const char* label :
       {"crossover", "lb_10", "lb_25", "lb_50", "mutation_25", "mutation_50",
        "mutation_75", "proximity_05", "proximity_15", "proximity_30",
        "rens_25", "rens_50", "rens_75", "rins_25", "rins_50", "rins_75"}) {
    out.push_back(OperatorSpec::parse(label));
  }
  return out;
}

std::vector<OperatorSpec> all_operator_portfolio() {
  std::vector<OperatorSpec> out = paper16_portfolio();
  out.push_back(OperatorSpec::parse("dins"));
  out.push_back(OperatorSpec::parse("random_objective"));
  return out;
}

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kCompleted:
      return "completed";
    case SearchStatus::kSolvedUpfront:
      return "solved_upfront";
    case SearchStatus::kNoInitialFeasible:
      return "no_initial_feasible";
    case SearchStatus::kAborted:
      return "aborted";
  }
  return "unknown";
}

std::vector<ArmId> filter_portfolio(const MipInstance& instance,
                                    const std::vector<OperatorSpec>& portfolio) {
  if (portfolio.empty()) throw ConfigError("portfolio is empty");
  std::vector<ArmId> arms;
  std::set<std::string> labels;
  for (const OperatorSpec& spec : portfolio) {
    if (!labels.insert(spec.label).second) {
      throw ConfigError("duplicate operator label '" + spec.label + "'");
    }
    if (applicability(spec.kind).admits(instance)) {
      arms.push_back({spec.label, "repair"});
    }
  }
  if (arms.empty()) {
    std::string cause = instance.discrete().empty()
                            ? "instance has no integer or binary variables"
                            : "instance has no binary variables";
    throw ConfigError("no operator in the portfolio applies: " + cause);
  }
  return arms;
}

OutcomeKind classify_outcome(const AcceptanceCriterion& criterion,
                             double current, double candidate, double best,
                             Rng& rng) {
  return criterion.decide(current, candidate, best, rng).outcome;
}

SearchResult solve(const MipInstance& instance, const SearchConfig& config) {
  config.validate();
  return Search(instance, config).run();
}

}  // namespace balans
