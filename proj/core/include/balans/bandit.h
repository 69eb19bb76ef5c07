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

#ifndef BALANS_BANDIT_H_
#define BALANS_BANDIT_H_

#include <array>
#include <string>
#include <vector>

#include "balans/random.h"

namespace balans {

enum class OutcomeKind { kBest = 0, kBetter = 1, kAccepted = 2, kRejected = 3 };

const char* to_string(OutcomeKind outcome);

// One bandit arm: a (destroy, repair) operator pair.
struct ArmId {
  std::string destroy_label;
  std::string repair_label = "repair";

  std::string label() const { return destroy_label; }
  friend bool operator==(const ArmId&, const ArmId&) = default;
};

// Rewards for (best, better, accepted, rejected), non-increasing.
struct RewardScheme {
  std::array<double, 4> values{3, 2, 1, 0};

  static RewardScheme linear() { return {{3, 2, 1, 0}}; }
  static RewardScheme exponential() { return {{8, 4, 2, 1}}; }
  // Binary schemes for Thompson sampling.
  static RewardScheme accept_same() { return {{1, 1, 0, 0}}; }
  static RewardScheme accept_better() { return {{1, 1, 1, 0}}; }

  bool is_binary() const;
  // Throws ConfigError unless best >= better >= accept >= reject.
  void validate() const;
};

double outcome_to_reward(const RewardScheme& scheme, OutcomeKind outcome);

enum class PolicyKind { kEpsilonGreedy, kSoftmax, kThompsonSampling };

struct PolicyConfig {
  PolicyKind kind = PolicyKind::kThompsonSampling;
  double epsilon = 0.1;
  double tau = 1.0;
};

struct ArmStats {
  long pulls = 0;
  double mean = 0.0;
  double alpha = 1.0;  // Thompson posterior Beta(alpha, beta)
  double beta = 1.0;
};

// Learning policy over a fixed set of arms. Every arm is pulled once, in
// registration order, before the policy's own rule takes over.
class BanditPolicy {
 public:
  // Throws ConfigError on an empty arm list or bad parameters.
  BanditPolicy(PolicyConfig config, std::vector<ArmId> arms);

  const std::vector<ArmId>& arms() const { return arms_; }
  const PolicyConfig& config() const { return config_; }
  std::size_t num_arms() const { return arms_.size(); }

  // Index of the next arm to pull.
  std::size_t select(Rng& rng) const;
  // Thompson requires reward in {0, 1} (ConfigError otherwise).
  void update(std::size_t arm, double reward);

  const ArmStats& stats(std::size_t arm) const { return stats_[arm]; }
  // Overrides the statistics of one arm (reporting/testing hook).
  void set_stats(std::size_t arm, ArmStats stats) { stats_[arm] = stats; }

  std::size_t index_of(const ArmId& arm) const;

 private:
  std::size_t greedy_arm() const;

  PolicyConfig config_;
  std::vector<ArmId> arms_;
  std::vector<ArmStats> stats_;
};

}  // namespace balans

#endif  // BALANS_BANDIT_H_
