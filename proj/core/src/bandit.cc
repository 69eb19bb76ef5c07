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

#include "balans/bandit.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "balans/error.h"

namespace balans {
const char* to_string(OutcomeKind outcome) {
  switch (outcome) {
    case OutcomeKind::kBest:
      return "best";
    case OutcomeKind::kBetter:
      return "better";
    case OutcomeKind::kAccepted:
      return "accepted";
    case OutcomeKind::kRejected:
      return "rejected";
  }
  return "unknown";
}

bool RewardScheme::is_binary() const {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return v == 0.0 || v == 1.0; });
}

void RewardScheme::validate() const {
  for (double v : values) {
    if (!std::isfinite(v)) throw ConfigError("reward values must be finite");
  }
  for (int i = 0; i + 1 < 4; ++i) {
    if (values[i] < values[i + 1]) {
      throw ConfigError(
          "rewards must be ordered best >= better >= accept >= reject");
    }
  }
}

double outcome_to_reward(const RewardScheme& scheme, OutcomeKind outcome) {
  return scheme.values[static_cast<int>(outcome)];
}

BanditPolicy::BanditPolicy(PolicyConfig config, std::vector<ArmId> arms)
    : config_(config), arms_(std::move(arms)), stats_(arms_.size()) {
  if (arms_.empty()) throw ConfigError("bandit needs at least one arm");
  for (std::size_t i = 0; i < arms_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (arms_[i] == arms_[j]) {
        throw ConfigError("duplicate arm '" + arms_[i].destroy_label + "'");
      }
    }
  }
  if (config_.kind == PolicyKind::kEpsilonGreedy &&
      !(config_.epsilon >= 0.0 && config_.epsilon <= 1.0)) {
    throw ConfigError("epsilon must lie in [0, 1]");
  }
  if (config_.kind == PolicyKind::kSoftmax && !(config_.tau > 0.0)) {
    throw ConfigError("softmax temperature tau must be positive");
  }
}

std::size_t BanditPolicy::index_of(const ArmId& arm) const {
  for (std::size_t i = 0; i < arms_.size(); ++i) {
    if (arms_[i] == arm) return i;
  }
  throw ConfigError("arm '" + arm.destroy_label + "' is not registered");
}

std::size_t BanditPolicy::greedy_arm() const {
  std::size_t best = 0;
  for (std::size_t a = 1; a < stats_.size(); ++a) {
    if (stats_[a].mean > stats_[best].mean) best = a;
  }
  return best;
}

std::size_t BanditPolicy::select(Rng& rng) const {
  for (std::size_t a = 0; a < stats_.size(); ++a) {
    if (stats_[a].pulls == 0) return a;
  }
  const std::size_t k = stats_.size();
  switch (config_.kind) {
    case PolicyKind::kEpsilonGreedy: {
      if (rng.uniform() < config_.epsilon) {
        return static_cast<std::size_t>(rng.uniform_int(0, long(k) - 1));
      }
      return greedy_arm();
    }
    case PolicyKind::kSoftmax: {
      double top = -std::numeric_limits<double>::infinity();
      for (const ArmStats& s : stats_) top = std::max(top, s.mean);
      std::vector<double> weights(k);
      double total = 0.0;
      for (std::size_t a = 0; a < k; ++a) {
        weights[a] = std::exp((stats_[a].mean - top) / config_.tau);
        total += weights[a];
      }
      double u = rng.uniform() * total;
      for (std::size_t a = 0; a < k; ++a) {
        if (u < weights[a]) return a;
        u -= weights[a];
      }
      return k - 1;
    }
    case PolicyKind::kThompsonSampling: {
      std::size_t best = 0;
      double best_theta = -1.0;
      for (std::size_t a = 0; a < k; ++a) {
        const double theta = rng.beta(stats_[a].alpha, stats_[a].beta);
        if (theta > best_theta) {
          best_theta = theta;
          best = a;
        }
      }
      return best;
    }
  }
  return 0;
}

void BanditPolicy::update(std::size_t arm, double reward) {
  if (arm >= stats_.size()) throw ConfigError("unknown arm index");
  ArmStats& s = stats_[arm];
  if (config_.kind == PolicyKind::kThompsonSampling) {
    if (reward != 0.0 && reward != 1.0) {
      throw ConfigError("Thompson sampling needs binary rewards, got " +
                        std::to_string(reward));
    }
    s.alpha += reward;
    s.beta += 1.0 - reward;
  }
  ++s.pulls;
  s.mean += (reward - s.mean) / static_cast<double>(s.pulls);
}

}  // namespace balans
