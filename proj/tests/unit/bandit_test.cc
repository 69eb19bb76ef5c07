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

#include "balans/bandit.h"
#include "balans/error.h"
#include "balans/random.h"

namespace balans {
namespace {

std::vector<ArmId> arms(int n) {
  std::vector<ArmId> out;
  for (int i = 0; i < n; ++i) out.push_back({"arm" + std::to_string(i)});
  return out;
}

TEST(Bandit, RewardSchemes) {
  EXPECT_TRUE(RewardScheme::accept_same().is_binary());
  EXPECT_FALSE(RewardScheme::linear().is_binary());
  EXPECT_EQ(outcome_to_reward(RewardScheme::exponential(), OutcomeKind::kBetter), 4);
  EXPECT_EQ(outcome_to_reward(RewardScheme::accept_better(), OutcomeKind::kAccepted), 1);
  EXPECT_EQ(outcome_to_reward(RewardScheme::accept_same(), OutcomeKind::kAccepted), 0);
  EXPECT_THROW((RewardScheme{{1, 2, 0, 0}}).validate(), ConfigError);
}

TEST(Bandit, PullsEveryArmFirst) {
  BanditPolicy p({PolicyKind::kEpsilonGreedy, 0.0, 1.0}, arms(3));
  Rng rng(1);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(p.select(rng), i);
    p.update(i, i == 1 ? 3.0 : 0.0);
  }
  EXPECT_EQ(p.select(rng), 1u);
}

TEST(Bandit, RunningMean) {
  BanditPolicy p({PolicyKind::kSoftmax, 0.1, 1.0}, arms(1));
  p.update(0, 3);
  p.update(0, 1);
  EXPECT_EQ(p.stats(0).pulls, 2);
  EXPECT_DOUBLE_EQ(p.stats(0).mean, 2.0);
}

TEST(Bandit, ThompsonPosterior) {
  BanditPolicy p({PolicyKind::kThompsonSampling, 0.1, 1.0}, arms(2));
  p.update(0, 1);
  p.update(0, 0);
  p.update(0, 1);
  EXPECT_DOUBLE_EQ(p.stats(0).alpha, 3.0);
  EXPECT_DOUBLE_EQ(p.stats(0).beta, 2.0);
  EXPECT_THROW(p.update(1, 2.0), ConfigError);
}

TEST(Bandit, ThompsonPrefersBetterArm) {
  BanditPolicy p({PolicyKind::kThompsonSampling, 0.1, 1.0}, arms(2));
  p.set_stats(0, {50, 0.9, 46, 6});
  p.set_stats(1, {50, 0.1, 6, 46});
  Rng rng(3);
  int first = 0;
  for (int i = 0; i < 1000; ++i) first += p.select(rng) == 0;
  EXPECT_GT(first, 990);
}

TEST(Bandit, RejectsBadConfig) {
  EXPECT_THROW(BanditPolicy({PolicyKind::kSoftmax, 0.1, 1.0}, {}), ConfigError);
  EXPECT_THROW(BanditPolicy({PolicyKind::kEpsilonGreedy, 1.5, 1.0}, arms(2)),
               ConfigError);
  EXPECT_THROW(BanditPolicy({PolicyKind::kSoftmax, 0.1, 0.0}, arms(2)),
               ConfigError);
}

TEST(Random, UniformIntAndSample) {
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const long v = rng.uniform_int(-2, 2);
    EXPECT_GE(v, -2);
    EXPECT_LE(v, 2);
  }
  const std::vector<int> items{5, 7, 9, 11, 13};
  const std::vector<int> s = rng.sample(items, 3);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
}

TEST(Random, BetaMean) {
  Rng rng(11);
  double sum = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) sum += rng.beta(2.0, 6.0);
  EXPECT_NEAR(sum / n, 0.25, 0.01);
}

}  // namespace
}  // namespace balans
