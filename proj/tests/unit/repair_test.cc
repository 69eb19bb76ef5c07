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

#include <chrono>

#include "balans/error.h"
#include "balans/repair.h"
#include "balans/subprocess.h"
#include "test_util.h"

namespace balans {
namespace {

std::string tool_command() {
  return shell_quote(BALANS_TOOL_PATH) +
         " mip {input} --out {output} --time-limit {timelimit}";
}

RepairRequest fix_first(const MipInstance& base, double value) {
  RepairRequest req;
  req.base = &base;
  req.delta.fixings[0] = value;
  return req;
}

TEST(Repair, BuiltinSolvesSubMip) {
  const MipInstance m = testing::corpus("ks3.mps");
  const MipResult r = repair(fix_first(m, 0.0), BackendConfig::builtin());
  ASSERT_EQ(r.status, MipStatus::kOptimal);
  // Without x1 the best is x2 + x3 = -7.
  EXPECT_DOUBLE_EQ(r.best->objective(), -7.0);
  EXPECT_EQ((*r.best)[0], 0.0);
}

TEST(Repair, ExternalBackendAgreesWithBuiltin) {
  const MipInstance m = testing::corpus("assign3.mps");
  RepairRequest req = fix_first(m, 1.0);
  req.limits.time_limit = Seconds(10.0);
  const MipResult builtin = repair(req, BackendConfig::builtin());
  const MipResult external = repair(req, BackendConfig::external(tool_command()));
  ASSERT_TRUE(builtin.best);
  ASSERT_TRUE(external.best);
  EXPECT_DOUBLE_EQ(builtin.best->objective(), external.best->objective());
}

TEST(Repair, ExternalWarmStartPlaceholder) {
  const MipInstance m = testing::corpus("ks3.mps");
  RepairRequest req = fix_first(m, 1.0);
  req.warm_start = SolutionState::evaluate(m, {1, 0, 0});
  const MipResult r = repair(
      req, BackendConfig::external(tool_command() + " --warm-start {warmstart}"));
  ASSERT_TRUE(r.best);
  EXPECT_DOUBLE_EQ(r.best->objective(), -8.0);
}

TEST(Repair, FailingCommandRaisesBackendError) {
  const MipInstance m = testing::corpus("ks3.mps");
  EXPECT_THROW(repair(fix_first(m, 0.0),
                      BackendConfig::external("echo broken; exit 4 # {input} {output}")),
               BackendError);
  EXPECT_THROW(repair(fix_first(m, 0.0),
                      BackendConfig::external("echo 'x1 oops' > {output} # {input}")),
               BackendError);
}

TEST(Repair, TemplateNeedsPlaceholders) {
  EXPECT_THROW(BackendConfig::external("solver {input}").validate(), ConfigError);
  EXPECT_NO_THROW(BackendConfig::external("s {input} {output}").validate());
}

TEST(Repair, SlackExtensionCoversAddedRows) {
  const MipInstance m = testing::corpus("ks3.mps");
  SubMipDelta d;
  d.slack_vars.push_back({0.0, kInfinity, 100.0});
  d.added_constraints.push_back(
      {"p", {{0, 1.0}, {3, -1.0}}, Relation::kLessEqual, 0.0});
  const std::vector<double> x{1, 0, 1};
  const std::vector<double> ext = extend_with_slacks(m, d, x);
  ASSERT_EQ(ext.size(), 4u);
  EXPECT_DOUBLE_EQ(ext[3], 1.0);
  EXPECT_TRUE(is_feasible(apply_delta(m, d), ext));
}

TEST(Subprocess, TimeoutKillsProcessGroup) {
  const auto start = std::chrono::steady_clock::now();
  const CommandResult r = run_command("sleep 30", Seconds(0.2), Seconds(0.2));
  const double took = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start).count();
  EXPECT_TRUE(r.timed_out);
  EXPECT_LT(took, 10.0);
}

TEST(Subprocess, CapturesOutputAndExitCode) {
  const CommandResult r = run_command("echo hi; echo err 1>&2; exit 3", Seconds(5));
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.output.find("hi"), std::string::npos);
  EXPECT_NE(r.output.find("err"), std::string::npos);
  EXPECT_EQ(shell_quote("a'b"), "'a'\\''b'");
}

}  // namespace
}  // namespace balans
