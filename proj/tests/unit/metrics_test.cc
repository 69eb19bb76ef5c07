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

#include <sstream>

#include "balans/metrics.h"
#include "balans/report.h"

namespace balans {
namespace {

TEST(Metrics, PrimalGap) {
  EXPECT_DOUBLE_EQ(primal_gap(-90.0, -100.0), 0.1);
  EXPECT_DOUBLE_EQ(primal_gap(std::nullopt, -100.0), 1.0);
  EXPECT_DOUBLE_EQ(primal_gap(5.0, -100.0), 1.0);  // opposite sign
  EXPECT_DOUBLE_EQ(primal_gap(1e-9, 0.0), 1e-9 / kGapEpsilon);
  EXPECT_DOUBLE_EQ(primal_gap(-300.0, -100.0), 2.0);  // not clamped
}

TEST(Metrics, PrimalIntegralStepFunction) {
  GapSeries s;
  s.v_star = -8;
  s.horizon = 20;
  s.breakpoints = {{0, -4}, {10, -6}};
  // 10 * 0.5 + 10 * 0.25
  EXPECT_DOUBLE_EQ(primal_integral(s), 7.5);
  s.breakpoints = {{5, -8}};
  EXPECT_DOUBLE_EQ(primal_integral(s), 5.0);
  s.breakpoints.clear();
  EXPECT_DOUBLE_EQ(primal_integral(s), 20.0);
}

SearchTrace trace_of(const std::vector<std::string>& arms) {
  SearchTrace t;
  for (const std::string& a : arms) {
    TraceEvent e;
    e.arm = a;
    t.events.push_back(e);
  }
  return t;
}

TEST(Metrics, ArmDistribution) {
  const SearchTrace t = trace_of({"rins_25", "lb_10", "rins_50", "rins_25"});
  const auto raw = arm_distribution(t, false);
  ASSERT_EQ(raw.size(), 3u);
  EXPECT_EQ(raw[0].label, "rins_25");
  EXPECT_EQ(raw[0].count, 2);
  EXPECT_DOUBLE_EQ(raw[0].percentage, 50.0);
  const auto grouped = arm_distribution(t, true);
  ASSERT_EQ(grouped.size(), 6u);
  double total = 0;
  for (const ArmShare& s : grouped) {
    total += s.percentage;
    if (s.label == "RINS") EXPECT_EQ(s.count, 3);
    if (s.label == "Crossover") EXPECT_EQ(s.count, 0);
  }
  EXPECT_DOUBLE_EQ(total, 100.0);
  EXPECT_TRUE(arm_distribution(SearchTrace{}, true).empty());
  EXPECT_EQ(arm_distribution(trace_of({"dins"}), true).size(), 7u);
}

TEST(Report, DoublesRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, -12.0, 1e-17, 123456789.125}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(2.0), "2");
}

TEST(Report, TraceCsv) {
  SearchTrace t = trace_of({"a,b"});
  t.events[0].candidate_obj = -3.5;
  t.events[0].outcome = OutcomeKind::kBest;
  std::ostringstream s;
  write_trace_csv(s, t);
  const std::string text = s.str();
  EXPECT_EQ(text.rfind("iteration,wall_time_s,arm,", 0), 0u);
  EXPECT_NE(text.find("\"a,b\""), std::string::npos);
  EXPECT_NE(text.find("-3.5"), std::string::npos);
}

TEST(Report, SummaryHasMeanAndStd) {
  BenchRow a, b;
  a.instance = "mk_1_0";
  a.pg_final = 0.0;
  a.pi = 1.0;
  b.instance = "mk_2_0";
  b.pg_final = 0.2;
  b.pi = 3.0;
  std::ostringstream s;
  write_summary_csv(s, {a, b});
  EXPECT_NE(s.str().find("\nmean,"), std::string::npos);
  EXPECT_NE(s.str().find("\nstd,"), std::string::npos);
  const auto [mean, sd] = mean_and_std({1.0, 3.0});
  EXPECT_DOUBLE_EQ(mean, 2.0);
  EXPECT_DOUBLE_EQ(sd, 1.0);
}

TEST(Report, InfersFamilyAndSeed) {
  std::string family, seed;
  infer_family_and_seed("mis_12_0", family, seed);
  EXPECT_EQ(family, "mis");
  EXPECT_EQ(seed, "12");
  infer_family_and_seed("custom", family, seed);
  EXPECT_TRUE(family.empty());
}

}  // namespace
}  // namespace balans
