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

#include "balans/error.h"
#include "balans/generators.h"
#include "balans/mps.h"

namespace balans {
namespace {

TEST(Generators, DeterministicPerSeed) {
  const GeneratorParams p;
  for (Family f : {Family::kMultipleKnapsack, Family::kSetCover,
                   Family::kMaxIndependentSet, Family::kMinVertexCover}) {
    const MipInstance a = generate(f, p, 5);
    EXPECT_EQ(a, generate(f, p, 5)) << short_name(f);
    EXPECT_NE(write_mps(a), write_mps(generate(f, p, 6))) << short_name(f);
    EXPECT_EQ(a.name(), std::string(short_name(f)) + "_5");
    EXPECT_EQ(a.binaries().size(), static_cast<std::size_t>(a.num_vars()));
  }
}

TEST(Generators, Shapes) {
  GeneratorParams p;
  p.items = 10;
  p.knapsacks = 2;
  const MipInstance mk = generate(Family::kMultipleKnapsack, p, 1);
  EXPECT_EQ(mk.num_vars(), 20);
  EXPECT_EQ(mk.num_constraints(), 2 + 10);
  EXPECT_TRUE(is_feasible(mk, std::vector<double>(20, 0.0)));

  p.elements = 30;
  p.sets = 40;
  const MipInstance sc = generate(Family::kSetCover, p, 1);
  EXPECT_EQ(sc.num_vars(), 40);
  EXPECT_EQ(sc.num_constraints(), 30);
  for (int i = 0; i < sc.num_constraints(); ++i) {
    EXPECT_GE(sc.constraint(i).coeffs.size(), 2u);
  }
  EXPECT_TRUE(is_feasible(sc, std::vector<double>(40, 1.0)));
}

TEST(Generators, GraphFamiliesShareGraph) {
  const Graph g = random_graph(30, 0.2, 3);
  for (const auto& [u, v] : g.edges) EXPECT_LT(u, v);
  const MipInstance mis = independent_set_instance(g, "mis");
  const MipInstance mvc = vertex_cover_instance(g, "mvc");
  EXPECT_EQ(mis.num_constraints(), static_cast<int>(g.edges.size()));
  EXPECT_EQ(mvc.num_constraints(), static_cast<int>(g.edges.size()));
  EXPECT_TRUE(is_feasible(mis, std::vector<double>(30, 0.0)));
  EXPECT_TRUE(is_feasible(mvc, std::vector<double>(30, 1.0)));
}

TEST(Generators, ValidatesParameters) {
  GeneratorParams p;
  p.density = 0.0;
  EXPECT_THROW(generate(Family::kSetCover, p, 1), ConfigError);
  p = {};
  p.nodes = 1;
  EXPECT_THROW(generate(Family::kMaxIndependentSet, p, 1), ConfigError);
  EXPECT_EQ(parse_family("set_cover"), Family::kSetCover);
  EXPECT_FALSE(parse_family("tsp"));
}

}  // namespace
}  // namespace balans
