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

#ifndef BALANS_GENERATORS_H_
#define BALANS_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balans/mip.h"

namespace balans {

enum class Family { kMultipleKnapsack, kSetCover, kMaxIndependentSet, kMinVertexCover };

// Short names: "mk", "sc", "mis", "mvc".
const char* short_name(Family family);
std::optional<Family> parse_family(const std::string& name);

struct GeneratorParams {
  // Multiple knapsack.
  int items = 50;
  int knapsacks = 5;
  // Set cover: elements (rows) x sets (columns).
  int elements = 80;
  int sets = 150;
  double density = 0.2;
  int max_cost = 10;  // set costs are uniform in [1, max_cost]
  // Graphs for independent set and vertex cover.
  int nodes = 80;
  double edge_probability = 0.08;

  // Throws ConfigError when outside the supported ranges.
  void validate(Family family) const;
};

struct Graph {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, no duplicates
};

// G(n, p) random graph.
Graph random_graph(int nodes, double edge_probability, std::uint64_t seed);

MipInstance independent_set_instance(const Graph& graph, std::string name);
MipInstance vertex_cover_instance(const Graph& graph, std::string name);

// Deterministic instance for (family, params, seed). The name defaults to
// "<short name>_<seed>".
MipInstance generate(Family family, const GeneratorParams& params,
                     std::uint64_t seed, std::string name = {});

}  // namespace balans

#endif  // BALANS_GENERATORS_H_
