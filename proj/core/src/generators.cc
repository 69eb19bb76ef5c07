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

#include "balans/generators.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "balans/error.h"
#include "balans/random.h"

namespace balans {
namespace {

std::string instance_name(Family family, std::uint64_t seed) {
  return std::string(short_name(family)) + "_" + std::to_string(seed);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

MipInstance multiple_knapsack(const GeneratorParams& p, std::uint64_t seed,
                              std::string name) {
  Rng rng(seed);
  std::vector<long> weight(p.items), value(p.items);
  for (int i = 0; i < p.items; ++i) {
    weight[i] = rng.uniform_int(5, 30);
    value[i] = rng.uniform_int(5, 30);
  }
  const double total = std::accumulate(weight.begin(), weight.end(), 0.0);
  MipBuilder b(std::move(name));
  b.maximize();
  std::vector<std::vector<int>> x(p.items, std::vector<int>(p.knapsacks));
  for (int i = 0; i < p.items; ++i) {
    for (int k = 0; k < p.knapsacks; ++k) {
      x[i][k] = b.add_binary("x_" + std::to_string(i) + "_" + std::to_string(k),
                             static_cast<double>(value[i]));
    }
  }
  for (int k = 0; k < p.knapsacks; ++k) {
    // Total capacity is about half the total weight.
    const double share = rng.uniform(0.8, 1.2);
    const double capacity =
        std::max(5.0, std::floor(0.5 * total / p.knapsacks * share));
    std::vector<Term> row;
    for (int i = 0; i < p.items; ++i) {
      row.push_back({x[i][k], static_cast<double>(weight[i])});
    }
    b.add_constraint("cap_" + std::to_string(k), std::move(row),
                     Relation::kLessEqual, capacity);
  }
  for (int i = 0; i < p.items; ++i) {
    std::vector<Term> row;
    for (int k = 0; k < p.knapsacks; ++k) row.push_back({x[i][k], 1.0});
    b.add_constraint("assign_" + std::to_string(i), std::move(row),
                     Relation::kLessEqual, 1.0);
  }
  return b.build();
}

MipInstance set_cover(const GeneratorParams& p, std::uint64_t seed,
                      std::string name) {
  Rng rng(seed);
  std::vector<std::vector<int>> covers(p.elements);
  for (int e = 0; e < p.elements; ++e) {
    for (int s = 0; s < p.sets; ++s) {
      if (rng.uniform() < p.density) covers[e].push_back(s);
    }
    // Every element is covered by at least two sets.
    while (covers[e].size() < 2) {
      const int s = static_cast<int>(rng.uniform_int(0, p.sets - 1));
      if (std::find(covers[e].begin(), covers[e].end(), s) == covers[e].end()) {
        covers[e].insert(
            std::upper_bound(covers[e].begin(), covers[e].end(), s), s);
      }
    }
  }
  MipBuilder b(std::move(name));
  for (int s = 0; s < p.sets; ++s) {
    b.add_binary("y_" + std::to_string(s),
                 static_cast<double>(rng.uniform_int(1, p.max_cost)));
  }
  for (int e = 0; e < p.elements; ++e) {
    std::vector<Term> row;
    for (int s : covers[e]) row.push_back({s, 1.0});
    b.add_constraint("cover_" + std::to_string(e), std::move(row),
                     Relation::kGreaterEqual, 1.0);
  }
  return b.build();
}

}  // namespace

const char* short_name(Family family) {
  switch (family) {
    case Family::kMultipleKnapsack:
      return "mk";
    case Family::kSetCover:
      return "sc";
    case Family::kMaxIndependentSet:
      return "mis";
    case Family::kMinVertexCover:
      return "mvc";
  }
  return "unknown";
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : {Family::kMultipleKnapsack, Family::kSetCover,
                   Family::kMaxIndependentSet, Family::kMinVertexCover}) {
    if (name == short_name(f)) return f;
  }
  if (name == "multiple_knapsack") return Family::kMultipleKnapsack;
  if (name == "set_cover") return Family::kSetCover;
  if (name == "max_independent_set") return Family::kMaxIndependentSet;
  if (name == "min_vertex_cover") return Family::kMinVertexCover;
  return std::nullopt;
}

void GeneratorParams::validate(Family family) const {
  switch (family) {
    case Family::kMultipleKnapsack:
      require(items >= 1 && items <= 200, "items must lie in [1, 200]");
      require(knapsacks >= 1 && knapsacks <= 50,
              "knapsacks must lie in [1, 50]");
      break;
    case Family::kSetCover:
      require(elements >= 1 && elements <= 300,
              "elements must lie in [1, 300]");
      require(sets >= 2 && sets <= 300, "sets must lie in [2, 300]");
      require(density > 0.0 && density <= 1.0, "density must lie in (0, 1]");
      require(max_cost >= 1 && max_cost <= 1000000,
              "max cost must lie in [1, 1000000]");
      break;
    case Family::kMaxIndependentSet:
    case Family::kMinVertexCover:
      require(nodes >= 2 && nodes <= 200, "nodes must lie in [2, 200]");
      require(edge_probability > 0.0 && edge_probability <= 1.0,
              "edge probability must lie in (0, 1]");
      break;
  }
}

Graph random_graph(int nodes, double edge_probability, std::uint64_t seed) {
  Rng rng(seed);
  Graph g;
  g.nodes = nodes;
  for (int u = 0; u < nodes; ++u) {
    for (int v = u + 1; v < nodes; ++v) {
      if (rng.uniform() < edge_probability) g.edges.push_back({u, v});
    }
  }
  return g;
}

MipInstance independent_set_instance(const Graph& graph, std::string name) {
  MipBuilder b(std::move(name));
  b.maximize();
  for (int v = 0; v < graph.nodes; ++v) b.add_binary("x_" + std::to_string(v), 1.0);
  for (const auto& [u, v] : graph.edges) {
    b.add_constraint("e_" + std::to_string(u) + "_" + std::to_string(v),
                     {{u, 1.0}, {v, 1.0}}, Relation::kLessEqual, 1.0);
  }
  return b.build();
}

MipInstance vertex_cover_instance(const Graph& graph, std::string name) {
  MipBuilder b(std::move(name));
  for (int v = 0; v < graph.nodes; ++v) b.add_binary("x_" + std::to_string(v), 1.0);
  for (const auto& [u, v] : graph.edges) {
    b.add_constraint("e_" + std::to_string(u) + "_" + std::to_string(v),
                     {{u, 1.0}, {v, 1.0}}, Relation::kGreaterEqual, 1.0);
  }
  return b.build();
}

MipInstance generate(Family family, const GeneratorParams& params,
                     std::uint64_t seed, std::string name) {
  params.validate(family);
  if (name.empty()) name = instance_name(family, seed);
  switch (family) {
    case Family::kMultipleKnapsack:
      return multiple_knapsack(params, seed, std::move(name));
    case Family::kSetCover:
      return set_cover(params, seed, std::move(name));
    case Family::kMaxIndependentSet:
      return independent_set_instance(
          random_graph(params.nodes, params.edge_probability, seed),
          std::move(name));
    case Family::kMinVertexCover:
      return vertex_cover_instance(
          random_graph(params.nodes, params.edge_probability, seed),
          std::move(name));
  }
  throw ConfigError("unknown family");
}

}  // namespace balans
