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

#include <benchmark/benchmark.h>

#include "balans/config.h"
#include "balans/engine.h"
#include "balans/generators.h"

namespace balans {
namespace {

// Short search on the default preset, node-limited for stable timings.
void BM_Search(benchmark::State& state) {
  const Family family = static_cast<Family>(state.range(0));
  const MipInstance m = generate(family, GeneratorParams{}, 3);
  state.SetLabel(m.name());
  RunConfig c = preset("TS_accept_same_SA");
  c.search.stop.max_iterations = 20;
  c.search.iteration_node_limit = 500;
  c.search.initial_node_limit = 50;
  for (auto _ : state) {
    const SearchResult r = solve(m, c.search);
    benchmark::DoNotOptimize(r.best);
  }
}
BENCHMARK(BM_Search)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace balans
