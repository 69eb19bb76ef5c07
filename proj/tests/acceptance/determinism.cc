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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "balans/config.h"
#include "cli.h"
#include "criteria.h"

namespace balans::acceptance {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

Outcome determinism(const Context& ctx) {
  const fs::path root = ctx.scratch / "determinism";
  fs::remove_all(root);
  const fs::path inst = root / "instances";
  std::ostringstream sink;
  int seed = 11;
  for (const char* family : {"mk", "sc", "mis", "mvc"}) {
    if (cli::cmd_gen(family, GeneratorParams{}, seed++, 1, inst, sink, sink) != 0) {
      return {false, "instance generation failed"};
    }
  }

  RunConfig config = preset("TS_accept_same_SA");
  config.search.stop.max_iterations = 40;
  config.search.seed = 3;
  config.oracle_nodes = 2000;

  const int jobs[] = {1, 1, 4};
  for (int r = 0; r < 3; ++r) {
    const fs::path out = root / ("run" + std::to_string(r)) / "summary.csv";
    if (cli::cmd_bench(inst, config, out, jobs[r], sink, sink) != 0) {
      return {false, "bench failed: " + sink.str()};
    }
  }

  int files = 0;
  int same_repeat = 0;
  int same_jobs = 0;
  for (const auto& entry : fs::directory_iterator(root / "run0" / "summary.traces")) {
    const std::string name = entry.path().filename().string();
    const std::string a = slurp(entry.path());
    ++files;
    same_repeat += a == slurp(root / "run1" / "summary.traces" / name);
    same_jobs += a == slurp(root / "run2" / "summary.traces" / name);
  }
  const bool arms_same =
      slurp(root / "run0" / "summary.arms.csv") == slurp(root / "run2" / "summary.arms.csv");
  std::ostringstream d;
  d << files << " trace CSVs; identical across repeat " << same_repeat << "/"
    << files << ", across --jobs 1 vs 4 " << same_jobs << "/" << files
    << "; arm CSVs " << (arms_same ? "identical" : "DIFFER");
  return {files == 4 && same_repeat == files && same_jobs == files && arms_same,
          d.str()};
}

}  // namespace balans::acceptance
