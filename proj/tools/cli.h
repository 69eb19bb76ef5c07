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

#ifndef BALANS_TOOLS_CLI_H_
#define BALANS_TOOLS_CLI_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "balans/config.h"
#include "balans/generators.h"

namespace balans::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNoInitialFeasible = 2;
inline constexpr int kExitAborted = 3;

// Configuration from a file, or from a named preset when `path` is empty.
// BALANS_EXTERNAL_SOLVER, when set, replaces the backend with that command.
RunConfig load_config(const std::string& path, const std::string& preset_name);

int cmd_solve(const std::filesystem::path& instance_path, const RunConfig& config,
              const std::filesystem::path& output_dir, std::ostream& out,
              std::ostream& err);

int cmd_bench(const std::filesystem::path& instance_dir, const RunConfig& config,
              const std::filesystem::path& output_path, int jobs,
              std::ostream& out, std::ostream& err);

int cmd_gen(const std::string& family, const GeneratorParams& params,
            std::uint64_t seed, int count,
            const std::filesystem::path& output_dir, std::ostream& out,
            std::ostream& err);

// Exact builtin solve that writes a solution file; usable as the command of
// the external backend.
int cmd_mip(const std::filesystem::path& instance_path,
            const std::filesystem::path& solution_path, double time_limit_s,
            long node_limit, const std::optional<std::filesystem::path>& warm_start,
            std::ostream& out, std::ostream& err);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace balans::cli

#endif  // BALANS_TOOLS_CLI_H_
