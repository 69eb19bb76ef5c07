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

#include "balans/repair.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <stdexcept>

#include <unistd.h>

#include "balans/error.h"
#include "balans/mps.h"
#include "balans/subprocess.h"

namespace balans {
namespace {

namespace fs = std::filesystem;

void replace_all(std::string& text, const std::string& from,
                 const std::string& to) {
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
}

// Removes its directory on destruction.
class TempDir {
 public:
  TempDir() {
    std::string pattern =
        (fs::temp_directory_path() / "balans-repair-XXXXXX").string();
    if (mkdtemp(pattern.data()) == nullptr) {
      throw BackendError("cannot create a temporary directory");
    }
    path_ = pattern;
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void project_to_base(const MipInstance& base, MipResult& result) {
  if (!result.best) return;
  result.sub_objective = result.best->objective();
  std::vector<double> values(result.best->values().begin(),
                             result.best->values().begin() + base.num_vars());
  result.best = SolutionState::evaluate(base, std::move(values));
}

MipResult repair_builtin(const MipInstance& sub, SolveLimits limits) {
  return solve_mip(sub, limits);
}

MipResult repair_external(const MipInstance& sub, const SolveLimits& limits,
                          const BackendConfig& backend) {
  TempDir dir;
  const fs::path input = dir.path() / "sub.mps";
  const fs::path output = dir.path() / "sub.sol";
  const fs::path warm = dir.path() / "warm.sol";
  write_mps_file(sub, input);
  bool has_warm = false;
  if (limits.warm_start) {
    std::FILE* f = std::fopen(warm.c_str(), "w");
    if (f != nullptr) {
      const std::string text =
          write_solution_file(sub, limits.warm_start->values(),
                              limits.warm_start->objective(), "warmstart");
      std::fwrite(text.data(), 1, text.size(), f);
      std::fclose(f);
      has_warm = true;
    }
  }

  const double seconds = limits.time_limit.count();
  const long whole = std::isfinite(seconds)
                         ? std::max(1L, static_cast<long>(std::ceil(seconds)))
                         : 1000000L;
  std::string command = backend.command_template;
  replace_all(command, "{input}", shell_quote(input.string()));
  replace_all(command, "{output}", shell_quote(output.string()));
  replace_all(command, "{timelimit}", std::to_string(whole));
  replace_all(command, "{warmstart}",
              has_warm ? shell_quote(warm.string()) : std::string("''"));

  const auto start = std::chrono::steady_clock::now();
  const CommandResult run =
      run_command(command, Seconds(static_cast<double>(whole)));
  MipResult result;
  result.wall_time = std::chrono::steady_clock::now() - start;
  if (run.timed_out) {
    throw BackendError("external solver exceeded its time limit", run.output);
  }
  if (run.exit_code != 0) {
    throw BackendError(
        "external solver exited with code " + std::to_string(run.exit_code),
        run.output);
  }
  if (!fs::exists(output)) {
    throw BackendError("external solver wrote no solution file", run.output);
  }
  SolutionFile file;
  std::vector<double> values;
  try {
    file = read_solution_file(output);
    if (file.status && *file.status == "infeasible") {
      result.status = MipStatus::kInfeasible;
      result.dual_bound = kInfinity;
      return result;
    }
    values = to_dense(file, sub);
  } catch (const Error& e) {
    throw BackendError(std::string("unusable solution file: ") + e.what(),
                       run.output);
  }
  if (file.values.empty() && !file.objective) {
    result.status = MipStatus::kLimitNoIncumbent;
    return result;
  }
  for (int j : sub.discrete()) values[j] = std::round(values[j]);
  const FeasibilityReport report = check_feasibility(sub, values);
  if (!report.feasible()) {
    throw BackendError("external solver returned an infeasible point",
                       run.output);
  }
  SolutionState state = SolutionState::evaluate(sub, std::move(values));
  result.incumbents.push_back({0, result.wall_time.count(), state.objective()});
  const bool optimal = file.status && *file.status == "optimal";
  result.status = optimal ? MipStatus::kOptimal : MipStatus::kFeasible;
  result.dual_bound = optimal ? state.objective() : -kInfinity;
  result.best = std::move(state);
  return result;
}

}  // namespace

void BackendConfig::validate() const {
  if (kind != BackendKind::kExternal) return;
  if (command_template.find("{input}") == std::string::npos ||
      command_template.find("{output}") == std::string::npos) {
    throw ConfigError(
        "external backend command must contain {input} and {output}");
  }
}

std::vector<double> extend_with_slacks(const MipInstance& base,
                                       const SubMipDelta& delta,
                                       std::span<const double> values) {
  const int n = base.num_vars();
  std::vector<double> out(values.begin(), values.begin() + n);
  for (const SlackVariable& s : delta.slack_vars) {
    out.push_back(std::isfinite(s.lower) ? s.lower : 0.0);
  }
  for (const LinearConstraint& row : delta.added_constraints) {
    int slack = -1;
    double slack_coef = 0.0;
    double rest = 0.0;
    for (const Term& t : row.coeffs) {
      if (t.index >= n) {
        slack = t.index;
        slack_coef = t.coef;
      } else {
        rest += t.coef * out[t.index];
      }
    }
    if (slack < 0 || slack >= static_cast<int>(out.size())) continue;
    const SlackVariable& spec = delta.slack_vars[slack - n];
    // Move the slack only as far as needed to satisfy the row.
    double need = out[slack];
    if (row.relation != Relation::kGreaterEqual && slack_coef != 0.0) {
      const double v = (row.rhs - rest) / slack_coef;
      need = slack_coef < 0.0 ? std::max(need, v) : std::min(need, v);
    }
    if (row.relation != Relation::kLessEqual && slack_coef != 0.0) {
      const double v = (row.rhs - rest) / slack_coef;
      need = slack_coef > 0.0 ? std::max(need, v) : std::min(need, v);
    }
    out[slack] = std::clamp(need, spec.lower, spec.upper);
  }
  return out;
}

MipResult repair(const RepairRequest& request, const BackendConfig& backend) {
  if (request.base == nullptr) {
    throw std::invalid_argument("repair request without a base instance");
  }
  const MipInstance& base = *request.base;
  const MipInstance sub = apply_delta(base, request.delta);
  SolveLimits limits = request.limits;
  limits.warm_start.reset();
  if (request.warm_start &&
      static_cast<int>(request.warm_start->values().size()) >= base.num_vars()) {
    std::vector<double> extended =
        extend_with_slacks(base, request.delta, request.warm_start->values());
    if (is_feasible(sub, extended)) {
      limits.warm_start = SolutionState::evaluate(sub, std::move(extended));
    }
  }
  MipResult result = backend.kind == BackendKind::kBuiltin
                         ? repair_builtin(sub, limits)
                         : repair_external(sub, limits, backend);
  project_to_base(base, result);
  return result;
}

double original_objective_of(const MipResult& result, const MipInstance& base) {
  if (!result.best) {
    throw std::invalid_argument("result carries no solution");
  }
  return project_objective(base, result.best->values());
}

}  // namespace balans
