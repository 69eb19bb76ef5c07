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

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "balans/error.h"
#include "balans/metrics.h"
#include "balans/mps.h"
#include "balans/report.h"

namespace balans::cli {
namespace {

namespace fs = std::filesystem;

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + path.string() + "'");
  f << text;
  if (!f) throw ConfigError("failed writing '" + path.string() + "'");
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw ConfigError("cannot create directory '" + dir.string() + "'");
  }
}

MipInstance load_instance(const fs::path& path) {
  if (!fs::exists(path)) {
    throw ConfigError("instance file '" + path.string() + "' does not exist");
  }
  try {
    return read_mps_file(path);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

std::string trace_csv(const SearchTrace& trace) {
  std::ostringstream s;
  write_trace_csv(s, trace);
  return s.str();
}

std::string arm_csv(const SearchTrace& trace) {
  std::ostringstream s;
  write_arm_csv(s, trace);
  return s.str();
}

int exit_code_for(SearchStatus status) {
  switch (status) {
    case SearchStatus::kCompleted:
    case SearchStatus::kSolvedUpfront:
      return kExitOk;
    case SearchStatus::kNoInitialFeasible:
      return kExitNoInitialFeasible;
    case SearchStatus::kAborted:
      return kExitAborted;
  }
  return kExitUsage;
}

struct BenchOutcome {
  BenchRow row;
  std::string arms;   // arm CSV body rows, prefixed with the instance
  std::string trace;  // full trace CSV
};

BenchOutcome bench_one(const fs::path& path, const RunConfig& config) {
  BenchOutcome o;
  BenchRow& row = o.row;
  row.instance = path.filename().string();
  infer_family_and_seed(path.stem().string(), row.family, row.seed);
  try {
    const MipInstance instance = read_mps_file(path);
    const SearchResult result = solve(instance, config.search);
    row.status = to_string(result.status);
    row.iterations = result.iterations;
    row.time_to_first_feasible = result.trace.time_to_first_feasible;
    if (result.best) row.best_obj = result.best->objective();

    // Reference value: builtin branch-and-bound, warm-started with the best
    // point of the run.
    SolveLimits limits;
    limits.node_limit = config.oracle_nodes;
    limits.time_limit = Seconds(config.oracle_s);
    limits.warm_start = result.best;
    const MipResult oracle = solve_mip(instance, limits);
    if (oracle.best) row.v_star = oracle.best->objective();
    row.v_star_certified = oracle.status == MipStatus::kOptimal;

    if (row.v_star) {
      row.pg_final = primal_gap(row.best_obj, *row.v_star);
      row.pi = primal_integral(
          {result.trace.incumbents, *row.v_star, result.elapsed});
    } else {
      row.pg_final = row.best_obj ? 0.0 : 1.0;
      row.pi = row.best_obj ? 0.0 : result.elapsed;
    }
    std::istringstream arms(arm_csv(result.trace));
    std::string line;
    std::getline(arms, line);  // header
    while (std::getline(arms, line)) o.arms += row.instance + "," + line + "\n";
    o.trace = trace_csv(result.trace);
  } catch (const std::exception& e) {
    row.status = "error";
    row.error = e.what();
  }
  return o;
}

}  // namespace

RunConfig load_config(const std::string& path, const std::string& preset_name) {
  RunConfig config = path.empty() ? preset(preset_name.empty()
                                               ? "TS_accept_same_SA"
                                               : preset_name)
                                  : read_run_config(path);
  if (const char* env = std::getenv("BALANS_EXTERNAL_SOLVER");
      env != nullptr && *env != '\0') {
    config.search.backend = BackendConfig::external(env);
    config.search.backend.validate();
  }
  return config;
}

int cmd_solve(const fs::path& instance_path, const RunConfig& config,
              const fs::path& output_dir, std::ostream& out,
              std::ostream& err) {
  MipInstance instance;
  try {
    instance = load_instance(instance_path);
    ensure_dir(output_dir);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  SearchResult result;
  try {
    result = solve(instance, config.search);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const std::string stem = instance_path.stem().string();
  try {
    if (result.best) {
      write_text(output_dir / (stem + ".sol"),
                 write_solution_file(instance, result.best->values(),
                                     result.best->objective(),
                                     to_string(result.status)));
    }
    write_text(output_dir / (stem + ".trace.csv"), trace_csv(result.trace));
    write_text(output_dir / (stem + ".arms.csv"), arm_csv(result.trace));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  out << "instance " << stem << " status " << to_string(result.status)
      << " best_objective "
      << (result.best ? format_double(result.best->objective()) : "none")
      << " iterations " << result.iterations << " elapsed_s "
      << format_double(result.elapsed) << "\n";
  if (!result.diagnostic.empty()) err << result.diagnostic << "\n";
  return exit_code_for(result.status);
}

int cmd_bench(const fs::path& instance_dir, const RunConfig& config,
              const fs::path& output_path, int jobs, std::ostream& out,
              std::ostream& err) {
  if (!fs::is_directory(instance_dir)) {
    err << "error: '" << instance_dir.string() << "' is not a directory\n";
    return kExitUsage;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(instance_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".mps") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    err << "error: no .mps files in '" << instance_dir.string() << "'\n";
    return kExitUsage;
  }
  if (jobs < 1) {
    err << "error: --jobs must be at least 1\n";
    return kExitUsage;
  }

  std::vector<BenchOutcome> outcomes(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      outcomes[i] = bench_one(files[i], config);
    }
  };
  std::vector<std::thread> pool;
  const int threads = std::min<int>(jobs, static_cast<int>(files.size()));
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::vector<BenchRow> rows;
  std::string arms = "instance,level,label,count,percentage\n";
  for (const BenchOutcome& o : outcomes) {
    rows.push_back(o.row);
    arms += o.arms;
  }
  try {
    if (output_path.has_parent_path()) ensure_dir(output_path.parent_path());
    std::ostringstream summary;
    write_summary_csv(summary, rows);
    write_text(output_path, summary.str());
    fs::path arms_path = output_path;
    arms_path.replace_extension(".arms.csv");
    write_text(arms_path, arms);
    fs::path trace_dir = output_path;
    trace_dir.replace_extension(".traces");
    ensure_dir(trace_dir);
    for (std::size_t i = 0; i < files.size(); ++i) {
      if (outcomes[i].row.error.empty()) {
        write_text(trace_dir / (files[i].stem().string() + ".trace.csv"),
                   outcomes[i].trace);
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::vector<double> pg, pi;
  int failed = 0;
  for (const BenchRow& r : rows) {
    if (!r.error.empty()) {
      ++failed;
      err << r.instance << ": " << r.error << "\n";
      continue;
    }
    pg.push_back(r.pg_final);
    pi.push_back(r.pi);
  }
  const auto [pg_mean, pg_std] = mean_and_std(pg);
  const auto [pi_mean, pi_std] = mean_and_std(pi);
  out << "instances " << rows.size() << " failed " << failed << " pg_mean "
      << format_double(pg_mean) << " pg_std " << format_double(pg_std)
      << " pi_mean " << format_double(pi_mean) << " pi_std "
      << format_double(pi_std) << "\n";
  return kExitOk;
}

int cmd_gen(const std::string& family, const GeneratorParams& params,
            std::uint64_t seed, int count, const fs::path& output_dir,
            std::ostream& out, std::ostream& err) {
  const std::optional<Family> f = parse_family(family);
  if (!f) {
    err << "error: unknown family '" << family
        << "' (valid: mk, sc, mis, mvc)\n";
    return kExitUsage;
  }
  if (count < 0) {
    err << "error: --count must be non-negative\n";
    return kExitUsage;
  }
  try {
    params.validate(*f);
    if (count > 0) ensure_dir(output_dir);
    for (int k = 0; k < count; ++k) {
      const std::string stem = std::string(short_name(*f)) + "_" +
                               std::to_string(seed) + "_" + std::to_string(k);
      // Distinct, reproducible stream per file.
      const std::uint64_t instance_seed =
          seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(k);
      const MipInstance instance = generate(*f, params, instance_seed, stem);
      write_mps_file(instance, output_dir / (stem + ".mps"));
      out << (output_dir / (stem + ".mps")).string() << "\n";
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_mip(const fs::path& instance_path, const fs::path& solution_path,
            double time_limit_s, long node_limit,
            const std::optional<fs::path>& warm_start, std::ostream& out,
            std::ostream& err) {
  try {
    const MipInstance instance = load_instance(instance_path);
    SolveLimits limits;
    limits.time_limit = Seconds(time_limit_s);
    limits.node_limit = node_limit;
    if (warm_start && !warm_start->empty() && fs::exists(*warm_start)) {
      std::vector<double> values =
          to_dense(read_solution_file(*warm_start), instance);
      limits.warm_start = SolutionState::evaluate(instance, std::move(values));
    }
    const MipResult result = solve_mip(instance, limits);
    const char* status = result.status == MipStatus::kOptimal      ? "optimal"
                         : result.status == MipStatus::kInfeasible ? "infeasible"
                         : result.best                             ? "feasible"
                                                                   : "unknown";
    std::string text;
    if (result.best) {
      text = write_solution_file(instance, result.best->values(),
                                 result.best->objective(), status);
    } else {
      text = std::string("# status ") + status + "\n";
    }
    write_text(solution_path, text);
    out << "status " << status << " objective "
        << (result.best ? format_double(result.best->objective()) : "none")
        << " nodes " << result.nodes_explored << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adaptive large neighborhood search for mixed-integer programs"};
  app.require_subcommand(1);

  std::string config_path, preset_name;
  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON run configuration");
    sub->add_option("--preset", preset_name,
                    "named preset, e.g. TS_accept_same_SA (default)");
  };
  std::optional<std::uint64_t> seed_override;
  std::optional<long> iterations_override;
  auto add_overrides = [&](CLI::App* sub) {
    sub->add_option("--seed", seed_override, "override the configured seed");
    sub->add_option("--iterations", iterations_override,
                    "override the iteration limit");
  };

  std::string instance, out_path;
  CLI::App* solve_cmd = app.add_subcommand("solve", "solve one MPS instance");
  solve_cmd->add_option("instance", instance, "MPS file")->required();
  solve_cmd->add_option("--out", out_path, "output directory")->required();
  add_config(solve_cmd);
  add_overrides(solve_cmd);

  std::string bench_dir;
  int jobs = 1;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "benchmark every .mps file of a directory");
  bench_cmd->add_option("dir", bench_dir, "instance directory")->required();
  bench_cmd->add_option("--out", out_path, "summary CSV path")->required();
  bench_cmd->add_option("--jobs", jobs, "concurrent solves");
  add_config(bench_cmd);
  add_overrides(bench_cmd);

  std::string family;
  std::uint64_t gen_seed = 0;
  int count = 1;
  GeneratorParams params;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_cmd->add_option("family", family, "mk, sc, mis or mvc")->required();
  gen_cmd->add_option("--seed", gen_seed, "seed");
  gen_cmd->add_option("--count", count, "number of files");
  gen_cmd->add_option("--out", out_path, "output directory")->required();
  gen_cmd->add_option("--items", params.items, "knapsack items");
  gen_cmd->add_option("--knapsacks", params.knapsacks, "knapsacks");
  gen_cmd->add_option("--elements", params.elements, "set cover elements");
  gen_cmd->add_option("--sets", params.sets, "set cover sets");
  gen_cmd->add_option("--density", params.density, "set cover density");
  gen_cmd->add_option("--max-cost", params.max_cost,
                      "set cover costs are drawn from [1, max-cost]");
  gen_cmd->add_option("--nodes", params.nodes, "graph nodes");
  gen_cmd->add_option("--edge-probability", params.edge_probability,
                      "graph edge probability");

  double time_limit = 3600.0;
  long node_limit = std::numeric_limits<long>::max();
  std::string warm_path;
  CLI::App* mip_cmd = app.add_subcommand(
      "mip", "exact branch-and-bound solve writing a solution file");
  mip_cmd->add_option("instance", instance, "MPS file")->required();
  mip_cmd->add_option("--out", out_path, "solution file")->required();
  mip_cmd->add_option("--time-limit", time_limit, "seconds");
  mip_cmd->add_option("--node-limit", node_limit, "nodes");
  mip_cmd->add_option("--warm-start", warm_path, "solution file");

  CLI::App* presets_cmd = app.add_subcommand("presets", "list presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*presets_cmd) {
      for (const std::string& name : preset_names()) out << name << "\n";
      return kExitOk;
    }
    if (*gen_cmd) {
      return cmd_gen(family, params, gen_seed, count, out_path, out, err);
    }
    if (*mip_cmd) {
      return cmd_mip(instance, out_path, time_limit, node_limit,
                     warm_path.empty() ? std::nullopt
                                       : std::optional<fs::path>(warm_path),
                     out, err);
    }
    RunConfig config = load_config(config_path, preset_name);
    if (seed_override) config.search.seed = *seed_override;
    if (iterations_override) {
      config.search.stop.max_iterations = *iterations_override;
      config.search.validate();
    }
    if (*solve_cmd) return cmd_solve(instance, config, out_path, out, err);
    return cmd_bench(bench_dir, config, out_path, jobs, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace balans::cli
