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

// Scaled-down comparison of the adaptive search against every single
// operator of its portfolio, on generated instances with certified optima.
#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "balans/bnb.h"
#include "balans/config.h"
#include "balans/engine.h"
#include "balans/generators.h"
#include "balans/metrics.h"
#include "criteria.h"

namespace balans::acceptance {
namespace {

constexpr int kSeedsPerFamily = 5;
constexpr double kGapThreshold = 0.05;
constexpr double kRequiredShare = 0.9;

struct Run {
  std::optional<SolutionState> point;
  std::optional<double> best;
  std::vector<IncumbentPoint> incumbents;
  double elapsed = 0.0;
  double pg = 1.0;
  double pi = 0.0;
};

Run execute(const MipInstance& instance, const SearchConfig& config) {
  const SearchResult r = solve(instance, config);
  Run run;
  if (r.best) {
    run.point = r.best;
    run.best = r.best->objective();
  }
  run.incumbents = r.trace.incumbents;
  run.elapsed = r.elapsed;
  return run;
}

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

Outcome headline_analogue(const Context& ctx) {
  const RunConfig base = preset("TS_accept_same_SA");
  const std::vector<OperatorSpec> portfolio = base.search.portfolio;
  const std::size_t k = portfolio.size();

  std::vector<MipInstance> instances;
  for (Family family : {Family::kMultipleKnapsack, Family::kSetCover,
                        Family::kMaxIndependentSet, Family::kMinVertexCover}) {
    for (int seed = 1; seed <= kSeedsPerFamily; ++seed) {
      instances.push_back(generate(family, GeneratorParams{}, seed));
    }
  }
  const std::size_t methods = k + 1;  // the adaptive search, then each operator
  std::vector<std::vector<Run>> runs(instances.size(), std::vector<Run>(methods));

  // Every run is independent and deterministic on the work clock, so they
  // are spread over the available cores.
  std::atomic<std::size_t> next{0};
  const std::size_t jobs = instances.size() * methods;
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs; j = next++) {
      const std::size_t i = j / methods;
      const std::size_t m = j % methods;
      SearchConfig cfg = base.search;
      cfg.seed = static_cast<std::uint64_t>(i % kSeedsPerFamily + 1);
      if (m > 0) cfg.portfolio = {portfolio[m - 1]};
      runs[i][m] = execute(instances[i], cfg);
    }
  };
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::vector<double> balans_pg, balans_pi;
  std::vector<std::vector<double>> op_pg(k), op_pi(k);
  int certified = 0;
  const int count = static_cast<int>(instances.size());
  std::ofstream csv(ctx.scratch / "headline.csv");
  csv << "instance,v_star,certified,method,pg,pi,horizon\n";

  for (std::size_t i = 0; i < instances.size(); ++i) {
    const MipInstance& instance = instances[i];
    std::vector<Run>& row = runs[i];
    // Reference optimum, warm-started with the best point any run found.
    const Run* leader = nullptr;
    for (const Run& r : row) {
      if (r.best && (!leader || *r.best < *leader->best)) leader = &r;
    }
    SolveLimits limits;
    limits.node_limit = base.oracle_nodes;
    limits.time_limit = Seconds(base.oracle_s);
    if (leader) limits.warm_start = leader->point;
    const MipResult oracle = solve_mip(instance, limits);
    const bool cert = oracle.status == MipStatus::kOptimal;
    const double v_star = oracle.best ? oracle.best->objective() : 0.0;
    certified += cert;

    double horizon = 0.0;
    for (const Run& r : row) horizon = std::max(horizon, r.elapsed);
    for (Run& r : row) {
      r.pg = primal_gap(r.best, v_star);
      r.pi = primal_integral({r.incumbents, v_star, horizon});
    }
    balans_pg.push_back(row[0].pg);
    balans_pi.push_back(row[0].pi);
    for (std::size_t a = 0; a < k; ++a) {
      op_pg[a].push_back(row[a + 1].pg);
      op_pi[a].push_back(row[a + 1].pi);
    }
    for (std::size_t m = 0; m < methods; ++m) {
      csv << instance.name() << ',' << v_star << ',' << cert << ','
          << (m == 0 ? std::string("balans") : portfolio[m - 1].label) << ','
          << row[m].pg << ',' << row[m].pi << ',' << horizon << '\n';
    }
    if (ctx.log) {
      double worst = 0.0;
      for (std::size_t m = 1; m < methods; ++m) worst = std::max(worst, row[m].pg);
      *ctx.log << "  " << instance.name() << " v*=" << v_star
               << (cert ? " (certified)" : " (NOT certified)")
               << " balans pg=" << fmt(row[0].pg) << " pi=" << fmt(row[0].pi, 2)
               << " worst-op pg=" << fmt(worst) << " horizon=" << fmt(horizon, 1)
               << std::endl;
    }
  }

  std::vector<double> mean_pg(k), mean_pi(k);
  for (std::size_t a = 0; a < k; ++a) {
    mean_pg[a] = mean(op_pg[a]);
    mean_pi[a] = mean(op_pi[a]);
  }
  const double b_pg = mean(balans_pg);
  const double b_pi = mean(balans_pi);
  const double worst_pg = *std::max_element(mean_pg.begin(), mean_pg.end());
  const double worst_pi = *std::max_element(mean_pi.begin(), mean_pi.end());
  const double best_pg = *std::min_element(mean_pg.begin(), mean_pg.end());
  const double median_pg = median(mean_pg);
  const long within = std::count_if(balans_pg.begin(), balans_pg.end(),
                                    [](double g) { return g <= kGapThreshold; });

  if (ctx.log) {
    *ctx.log << "  method mean_pg mean_pi\n  balans " << fmt(b_pg) << ' '
             << fmt(b_pi, 2) << '\n';
    for (std::size_t a = 0; a < k; ++a) {
      *ctx.log << "  " << portfolio[a].label << ' ' << fmt(mean_pg[a]) << ' '
               << fmt(mean_pi[a], 2) << '\n';
    }
  }

  const bool a_ok = within >= static_cast<long>(kRequiredShare * count + 0.5 - 1e-9);
  const bool b_ok = b_pg < worst_pg && b_pi < worst_pi;
  const bool c_ok = b_pg <= median_pg;
  const bool cert_ok = certified == count;
  std::ostringstream detail;
  detail << "(a) pg<=5% on " << within << "/" << count
         << (a_ok ? " ok" : " NOT ok") << "; (b) mean pg " << fmt(b_pg)
         << " vs worst " << fmt(worst_pg) << ", mean pi " << fmt(b_pi, 2)
         << " vs worst " << fmt(worst_pi, 2) << (b_ok ? " ok" : " NOT ok")
         << "; (c) median op pg " << fmt(median_pg) << (c_ok ? " ok" : " NOT ok")
         << "; best op pg " << fmt(best_pg) << " (not gated); v* certified "
         << certified << "/" << count;
  return {a_ok && b_ok && c_ok && cert_ok, detail.str()};
}

}  // namespace balans::acceptance
