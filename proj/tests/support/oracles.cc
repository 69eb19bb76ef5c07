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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace balans::testing {
namespace {

// One hyperplane a'x = rhs.
struct Plane {
  std::vector<double> a;
  double rhs;
};

// Solves the square system in place by Gaussian elimination with partial
// pivoting. False when singular.
bool solve_square(std::vector<std::vector<double>> m, std::vector<double> b,
                  std::vector<double>& x) {
  const int n = static_cast<int>(b.size());
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
    }
    if (std::abs(m[p][c]) < 1e-10) return false;
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = m[r][c] / m[c][c];
      if (f == 0.0) continue;
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  x.resize(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return true;
}

bool lp_feasible(const MipInstance& instance, const std::vector<double>& x) {
  for (int j = 0; j < instance.num_vars(); ++j) {
    const Variable& v = instance.variable(j);
    if (x[j] < v.lower - 1e-7 || x[j] > v.upper + 1e-7) return false;
  }
  for (int i = 0; i < instance.num_constraints(); ++i) {
    const LinearConstraint& row = instance.constraint(i);
    const double act = row.activity(x);
    const double tol = 1e-7 * std::max(1.0, std::abs(row.rhs));
    switch (row.relation) {
      case Relation::kLessEqual:
        if (act > row.rhs + tol) return false;
        break;
      case Relation::kGreaterEqual:
        if (act < row.rhs - tol) return false;
        break;
      case Relation::kEqual:
        if (std::abs(act - row.rhs) > tol) return false;
        break;
    }
  }
  return true;
}

// Vertex enumeration over the free variables `cols`; the other variables
// keep the values in `x`.
std::optional<double> enumerate_vertices(const MipInstance& instance,
                                         const std::vector<int>& cols,
                                         std::vector<double>& x) {
  const int n = static_cast<int>(cols.size());
  if (n == 0) {
    if (!lp_feasible(instance, x)) return std::nullopt;
    return evaluate_objective(instance, x);
  }
  std::vector<int> pos(instance.num_vars(), -1);
  for (int k = 0; k < n; ++k) pos[cols[k]] = k;
  std::vector<Plane> planes;
  for (int i = 0; i < instance.num_constraints(); ++i) {
    const LinearConstraint& row = instance.constraint(i);
    Plane p{std::vector<double>(n, 0.0), row.rhs};
    for (const Term& t : row.coeffs) {
      if (pos[t.index] >= 0) {
        p.a[pos[t.index]] += t.coef;
      } else {
        p.rhs -= t.coef * x[t.index];
      }
    }
    planes.push_back(std::move(p));
  }
  for (int k = 0; k < n; ++k) {
    const Variable& v = instance.variable(cols[k]);
    for (double bound : {v.lower, v.upper}) {
      if (!std::isfinite(bound)) continue;
      Plane p{std::vector<double>(n, 0.0), bound};
      p.a[k] = 1.0;
      planes.push_back(std::move(p));
    }
  }
  const int total = static_cast<int>(planes.size());
  if (total < n) throw std::invalid_argument("region has no vertex");
  std::optional<double> best;
  std::vector<double> best_x;
  std::vector<int> pick(n);
  for (int k = 0; k < n; ++k) pick[k] = k;
  std::vector<double> sol;
  while (true) {
    std::vector<std::vector<double>> m;
    std::vector<double> b;
    for (int k : pick) {
      m.push_back(planes[k].a);
      b.push_back(planes[k].rhs);
    }
    if (solve_square(m, b, sol)) {
      std::vector<double> trial = x;
      for (int k = 0; k < n; ++k) trial[cols[k]] = sol[k];
      if (lp_feasible(instance, trial)) {
        const double obj = evaluate_objective(instance, trial);
        if (!best || obj < *best - 1e-12) {
          best = obj;
          best_x = std::move(trial);
        }
      }
    }
    // Next combination of n planes out of `total`.
    int i = n - 1;
    while (i >= 0 && pick[i] == total - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int k = i + 1; k < n; ++k) pick[k] = pick[k - 1] + 1;
  }
  if (best) x = best_x;
  return best;
}

}  // namespace

std::optional<double> vertex_enumeration_lp(const MipInstance& instance) {
  std::vector<int> cols(instance.num_vars());
  for (int j = 0; j < instance.num_vars(); ++j) cols[j] = j;
  std::vector<double> x(instance.num_vars(), 0.0);
  return enumerate_vertices(instance, cols, x);
}

BruteForceResult brute_force(const MipInstance& instance) {
  const std::vector<int>& discrete = instance.discrete();
  std::vector<double> x(instance.num_vars(), 0.0);
  std::vector<long> lo, hi, cur;
  for (int j : discrete) {
    const Variable& v = instance.variable(j);
    if (!std::isfinite(v.lower) || !std::isfinite(v.upper)) {
      throw std::invalid_argument("brute force needs finite integer bounds");
    }
    lo.push_back(static_cast<long>(std::ceil(v.lower - 1e-9)));
    hi.push_back(static_cast<long>(std::floor(v.upper + 1e-9)));
  }
  BruteForceResult result;
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (lo[k] > hi[k]) return result;
  }
  cur = lo;
  while (true) {
    for (std::size_t k = 0; k < discrete.size(); ++k) {
      x[discrete[k]] = static_cast<double>(cur[k]);
    }
    std::vector<double> trial = x;
    const std::optional<double> obj =
        enumerate_vertices(instance, instance.continuous(), trial);
    if (obj && (!result.objective || *obj < *result.objective - 1e-12)) {
      result.objective = obj;
      result.values = trial;
    }
    std::size_t k = 0;
    while (k < cur.size() && cur[k] == hi[k]) {
      cur[k] = lo[k];
      ++k;
    }
    if (k == cur.size()) break;
    ++cur[k];
  }
  return result;
}

MipInstance random_binary_instance(std::uint64_t seed, int num_vars,
                                   int num_rows, bool zero_feasible) {
  return random_mixed_instance(seed, num_vars, num_rows, 1, zero_feasible);
}

MipInstance random_mixed_instance(std::uint64_t seed, int num_vars,
                                  int num_rows, int max_value,
                                  bool zero_feasible) {
  std::mt19937_64 g(seed);
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(g() % static_cast<unsigned>(hi - lo + 1));
  };
  MipBuilder b("rand_" + std::to_string(seed));
  std::vector<double> upper(num_vars, 1.0);
  for (int j = 0; j < num_vars; ++j) {
    const double c = pick(-10, 10);
    if (j % 2 == 1 && max_value > 1) {
      upper[j] = max_value;
      b.add_variable("x" + std::to_string(j), 0.0, max_value, VarKind::kInteger, c);
    } else {
      b.add_binary("x" + std::to_string(j), c);
    }
  }
  for (int i = 0; i < num_rows; ++i) {
    std::vector<Term> terms;
    for (int j = 0; j < num_vars; ++j) {
      if (g() % 2) continue;
      int c = pick(1, 6);
      if (g() % 3 == 0) c = -c;
      terms.push_back({j, static_cast<double>(c)});
    }
    if (terms.empty()) terms.push_back({pick(0, num_vars - 1), 1.0});
    double pos = 0.0;
    for (const Term& t : terms) pos += std::max(0.0, t.coef) * upper[t.index];
    const int kind = pick(0, 4);
    if (kind <= 2) {
      const double rhs = zero_feasible ? pick(0, static_cast<int>(pos))
                                       : pick(-3, static_cast<int>(pos));
      b.add_constraint("r" + std::to_string(i), std::move(terms),
                       Relation::kLessEqual, rhs);
    } else if (kind == 3 && !zero_feasible) {
      b.add_constraint("r" + std::to_string(i), std::move(terms),
                       Relation::kGreaterEqual, pick(0, 3));
    } else {
      b.add_constraint("r" + std::to_string(i), std::move(terms),
                       Relation::kGreaterEqual, zero_feasible ? 0 : -pick(0, 3));
    }
  }
  return b.build();
}

std::vector<std::vector<double>> feasible_points(const MipInstance& instance) {
  if (!instance.continuous().empty()) {
    throw std::invalid_argument("feasible_points needs a pure integer model");
  }
  const int n = instance.num_vars();
  std::vector<long> lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    lo[j] = static_cast<long>(std::ceil(instance.variable(j).lower - 1e-9));
    hi[j] = static_cast<long>(std::floor(instance.variable(j).upper + 1e-9));
    if (lo[j] > hi[j]) return {};
  }
  std::vector<std::vector<double>> points;
  std::vector<long> cur = lo;
  std::vector<double> x(n);
  while (true) {
    for (int j = 0; j < n; ++j) x[j] = static_cast<double>(cur[j]);
    if (is_feasible(instance, x)) points.push_back(x);
    int k = 0;
    while (k < n && cur[k] == hi[k]) {
      cur[k] = lo[k];
      ++k;
    }
    if (k == n) break;
    ++cur[k];
  }
  return points;
}

MipInstance random_small_lp(std::uint64_t seed, int num_vars, int num_rows) {
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  MipBuilder b("lp_" + std::to_string(seed));
  for (int j = 0; j < num_vars; ++j) {
    const double lower = std::floor(u(g)) - 1.0;
    const double upper = lower + 1.0 + std::floor(std::abs(u(g)) + 1.0);
    b.add_variable("y" + std::to_string(j), lower, upper, VarKind::kContinuous,
                   std::round(u(g) * 10.0) / 10.0);
  }
  for (int i = 0; i < num_rows; ++i) {
    std::vector<Term> terms;
    for (int j = 0; j < num_vars; ++j) {
      const double c = std::round(u(g));
      if (c != 0.0) terms.push_back({j, c});
    }
    if (terms.empty()) terms.push_back({0, 1.0});
    const int kind = static_cast<int>(g() % 3);
    const double rhs = std::round(u(g) * 2.0);
    b.add_constraint("c" + std::to_string(i), std::move(terms),
                     kind == 0   ? Relation::kLessEqual
                     : kind == 1 ? Relation::kGreaterEqual
                                 : Relation::kEqual,
                     rhs);
  }
  return b.build();
}

}  // namespace balans::testing
