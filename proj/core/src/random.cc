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

#include "balans/random.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace balans {
namespace {

constexpr double kPi = 3.14159265358979323846;

double standard_normal(Rng& rng) {
  // Box-Muller; u1 in (0, 1].
  const double u1 = 1.0 - rng.uniform();
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

// Marsaglia-Tsang gamma sampler, shape > 0, scale 1.
double gamma_sample(Rng& rng, double shape) {
  if (shape < 1.0) {
    const double u = 1.0 - rng.uniform();
    return gamma_sample(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x, v;
    do {
      x = standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = 1.0 - rng.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

long Rng::uniform_int(long lo, long hi) {
  if (hi <= lo) return lo;
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return lo + static_cast<long>(r % range);
}

double Rng::beta(double a, double b) {
  const double x = gamma_sample(*this, a);
  const double y = gamma_sample(*this, b);
  return x / (x + y);
}

std::vector<int> Rng::sample(const std::vector<int>& items, int k) {
  const int n = static_cast<int>(items.size());
  k = std::clamp(k, 0, n);
  // Partial Fisher-Yates over positions.
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[i] = i;
  for (int i = 0; i < k; ++i) {
    const int j = static_cast<int>(uniform_int(i, n - 1));
    std::swap(pos[i], pos[j]);
  }
  pos.resize(k);
  std::sort(pos.begin(), pos.end());
  std::vector<int> out;
  out.reserve(k);
  for (int p : pos) out.push_back(items[p]);
  return out;
}

}  // namespace balans
