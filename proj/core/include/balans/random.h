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

#ifndef BALANS_RANDOM_H_
#define BALANS_RANDOM_H_

#include <cstdint>
#include <random>
#include <vector>

namespace balans {

// Seeded random stream shared by the search components. Uniform draws are
// derived directly from the 64-bit engine output so they are identical across
// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform integer in [lo, hi], inclusive.
  long uniform_int(long lo, long hi);
  // Beta(a, b) through two gamma draws.
  double beta(double a, double b);
  // Uniformly random k-subset of `items`, in ascending order of position.
  std::vector<int> sample(const std::vector<int>& items, int k);

  std::uint64_t next() { return engine_(); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace balans

#endif  // BALANS_RANDOM_H_
