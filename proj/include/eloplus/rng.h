// Copyright 2026 The Eloplus Authors.
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

#ifndef ELOPLUS_RNG_H_
#define ELOPLUS_RNG_H_

#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace eloplus {

// xoshiro256** seeded through splitmix64. Every draw used by the library
// (shuffles, uniform reals, normals) is derived from this generator by the
// helpers below, so a seed reproduces the same stream on every platform and
// standard library. std::shuffle and the std:: distributions are avoided for
// that reason.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  // Uniform on [0, 1) with 53 random bits.
  double NextDouble();

  // Uniform on {0, ..., bound - 1}; bound must be positive. Lemire's
  // multiply-shift with rejection, so the result is unbiased.
  std::uint64_t NextBelow(std::uint64_t bound);

  // Standard normal via Box-Muller. One variate per call; the paired
  // variate is discarded.
  double NextNormal();

 private:
  std::uint64_t state_[4];
};

// Fisher-Yates shuffle driven by Rng::NextBelow.
template <typename T>
void Shuffle(std::span<T> values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.NextBelow(i));
    using std::swap;
    swap(values[i - 1], values[j]);
  }
}

}  // namespace eloplus

#endif  // ELOPLUS_RNG_H_
