/*
 * Copyright 2026 The cicsim Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef CICSIM_RNG_HPP_
#define CICSIM_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

// Seeded randomness with bit-stable results across platforms.  The stream
// generator is std::mt19937_64 (fully specified by the standard); value
// mappings are written out explicitly because the standard distribution
// classes are implementation-defined.  splitmix64 is used where a value
// must be derived from a (seed, index) key, e.g. inside parallel sweeps.

namespace cicsim {

// splitmix64 step (Steele, Lea, Flood; public domain reference constants).
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

class Rng {
public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform on [lo, hi] by modulo reduction; the bias is below 2^-32 for
  // every range used in this project.  A span of 2^64 wraps to 0 and means
  // the full word is wanted as is.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    const uint64_t span =
        static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
    const uint64_t r = next_u64();
    if (span == 0) return static_cast<int64_t>(r);
    return static_cast<int64_t>(static_cast<uint64_t>(lo) + r % span);
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller.
  double gauss() {
    double u1 = uniform_double();
    while (u1 == 0.0) u1 = uniform_double();
    const double u2 = uniform_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace cicsim

#endif  // CICSIM_RNG_HPP_
