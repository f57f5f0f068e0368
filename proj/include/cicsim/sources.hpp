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
#ifndef CICSIM_SOURCES_HPP_
#define CICSIM_SOURCES_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "cicsim/fixed_point.hpp"
#include "cicsim/rng.hpp"

namespace cicsim {

// amp is a fraction of full scale (2^(width-1) - 1); samples are rounded
// half away from zero.
std::vector<FixedWord> gen_sine(double amp, double f_hz, double fs, size_t n,
                                int width);

std::vector<FixedWord> gen_impulse(int64_t amplitude, size_t n, int width);
std::vector<FixedWord> gen_dc(int64_t value, size_t n, int width);

// Uniform over the full two's-complement range of `width`.
std::vector<FixedWord> gen_noise(Rng& rng, size_t n, int width);

// Behavioral second-order single-bit modulator used as a realistic
// high-rate source.  Double-loop error feedback: int1 += x - y;
// int2 += int1 - y; y = sign(int2).  It stands in for whichever modulator
// feeds a real decimation chain; it is a test source, not a device model,
// so its accumulators run in floating point.
struct SdmState {
  double int1 = 0.0;
  double int2 = 0.0;
  int quantizer_levels = 2;
  double clip_limit = 8.0;
  uint64_t saturations = 0;  // clamp events, for diagnostics
};

// Inputs must stay within [-0.9, 0.9] for stability margin.  Emits +-1
// encoded in a width-bit word (width >= 2).
std::vector<FixedWord> sdm_modulate(SdmState& st, std::span<const double> in,
                                    int width);

}  // namespace cicsim

#endif  // CICSIM_SOURCES_HPP_
