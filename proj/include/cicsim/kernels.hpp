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
#ifndef CICSIM_KERNELS_HPP_
#define CICSIM_KERNELS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "cicsim/cic.hpp"
#include "cicsim/fir.hpp"

// Data-parallel kernels.  Each has an OpenMP version (the production path)
// and a `_ref` serial twin kept for testing and benchmarking.  Every
// parallel loop computes each output element independently, so results are
// bit-identical to the serial reference at any thread count.

namespace cicsim {

// Decimating FIR over integer samples with quantized coefficients.  Only
// retained phases are computed: out[m] = round(sum_k h_q[k] x[m*factor-k]
// / 2^frac), rounding half away from zero.
std::vector<int64_t> fir_decimate(const QuantFir& f,
                                  std::span<const int64_t> in, int factor,
                                  int in_width);
std::vector<int64_t> fir_decimate_ref(const QuantFir& f,
                                      std::span<const int64_t> in, int factor,
                                      int in_width);

// CIC closed-form magnitude over a grid of normalized high-rate
// frequencies, in dB relative to the DC gain, floored at -400 dB.
std::vector<double> cic_response_db(const CicParams& p,
                                    std::span<const double> freqs_norm);
std::vector<double> cic_response_db_ref(const CicParams& p,
                                        std::span<const double> freqs_norm);

struct SweepResult {
  uint64_t cases = 0;
  uint64_t mismatches = 0;
  bool has_example = false;
  uint64_t example_a = 0;
  uint64_t example_b = 0;
  bool example_c0 = false;
};

// Equivalence sweeps of the gate-level adder against the behavioral
// two's-complement adder (pattern sum plus carry-in; carry out is bit W of
// the exact unsigned sum).
SweepResult mcla_sweep_exhaustive(int width);
SweepResult mcla_sweep_exhaustive_ref(int width);
SweepResult mcla_sweep_random(int width, uint64_t count, uint64_t seed);
SweepResult mcla_sweep_random_ref(int width, uint64_t count, uint64_t seed);

}  // namespace cicsim

#endif  // CICSIM_KERNELS_HPP_
