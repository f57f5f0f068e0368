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
#ifndef CICSIM_FIR_HPP_
#define CICSIM_FIR_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "cicsim/cic.hpp"

namespace cicsim {

struct FirFilter {
  std::vector<double> taps;
  bool symmetric = false;
  bool halfband = false;
};

// |sum_k taps[k] e^{-j 2 pi f k}| at normalized frequency f.
double fir_magnitude(std::span<const double> taps, double f);

// Windowed-sinc half-band lowpass: ideal cutoff 0.25, Kaiser window sized
// from the stopband attenuation, length forced to 4k+3 so the zero taps
// land on even offsets.  Taps are scaled for an exact DC gain of 1, which
// pins the center tap to 0.5 and the quarter-rate gain to 0.5.  The
// designer re-measures its stopband and grows the filter until the target
// is met; failing at 1024 taps is a design error.
FirFilter design_halfband(double f_pass_norm, double stop_atten_db);

// Linear-phase corrector whose magnitude approximates the inverse of the
// CIC passband droop over [0, f_pass_norm] at the corrector's input rate,
// with a zero-target stopband over the fold band [0.5 - f_pass_norm, 0.5]
// so the stage can also decimate by 2.  Weighted least squares on a dense
// grid; the band between is left unconstrained.  rate_ratio is the total
// decimation between the CIC input and this filter (0 picks the chain
// position after CIC and one half-band, i.e. 2R).
FirFilter design_droop_corrector(const CicParams& cic, double f_pass_norm,
                                 int length, int rate_ratio = 0);

// Coefficients rounded half-away-from-zero to frac_bits fractional bits.
struct QuantFir {
  std::vector<int64_t> taps_q;
  int frac_bits = 16;
};

QuantFir quantize(const FirFilter& f, int frac_bits);

// Magnitude of the quantized filter (taps interpreted times 2^-frac_bits).
double quant_fir_magnitude(const QuantFir& f, double f_norm);

}  // namespace cicsim

#endif  // CICSIM_FIR_HPP_
