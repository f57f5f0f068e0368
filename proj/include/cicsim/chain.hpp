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
#ifndef CICSIM_CHAIN_HPP_
#define CICSIM_CHAIN_HPP_

#include <span>
#include <vector>

#include "cicsim/cic.hpp"
#include "cicsim/fir.hpp"

// Four-stage decimation system: CIC /R, half-band /2, droop correction /2,
// half-band /2.  With the reference configuration (R = 16, fs 6.144 MHz)
// the total rate reduction is 128 down to a 48 kHz output.

namespace cicsim {

struct ChainSpec {
  CicParams cic;
  double fs_in = 6.144e6;
  double f_pass = 20e3;
  double stop_atten_db = 80.0;
  int droop_taps = 31;
  int frac_bits = 16;
  std::optional<std::vector<int>> integrator_widths;
  std::optional<std::vector<int>> comb_widths;
  int decim_phase = 0;
};

struct ChainConfig {
  CicDesign cic;
  FirFilter hb1, droop, hb2;
  QuantFir hb1_q, droop_q, hb2_q;
  std::vector<int> fir_out_widths;  // after hb1, droop, hb2
  double fs_in = 0;
  double f_pass = 0;
  int frac_bits = 16;

  double output_rate() const { return fs_in / (cic.params.r * 8); }
  int output_width() const { return fir_out_widths.back(); }
};

ChainConfig design_chain(const ChainSpec& spec);

// Streams high-rate input (width B_in) through all four stages.  The FIR
// stages run on quantized coefficients with double-width accumulation and
// a single half-away rounding per output; only retained phases are
// computed.  Stateless: each call starts from zero-initialized filters.
std::vector<FixedWord> chain_process(const ChainConfig& cfg,
                                     std::span<const FixedWord> in);

// Composite magnitude at input-referred frequencies (Hz within
// [0, fs_in/2]): the CIC closed form times each quantized FIR's periodic
// response at its own rate, in dB normalized to 0 dB at DC and floored at
// -400 dB.
std::vector<double> chain_response_db(const ChainConfig& cfg,
                                      std::span<const double> freqs_hz);

// CIC times droop corrector only (the pair the corrector is designed
// around), same normalization.  This is the curve whose passband
// flatness the corrector is judged on.
double corrected_cic_db(const ChainConfig& cfg, double f_hz);
double cic_alone_db(const ChainConfig& cfg, double f_hz);

}  // namespace cicsim

#endif  // CICSIM_CHAIN_HPP_
