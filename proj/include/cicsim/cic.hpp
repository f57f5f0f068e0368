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
#ifndef CICSIM_CIC_HPP_
#define CICSIM_CIC_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cicsim/fixed_point.hpp"

namespace cicsim {

using BigInt = boost::multiprecision::cpp_int;

// N integrator/comb stages, differential delay M, decimation factor R,
// input word length B_in.
struct CicParams {
  int n = 1;
  int m = 1;
  int r = 2;
  int b_in = 1;

  void validate() const;
};

// Design-time sizing plus the per-stage width schedule.  b_max is the MSB
// index of the worst-case output (it equals N*log2(RM) + B_in - 1 for
// power-of-two RM); a register holding bits 0..b_max is b_max + 1 wide,
// which is what the lossless default schedule uses.
struct CicDesign {
  CicParams params;
  BigInt g_max;                        // (R*M)^N
  int b_max = 0;
  std::vector<int> integrator_widths;  // N entries, non-increasing
  std::vector<int> comb_widths;        // N entries, non-increasing
  int decim_phase = 0;                 // which high-rate phase is emitted

  int output_width() const { return comb_widths.back(); }
  bool truncating() const;
  // Total LSBs dropped input-to-output; the output LSB weighs 2^this.
  int dropped_bits() const;
};

// Runtime state for one stream.  Single-owner, processed sequentially.
struct CicState {
  std::vector<FixedWord> integrator_accs;
  std::vector<std::vector<FixedWord>> comb_delays;  // per stage, M deep
  std::vector<int> comb_pos;
  std::vector<FixedWord> pipeline_regs;  // N-1, pipelined variant only
  int phase = 0;
  uint64_t truncation_events = 0;  // truncations that discarded nonzero bits
};

// (R*M)^N in unbounded integer arithmetic.
BigInt register_growth(const CicParams& p);

// MSB index at the filter output: bit length of (RM)^N * 2^(B_in-1) - 1.
int output_msb(const CicParams& p);

// Builds a design.  With no schedule every stage runs at the lossless
// width b_max + 1.  A supplied schedule must be non-increasing with first
// entry >= b_max; narrower would cut worst-case MSBs.
CicDesign design(const CicParams& p,
                 std::optional<std::vector<int>> integrator_widths =
                     std::nullopt,
                 std::optional<std::vector<int>> comb_widths = std::nullopt,
                 int decim_phase = 0);

// Coefficients of the N-fold self-convolution of the length-RM all-ones
// vector; length N*(RM-1)+1.  Guarded at RM*N <= 2^20.
std::vector<BigInt> impulse_response(const CicParams& p);

// |sin(pi f R M) / sin(pi f)|^N at normalized high-rate frequency f in
// [0, 0.5]; the removable singularity at f = 0 evaluates to (RM)^N.
double frequency_response_mag(const CicParams& p, double f);

CicState make_state(const CicDesign& d, bool pipelined = false);

// Streams high-rate input words (width B_in) through the integrator
// cascade, the R:1 downsampler and the comb cascade, emitting one low-rate
// word per R inputs.  All additions go through the gate-level adder.
std::vector<FixedWord> process(const CicDesign& d, CicState& st,
                               std::span<const FixedWord> in);

// Same datapath with a register between consecutive integrator stages;
// stage j at time t consumes stage j-1's output from time t-1.  Output
// equals process() fed with N-1 prepended zeros.  The comb section runs
// at the low rate and is not pipelined.
std::vector<FixedWord> process_pipelined(const CicDesign& d, CicState& st,
                                         std::span<const FixedWord> in);

// Worst-case |truncated - full-width| output error in output LSB units:
// each site dropping d bits injects per-sample error < 2^d site LSBs,
// propagated through the exact absolute coefficient sum of the stages
// downstream of the site.
BigInt truncation_error_bound(const CicDesign& d);

}  // namespace cicsim

#endif  // CICSIM_CIC_HPP_
