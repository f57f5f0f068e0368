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
#include "cicsim/chain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cicsim/errors.hpp"
#include "cicsim/kernels.hpp"

namespace cicsim {

namespace {

// Smallest width holding the stage's worst-case rounded output.
int fir_out_width(const QuantFir& f, int in_width) {
  uint64_t sum_abs = 0;
  for (int64_t t : f.taps_q)
    sum_abs += static_cast<uint64_t>(t < 0 ? -t : t);
  const uint64_t worst =
      ((sum_abs << (in_width - 1)) + (1ull << (f.frac_bits - 1))) >>
      f.frac_bits;
  int bits = 0;
  while ((worst >> bits) != 0) ++bits;
  return std::max(bits + 1, in_width);
}

double quant_mag_norm(const QuantFir& f, double g) {
  return quant_fir_magnitude(f, g) / quant_fir_magnitude(f, 0.0);
}

double floor_db(double mag) {
  if (!(mag > 0.0)) return -400.0;
  return std::max(20.0 * std::log10(mag), -400.0);
}

}  // namespace

ChainConfig design_chain(const ChainSpec& spec) {
  if (!(spec.fs_in > 0)) throw ConfigError("fs_in must be positive");
  ChainConfig cfg;
  cfg.cic = design(spec.cic, spec.integrator_widths, spec.comb_widths,
                   spec.decim_phase);
  cfg.fs_in = spec.fs_in;
  cfg.f_pass = spec.f_pass;
  cfg.frac_bits = spec.frac_bits;

  const double out_rate = cfg.output_rate();
  if (!(spec.f_pass > 0 && spec.f_pass < out_rate / 2))
    throw ConfigError("f_pass must lie inside (0, output_rate/2) = (0, " +
                      std::to_string(out_rate / 2) + " Hz)");

  const int r = spec.cic.r;
  const double fp_hb1 = spec.f_pass * r / spec.fs_in;
  const double fp_droop = spec.f_pass * 2 * r / spec.fs_in;
  const double fp_hb2 = spec.f_pass * 4 * r / spec.fs_in;
  cfg.hb1 = design_halfband(fp_hb1, spec.stop_atten_db);
  cfg.droop = design_droop_corrector(spec.cic, fp_droop, spec.droop_taps);
  cfg.hb2 = design_halfband(fp_hb2, spec.stop_atten_db);
  cfg.hb1_q = quantize(cfg.hb1, spec.frac_bits);
  cfg.droop_q = quantize(cfg.droop, spec.frac_bits);
  cfg.hb2_q = quantize(cfg.hb2, spec.frac_bits);

  int w = cfg.cic.output_width();
  for (const QuantFir* f : {&cfg.hb1_q, &cfg.droop_q, &cfg.hb2_q}) {
    w = fir_out_width(*f, w);
    cfg.fir_out_widths.push_back(w);
  }
  if (w > 32)
    throw ConfigError("chain output width " + std::to_string(w) +
                      " exceeds the 32-bit sample format");
  return cfg;
}

std::vector<FixedWord> chain_process(const ChainConfig& cfg,
                                     std::span<const FixedWord> in) {
  CicState st = make_state(cfg.cic);
  const std::vector<FixedWord> cic_out = process(cfg.cic, st, in);

  std::vector<int64_t> buf(cic_out.size());
  for (size_t i = 0; i < cic_out.size(); ++i) buf[i] = cic_out[i].value();

  int w = cfg.cic.output_width();
  const QuantFir* stages[3] = {&cfg.hb1_q, &cfg.droop_q, &cfg.hb2_q};
  for (int s = 0; s < 3; ++s) {
    buf = fir_decimate(*stages[s], buf, 2, w);
    w = cfg.fir_out_widths[s];
  }
  std::vector<FixedWord> out;
  out.reserve(buf.size());
  for (int64_t v : buf) out.emplace_back(v, w);
  return out;
}

std::vector<double> chain_response_db(const ChainConfig& cfg,
                                      std::span<const double> freqs_hz) {
  const int r = cfg.cic.params.r;
  for (double f : freqs_hz)
    if (!(f >= 0.0 && f <= cfg.fs_in / 2))
      throw ContractError("response grid frequency outside [0, fs/2]: " +
                          std::to_string(f));
  std::vector<double> out(freqs_hz.size());
  const double dc =
      std::pow(static_cast<double>(r) * cfg.cic.params.m, cfg.cic.params.n);
  const int64_t n = static_cast<int64_t>(freqs_hz.size());
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) {
    const double f = freqs_hz[static_cast<size_t>(i)];
    double mag = frequency_response_mag(cfg.cic.params, f / cfg.fs_in) / dc;
    // FIR responses are periodic in their own rate, which is exactly the
    // undecimated-equivalent evaluation.
    mag *= quant_mag_norm(cfg.hb1_q, f * r / cfg.fs_in);
    mag *= quant_mag_norm(cfg.droop_q, f * 2 * r / cfg.fs_in);
    mag *= quant_mag_norm(cfg.hb2_q, f * 4 * r / cfg.fs_in);
    out[static_cast<size_t>(i)] = floor_db(mag);
  }
  return out;
}

double cic_alone_db(const ChainConfig& cfg, double f_hz) {
  const double dc = std::pow(
      static_cast<double>(cfg.cic.params.r) * cfg.cic.params.m,
      cfg.cic.params.n);
  return floor_db(frequency_response_mag(cfg.cic.params, f_hz / cfg.fs_in) /
                  dc);
}

double corrected_cic_db(const ChainConfig& cfg, double f_hz) {
  const double dc = std::pow(
      static_cast<double>(cfg.cic.params.r) * cfg.cic.params.m,
      cfg.cic.params.n);
  const double mag =
      frequency_response_mag(cfg.cic.params, f_hz / cfg.fs_in) / dc *
      quant_mag_norm(cfg.droop_q, f_hz * 2 * cfg.cic.params.r / cfg.fs_in);
  return floor_db(mag);
}

}  // namespace cicsim
