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
#include "cicsim/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cicsim/mcla.hpp"
#include "cicsim/rng.hpp"

namespace cicsim {

namespace {

inline int64_t round_half_away(int64_t acc, int frac) {
  const int64_t half = int64_t{1} << (frac - 1);
  return acc >= 0 ? (acc + half) >> frac : -((-acc + half) >> frac);
}

inline int64_t fir_output_at(const QuantFir& f, std::span<const int64_t> in,
                             int64_t pos) {
  int64_t acc = 0;
  const int64_t lo = std::max<int64_t>(0, pos - static_cast<int64_t>(
                                              f.taps_q.size()) + 1);
  for (int64_t i = pos; i >= lo; --i) acc += f.taps_q[pos - i] * in[i];
  return round_half_away(acc, f.frac_bits);
}

void check_fir_headroom(const QuantFir& f, int in_width) {
  // The int64 accumulator must hold sum|h_q| * max|x| without overflow.
  uint64_t sum_abs = 0;
  for (int64_t t : f.taps_q)
    sum_abs += static_cast<uint64_t>(t < 0 ? -t : t);
  int bits = 0;
  while ((sum_abs >> bits) != 0) ++bits;
  if (bits + in_width > 62)
    throw ContractError("FIR accumulator headroom exceeded: " +
                        std::to_string(bits) + " coefficient bits + " +
                        std::to_string(in_width) + " sample bits");
}

// Behavioral oracle: raw pattern sum plus carry-in; carry out is bit W of
// the exact unsigned sum.
inline bool mcla_case_matches(int width, uint64_t a, uint64_t b, bool c0) {
  const FixedWord fa = from_pattern(a, width);
  const FixedWord fb = from_pattern(b, width);
  const AddResult got = mcla_add(fa, fb, c0);
  const unsigned __int128 exact =
      static_cast<unsigned __int128>(a) + b + (c0 ? 1 : 0);
  const uint64_t want_sum = static_cast<uint64_t>(exact) & width_mask(width);
  const bool want_cout = ((exact >> width) & 1) != 0;
  return got.sum.pattern() == want_sum && got.carry_out == want_cout;
}

struct CaseXY {
  uint64_t a, b;
  bool c0;
};

inline CaseXY random_case(int width, uint64_t seed, uint64_t i) {
  CaseXY c;
  c.a = splitmix64(seed + 3 * i) & width_mask(width);
  c.b = splitmix64(seed + 3 * i + 1) & width_mask(width);
  c.c0 = (splitmix64(seed + 3 * i + 2) & 1) != 0;
  return c;
}

}  // namespace

std::vector<int64_t> fir_decimate_ref(const QuantFir& f,
                                      std::span<const int64_t> in, int factor,
                                      int in_width) {
  if (factor < 1) throw ContractError("decimation factor must be >= 1");
  check_fir_headroom(f, in_width);
  const int64_t n_out =
      (static_cast<int64_t>(in.size()) + factor - 1) / factor;
  std::vector<int64_t> out(static_cast<size_t>(n_out));
  for (int64_t m = 0; m < n_out; ++m)
    out[static_cast<size_t>(m)] = fir_output_at(f, in, m * factor);
  return out;
}

std::vector<int64_t> fir_decimate(const QuantFir& f,
                                  std::span<const int64_t> in, int factor,
                                  int in_width) {
  if (factor < 1) throw ContractError("decimation factor must be >= 1");
  check_fir_headroom(f, in_width);
  const int64_t n_out =
      (static_cast<int64_t>(in.size()) + factor - 1) / factor;
  std::vector<int64_t> out(static_cast<size_t>(n_out));
#pragma omp parallel for schedule(static)
  for (int64_t m = 0; m < n_out; ++m)
    out[static_cast<size_t>(m)] = fir_output_at(f, in, m * factor);
  return out;
}

namespace {

inline double response_db_at(const CicParams& p, double f, double dc) {
  const double mag = frequency_response_mag(p, f) / dc;
  if (!(mag > 0.0)) return -400.0;
  return std::max(20.0 * std::log10(mag), -400.0);
}

}  // namespace

std::vector<double> cic_response_db_ref(const CicParams& p,
                                        std::span<const double> freqs_norm) {
  const double dc = std::pow(static_cast<double>(p.r) * p.m, p.n);
  std::vector<double> out(freqs_norm.size());
  for (size_t i = 0; i < freqs_norm.size(); ++i)
    out[i] = response_db_at(p, freqs_norm[i], dc);
  return out;
}

std::vector<double> cic_response_db(const CicParams& p,
                                    std::span<const double> freqs_norm) {
  const double dc = std::pow(static_cast<double>(p.r) * p.m, p.n);
  std::vector<double> out(freqs_norm.size());
  const int64_t n = static_cast<int64_t>(freqs_norm.size());
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i)
    out[static_cast<size_t>(i)] =
        response_db_at(p, freqs_norm[static_cast<size_t>(i)], dc);
  return out;
}

SweepResult mcla_sweep_exhaustive_ref(int width) {
  if (width < 1 || width > 10)
    throw ConfigError("exhaustive sweep supported for widths 1..10");
  SweepResult r;
  const uint64_t lim = 1ull << width;
  for (uint64_t a = 0; a < lim; ++a)
    for (uint64_t b = 0; b < lim; ++b)
      for (int c0 = 0; c0 < 2; ++c0) {
        ++r.cases;
        if (!mcla_case_matches(width, a, b, c0 != 0)) {
          ++r.mismatches;
          if (!r.has_example) {
            r.has_example = true;
            r.example_a = a;
            r.example_b = b;
            r.example_c0 = c0 != 0;
          }
        }
      }
  return r;
}

SweepResult mcla_sweep_exhaustive(int width) {
  if (width < 1 || width > 10)
    throw ConfigError("exhaustive sweep supported for widths 1..10");
  SweepResult r;
  const int64_t lim = 1ll << width;
  uint64_t mism = 0;
#pragma omp parallel for schedule(static) reduction(+ : mism)
  for (int64_t a = 0; a < lim; ++a) {
    for (int64_t b = 0; b < lim; ++b)
      for (int c0 = 0; c0 < 2; ++c0)
        if (!mcla_case_matches(width, static_cast<uint64_t>(a),
                               static_cast<uint64_t>(b), c0 != 0)) {
          ++mism;
#pragma omp critical
          if (!r.has_example) {
            r.has_example = true;
            r.example_a = static_cast<uint64_t>(a);
            r.example_b = static_cast<uint64_t>(b);
            r.example_c0 = c0 != 0;
          }
        }
  }
  r.cases = static_cast<uint64_t>(lim) * lim * 2;
  r.mismatches = mism;
  return r;
}

SweepResult mcla_sweep_random_ref(int width, uint64_t count, uint64_t seed) {
  FixedWord::check_width(width);
  SweepResult r;
  r.cases = count;
  for (uint64_t i = 0; i < count; ++i) {
    const CaseXY c = random_case(width, seed, i);
    if (!mcla_case_matches(width, c.a, c.b, c.c0)) {
      ++r.mismatches;
      if (!r.has_example) {
        r.has_example = true;
        r.example_a = c.a;
        r.example_b = c.b;
        r.example_c0 = c.c0;
      }
    }
  }
  return r;
}

SweepResult mcla_sweep_random(int width, uint64_t count, uint64_t seed) {
  FixedWord::check_width(width);
  SweepResult r;
  r.cases = count;
  uint64_t mism = 0;
  const int64_t n = static_cast<int64_t>(count);
#pragma omp parallel for schedule(static) reduction(+ : mism)
  for (int64_t i = 0; i < n; ++i) {
    const CaseXY c = random_case(width, seed, static_cast<uint64_t>(i));
    if (!mcla_case_matches(width, c.a, c.b, c.c0)) {
      ++mism;
#pragma omp critical
      if (!r.has_example) {
        r.has_example = true;
        r.example_a = c.a;
        r.example_b = c.b;
        r.example_c0 = c.c0;
      }
    }
  }
  r.mismatches = mism;
  return r;
}

}  // namespace cicsim
