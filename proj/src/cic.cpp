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
#include "cicsim/cic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cicsim/mcla.hpp"

namespace cicsim {

namespace {

constexpr int64_t kImpulseGuard = 1 << 20;  // cap on RM*N for expansion

void check_schedule(const std::vector<int>& w, int n, const char* what) {
  if (static_cast<int>(w.size()) != n)
    throw ConfigError(std::string(what) + " schedule must have " +
                      std::to_string(n) + " entries, got " +
                      std::to_string(w.size()));
  for (size_t i = 0; i < w.size(); ++i) {
    FixedWord::check_width(w[i]);
    if (i > 0 && w[i] > w[i - 1])
      throw ConfigError(std::string(what) +
                        " schedule must be non-increasing");
  }
}

// Truncation helper that also counts discarded nonzero LSBs.
FixedWord trunc_site(CicState& st, const FixedWord& v, int w) {
  if (w == v.width()) return v;
  if ((v.pattern() & width_mask(v.width() - w)) != 0) ++st.truncation_events;
  return truncate_lsb(v, w);
}

// Sum of |coefficients| of boxcar(RM)^a convolved with (1 - z^-RM)^b.
BigInt tail_abs_sum(int rm, int a, int b) {
  std::vector<BigInt> poly{1};
  const std::vector<BigInt> ones(static_cast<size_t>(rm), BigInt(1));
  auto convolve = [](const std::vector<BigInt>& x,
                     const std::vector<BigInt>& y) {
    std::vector<BigInt> out(x.size() + y.size() - 1, BigInt(0));
    for (size_t i = 0; i < x.size(); ++i)
      for (size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
    return out;
  };
  for (int i = 0; i < a; ++i) poly = convolve(poly, ones);
  std::vector<BigInt> comb(static_cast<size_t>(rm) + 1, BigInt(0));
  comb[0] = 1;
  comb[static_cast<size_t>(rm)] = -1;
  for (int i = 0; i < b; ++i) poly = convolve(poly, comb);
  BigInt sum = 0;
  for (const auto& c : poly) sum += abs(c);
  return sum;
}

}  // namespace

void CicParams::validate() const {
  if (n < 1) throw ConfigError("N must be >= 1, got " + std::to_string(n));
  if (m < 1) throw ConfigError("M must be >= 1, got " + std::to_string(m));
  if (r < 2) throw ConfigError("R must be >= 2, got " + std::to_string(r));
  if (b_in < 1 || b_in > 32)
    throw ConfigError("B_in must be in [1, 32], got " + std::to_string(b_in));
}

bool CicDesign::truncating() const { return dropped_bits() != 0; }

int CicDesign::dropped_bits() const {
  return integrator_widths.front() - comb_widths.back();
}

BigInt register_growth(const CicParams& p) {
  p.validate();
  BigInt g = 1;
  const BigInt rm = BigInt(p.r) * p.m;
  for (int i = 0; i < p.n; ++i) g *= rm;
  return g;
}

int output_msb(const CicParams& p) {
  // bit_length((RM)^N * 2^(B_in-1) - 1); exact N*log2(RM) + B_in - 1 for
  // power-of-two RM.
  const BigInt worst = (register_growth(p) << (p.b_in - 1)) - 1;
  return static_cast<int>(boost::multiprecision::msb(worst)) + 1;
}

CicDesign design(const CicParams& p,
                 std::optional<std::vector<int>> integrator_widths,
                 std::optional<std::vector<int>> comb_widths,
                 int decim_phase) {
  p.validate();
  if (decim_phase < 0 || decim_phase >= p.r)
    throw ConfigError("decimation phase must be in [0, R)");
  CicDesign d;
  d.params = p;
  d.g_max = register_growth(p);
  d.b_max = output_msb(p);
  d.decim_phase = decim_phase;

  const int full = d.b_max + 1;  // bits 0..b_max
  if (integrator_widths) {
    check_schedule(*integrator_widths, p.n, "integrator");
    if (integrator_widths->front() < d.b_max)
      throw ConfigError(
          "first integrator width " +
          std::to_string(integrator_widths->front()) + " is below B_max " +
          std::to_string(d.b_max) + "; that would cut worst-case MSBs");
    d.integrator_widths = *integrator_widths;
  } else {
    if (full > kMaxWidth)
      throw ConfigError("lossless width " + std::to_string(full) +
                        " exceeds the 64-bit simulator cap");
    d.integrator_widths.assign(p.n, full);
  }
  if (comb_widths) {
    check_schedule(*comb_widths, p.n, "comb");
    if (comb_widths->front() > d.integrator_widths.back())
      throw ConfigError("first comb width exceeds last integrator width");
    d.comb_widths = *comb_widths;
  } else {
    d.comb_widths.assign(p.n, d.integrator_widths.back());
  }
  if (d.params.b_in > d.integrator_widths.front())
    throw ConfigError("B_in exceeds the first integrator width");
  return d;
}

std::vector<BigInt> impulse_response(const CicParams& p) {
  p.validate();
  const int64_t rm = int64_t{p.r} * p.m;
  if (rm * p.n > kImpulseGuard)
    throw ConfigError("impulse response expansion guard exceeded: RM*N = " +
                      std::to_string(rm * p.n));
  std::vector<BigInt> h{1};
  for (int s = 0; s < p.n; ++s) {
    // Convolution with the all-ones vector is a sliding window sum over h.
    std::vector<BigInt> prefix(h.size() + 1, BigInt(0));
    for (size_t i = 0; i < h.size(); ++i) prefix[i + 1] = prefix[i] + h[i];
    std::vector<BigInt> next(h.size() + rm - 1);
    for (size_t k = 0; k < next.size(); ++k) {
      const size_t hi = std::min(k, h.size() - 1) + 1;
      const size_t lo = k >= static_cast<size_t>(rm) ? k - rm + 1 : 0;
      next[k] = prefix[hi] - prefix[lo];
    }
    h = std::move(next);
  }
  return h;
}

double frequency_response_mag(const CicParams& p, double f) {
  p.validate();
  if (!(f >= 0.0 && f <= 0.5))
    throw ContractError("normalized frequency must be in [0, 0.5]");
  const double rm = static_cast<double>(p.r) * p.m;
  if (f == 0.0) return std::pow(rm, p.n);
  const double num = std::sin(std::numbers::pi * f * rm);
  const double den = std::sin(std::numbers::pi * f);
  return std::pow(std::abs(num / den), p.n);
}

CicState make_state(const CicDesign& d, bool pipelined) {
  CicState st;
  const int n = d.params.n;
  st.integrator_accs.reserve(n);
  for (int j = 0; j < n; ++j)
    st.integrator_accs.emplace_back(0, d.integrator_widths[j]);
  st.comb_delays.resize(n);
  st.comb_pos.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    const int w = j == 0 ? d.comb_widths[0] : d.comb_widths[j - 1];
    st.comb_delays[j].assign(d.params.m, FixedWord(0, w));
  }
  if (pipelined)
    for (int j = 0; j + 1 < n; ++j)
      st.pipeline_regs.emplace_back(0, d.integrator_widths[j + 1]);
  st.phase = 0;
  return st;
}

namespace {

void check_state(const CicDesign& d, const CicState& st, bool pipelined) {
  const int n = d.params.n;
  bool ok = static_cast<int>(st.integrator_accs.size()) == n &&
            static_cast<int>(st.comb_delays.size()) == n &&
            static_cast<int>(st.pipeline_regs.size()) ==
                (pipelined ? n - 1 : 0);
  for (int j = 0; ok && j < n; ++j)
    ok = st.integrator_accs[j].width() == d.integrator_widths[j] &&
         static_cast<int>(st.comb_delays[j].size()) == d.params.m;
  if (!ok)
    throw ContractError(
        "CIC state does not match the design; build it with make_state()");
}

// One decimated sample through the comb cascade.
FixedWord comb_cascade(const CicDesign& d, CicState& st, FixedWord t) {
  for (int j = 0; j < d.params.n; ++j) {
    auto& line = st.comb_delays[j];
    int& pos = st.comb_pos[j];
    const FixedWord delayed = line[pos];
    line[pos] = t;
    pos = (pos + 1) % d.params.m;
    t = trunc_site(st, mcla_sub(t, delayed), d.comb_widths[j]);
  }
  return t;
}

std::vector<FixedWord> run(const CicDesign& d, CicState& st,
                           std::span<const FixedWord> in, bool pipelined) {
  check_state(d, st, pipelined);
  const int n = d.params.n;
  std::vector<FixedWord> out;
  out.reserve(in.size() / d.params.r + 1);
  for (const FixedWord& x : in) {
    if (x.width() != d.params.b_in)
      throw ContractError("input width " + std::to_string(x.width()) +
                          " does not match B_in " +
                          std::to_string(d.params.b_in));
    if (!pipelined) {
      FixedWord v = resize_extend(x, d.integrator_widths[0]);
      for (int j = 0; j < n; ++j) {
        if (j > 0) v = trunc_site(st, v, d.integrator_widths[j]);
        st.integrator_accs[j] = mcla_add(st.integrator_accs[j], v, false).sum;
        v = st.integrator_accs[j];
      }
    } else {
      // Stage j consumes the registered value from time t-1; registers are
      // reloaded after all accumulators advance.
      st.integrator_accs[0] =
          mcla_add(st.integrator_accs[0],
                   resize_extend(x, d.integrator_widths[0]), false)
              .sum;
      for (int j = 1; j < n; ++j)
        st.integrator_accs[j] =
            mcla_add(st.integrator_accs[j], st.pipeline_regs[j - 1], false)
                .sum;
      for (int j = 0; j + 1 < n; ++j)
        st.pipeline_regs[j] =
            trunc_site(st, st.integrator_accs[j], d.integrator_widths[j + 1]);
    }
    if (st.phase == d.decim_phase)
      out.push_back(comb_cascade(
          d, st, trunc_site(st, st.integrator_accs[n - 1], d.comb_widths[0])));
    st.phase = (st.phase + 1) % d.params.r;
  }
  return out;
}

}  // namespace

std::vector<FixedWord> process(const CicDesign& d, CicState& st,
                               std::span<const FixedWord> in) {
  return run(d, st, in, false);
}

std::vector<FixedWord> process_pipelined(const CicDesign& d, CicState& st,
                                         std::span<const FixedWord> in) {
  return run(d, st, in, true);
}

BigInt truncation_error_bound(const CicDesign& d) {
  const int n = d.params.n;
  const int rm = d.params.r * d.params.m;
  BigInt numerator = 0;
  int dropped_before = 0;

  // Integrator-side sites: the output of stage j narrows before entering
  // stage j+1 (j = n-1 is the entry into the comb section).
  for (int j = 0; j < n; ++j) {
    const int from = d.integrator_widths[j];
    const int to = j + 1 < n ? d.integrator_widths[j + 1] : d.comb_widths[0];
    const int drop = from - to;
    if (drop > 0) {
      const BigInt site_max = (BigInt(1) << drop) - 1;
      // Remaining path: n-1-j integrators and j+1 comb factors.
      numerator += site_max * (BigInt(1) << dropped_before) *
                   tail_abs_sum(rm, n - 1 - j, j + 1);
      dropped_before += drop;
    }
  }
  // Comb-side sites: stage j's output narrows; n-1-j differencers remain,
  // each with absolute coefficient sum 2.
  for (int j = 0; j < n; ++j) {
    const int from = j == 0 ? d.comb_widths[0] : d.comb_widths[j - 1];
    const int drop = from - d.comb_widths[j];
    if (drop > 0) {
      const BigInt site_max = (BigInt(1) << drop) - 1;
      numerator += site_max * (BigInt(1) << dropped_before) *
                   (BigInt(1) << (n - 1 - j));
      dropped_before += drop;
    }
  }
  if (numerator == 0) return 0;
  const BigInt scale = BigInt(1) << dropped_before;
  return (numerator + scale - 1) / scale;  // ceil to output LSB units
}

}  // namespace cicsim
