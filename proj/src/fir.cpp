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
#include "cicsim/fir.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "cicsim/errors.hpp"

namespace cicsim {

namespace {

using std::numbers::pi;

constexpr int kMaxHalfbandTaps = 1024;

// Zeroth-order modified Bessel function by series expansion.
double bessel_i0(double x) {
  const double t = x / 2.0;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= (t / k) * (t / k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double kaiser_beta(double atten_db) {
  if (atten_db > 50.0) return 0.1102 * (atten_db - 8.7);
  if (atten_db >= 21.0)
    return 0.5842 * std::pow(atten_db - 21.0, 0.4) +
           0.07886 * (atten_db - 21.0);
  return 0.0;
}

double sinc(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(pi * x) / (pi * x);
}

// Builds the normalized half-band prototype of odd length `len`.
FirFilter halfband_taps(int len, double beta) {
  const int c = (len - 1) / 2;
  std::vector<double> taps(len, 0.0);
  const double i0b = bessel_i0(beta);
  double odd_sum = 0.0;
  for (int m = -c; m <= c; ++m) {
    if (m == 0 || m % 2 == 0) continue;  // even offsets are exact zeros
    const double frac = static_cast<double>(m) / c;
    const double w = bessel_i0(beta * std::sqrt(1.0 - frac * frac)) / i0b;
    taps[c + m] = 0.5 * sinc(0.5 * m) * w;
    if (m > 0) odd_sum += taps[c + m];
  }
  // Scale the odd taps so the total DC gain is exactly 1 with a 0.5
  // center; this also pins the quarter-rate gain to exactly 0.5.
  const double scale = 0.25 / odd_sum;
  for (double& t : taps) t *= scale;
  taps[c] = 0.5;
  FirFilter f;
  f.taps = std::move(taps);
  f.symmetric = true;
  f.halfband = true;
  return f;
}

double stopband_peak(const FirFilter& f, double f_stop_lo) {
  double peak = 0.0;
  const int grid = 1024;
  for (int i = 0; i <= grid; ++i) {
    const double g = f_stop_lo + (0.5 - f_stop_lo) * i / grid;
    peak = std::max(peak, fir_magnitude(f.taps, g));
  }
  return peak;
}

// Solves A x = b in place by Gaussian elimination with partial pivoting.
std::vector<double> solve_dense(std::vector<std::vector<double>> a,
                                std::vector<double> b) {
  const size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    if (a[col][col] == 0.0)
      throw ConfigError("droop corrector fit produced a singular system");
    for (size_t r = col + 1; r < n; ++r) {
      const double m = a[r][col] / a[col][col];
      if (m == 0.0) continue;
      for (size_t k = col; k < n; ++k) a[r][k] -= m * a[col][k];
      b[r] -= m * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (size_t r = n; r-- > 0;) {
    double acc = b[r];
    for (size_t k = r + 1; k < n; ++k) acc -= a[r][k] * x[k];
    x[r] = acc / a[r][r];
  }
  return x;
}

}  // namespace

double fir_magnitude(std::span<const double> taps, double f) {
  std::complex<double> acc(0.0, 0.0);
  for (size_t k = 0; k < taps.size(); ++k) {
    const double ph = -2.0 * pi * f * static_cast<double>(k);
    acc += taps[k] * std::complex<double>(std::cos(ph), std::sin(ph));
  }
  return std::abs(acc);
}

FirFilter design_halfband(double f_pass_norm, double stop_atten_db) {
  if (!(f_pass_norm > 0.0 && f_pass_norm < 0.25))
    throw ConfigError("half-band passband edge must be in (0, 0.25), got " +
                      std::to_string(f_pass_norm));
  if (stop_atten_db <= 0.0)
    throw ConfigError("stopband attenuation must be positive");
  const double beta = kaiser_beta(stop_atten_db);
  const double trans = 0.5 - 2.0 * f_pass_norm;
  int len = static_cast<int>(std::ceil(
      (stop_atten_db - 7.95) / (2.285 * 2.0 * pi * trans) + 1.0));
  len = std::max(len, 7);
  while (len % 4 != 3) ++len;

  const double target = std::pow(10.0, -stop_atten_db / 20.0);
  for (; len <= kMaxHalfbandTaps; len += 4) {
    FirFilter f = halfband_taps(len, beta);
    if (stopband_peak(f, 0.5 - f_pass_norm) <= target) return f;
  }
  throw ConfigError("half-band spec unattainable within " +
                    std::to_string(kMaxHalfbandTaps) + " taps");
}

FirFilter design_droop_corrector(const CicParams& cic, double f_pass_norm,
                                 int length, int rate_ratio) {
  cic.validate();
  if (length < 7 || length % 2 == 0)
    throw ConfigError("droop corrector length must be odd and >= 7");
  if (rate_ratio == 0) rate_ratio = 2 * cic.r;
  if (!(f_pass_norm > 0.0 && f_pass_norm < 0.5))
    throw ConfigError("corrector passband edge must be in (0, 0.5)");

  const double dc = std::pow(static_cast<double>(cic.r) * cic.m, cic.n);
  const int c = (length - 1) / 2;
  const int nu = c + 1;

  // Weighted least squares over a dense grid: inverse-droop target in the
  // passband, zero in the fold band, free in between.
  const int grid = 16 * length;
  const double stop_lo = 0.5 - f_pass_norm;
  std::vector<std::vector<double>> ata(nu, std::vector<double>(nu, 0.0));
  std::vector<double> atb(nu, 0.0);
  std::vector<double> basis(nu);
  for (int i = 0; i <= grid; ++i) {
    const double g = 0.5 * i / grid;
    double target, weight;
    if (g <= f_pass_norm) {
      target = dc / frequency_response_mag(cic, g / rate_ratio);
      weight = 1.0;
    } else if (g >= stop_lo) {
      target = 0.0;
      weight = 10.0;
    } else {
      continue;
    }
    basis[0] = 1.0;
    for (int k = 1; k < nu; ++k) basis[k] = 2.0 * std::cos(2.0 * pi * g * k);
    for (int r = 0; r < nu; ++r) {
      for (int k = 0; k < nu; ++k) ata[r][k] += weight * basis[r] * basis[k];
      atb[r] += weight * basis[r] * target;
    }
  }
  const std::vector<double> v = solve_dense(std::move(ata), std::move(atb));

  FirFilter f;
  f.taps.assign(length, 0.0);
  f.taps[c] = v[0];
  for (int k = 1; k < nu; ++k) {
    f.taps[c + k] = v[k];
    f.taps[c - k] = v[k];
  }
  // Exact unity DC gain.
  double s = 0.0;
  for (double t : f.taps) s += t;
  for (double& t : f.taps) t /= s;
  f.symmetric = true;
  return f;
}

QuantFir quantize(const FirFilter& f, int frac_bits) {
  if (frac_bits < 1 || frac_bits > 30)
    throw ConfigError("coefficient fractional bits must be in [1, 30]");
  QuantFir q;
  q.frac_bits = frac_bits;
  const double scale = static_cast<double>(int64_t{1} << frac_bits);
  q.taps_q.reserve(f.taps.size());
  for (double t : f.taps) q.taps_q.push_back(std::llround(t * scale));
  return q;
}

double quant_fir_magnitude(const QuantFir& f, double f_norm) {
  std::vector<double> taps(f.taps_q.size());
  const double inv = 1.0 / static_cast<double>(int64_t{1} << f.frac_bits);
  for (size_t i = 0; i < taps.size(); ++i)
    taps[i] = static_cast<double>(f.taps_q[i]) * inv;
  return fir_magnitude(taps, f_norm);
}

}  // namespace cicsim
