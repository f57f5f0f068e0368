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
#include "cicsim/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "cicsim/errors.hpp"

namespace cicsim {

namespace {

using std::numbers::pi;

constexpr double kDbFloor = -400.0;

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

double db_clamped(double ratio) {
  if (!(ratio > 0.0)) return kDbFloor;
  return std::max(20.0 * std::log10(ratio), kDbFloor);
}

}  // namespace

const char* window_name(Window w) {
  return w == Window::kRectangular ? "rectangular" : "hann";
}

void fft_inplace(std::vector<std::complex<double>>& a) {
  const size_t n = a.size();
  if (!is_pow2(n)) throw ContractError("FFT size must be a power of two");
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * pi / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

Spectrum spectrum(std::span<const double> signal, double fs, Window window,
                  double full_scale) {
  const size_t n = signal.size();
  if (!is_pow2(n) || n < 256)
    throw ContractError("spectrum length must be a power of two >= 256, got " +
                        std::to_string(n));
  if (!(fs > 0) || !(full_scale > 0))
    throw ContractError("spectrum needs positive fs and full-scale");

  Spectrum s;
  s.fs = fs;
  s.length = static_cast<int>(n);
  s.window = window;
  s.full_scale = full_scale;

  std::vector<std::complex<double>> buf(n);
  if (window == Window::kRectangular) {
    s.coherent_gain = 1.0;
    s.noise_gain = 1.0;
    for (size_t i = 0; i < n; ++i) buf[i] = signal[i];
  } else {
    // Periodic Hann: DC leaks into bins 0 and +-1 only, and the gains are
    // exactly 1/2 and 3/8.
    s.coherent_gain = 0.5;
    s.noise_gain = 0.375;
    for (size_t i = 0; i < n; ++i) {
      const double w =
          0.5 * (1.0 - std::cos(2.0 * pi * static_cast<double>(i) / n));
      buf[i] = signal[i] * w;
    }
  }
  fft_inplace(buf);

  const size_t half = n / 2;
  s.bin_freqs.resize(half + 1);
  s.mags_db.resize(half + 1);
  const double norm = 1.0 / (static_cast<double>(n) * s.coherent_gain);
  for (size_t k = 0; k <= half; ++k) {
    s.bin_freqs[k] = fs * static_cast<double>(k) / static_cast<double>(n);
    const double one_sided = (k == 0 || k == half) ? 1.0 : 2.0;
    const double amp = one_sided * std::abs(buf[k]) * norm;
    s.mags_db[k] = db_clamped(amp / full_scale);
  }
  return s;
}

double measure_snr(const Spectrum& spec, double f_signal, double f_lo,
                   double f_hi, int leakage_bins) {
  if (!(f_lo >= 0 && f_hi <= spec.fs / 2 && f_lo < f_hi))
    throw ContractError("SNR band must lie inside [0, fs/2]");
  if (!(f_signal >= f_lo && f_signal <= f_hi))
    throw ContractError("signal frequency must lie inside the band");
  if (leakage_bins < 0) throw ContractError("leakage_bins must be >= 0");

  const double bw = spec.bin_width();
  const int last = static_cast<int>(spec.mags_db.size()) - 1;
  const int k_sig = std::clamp(
      static_cast<int>(std::llround(f_signal / bw)), 0, last);
  const int k_lo = std::max(0, static_cast<int>(std::ceil(f_lo / bw - 1e-9)));
  const int k_hi =
      std::min(last, static_cast<int>(std::floor(f_hi / bw + 1e-9)));

  auto bin_power = [&spec](int k) {
    // dB values are amplitude relative to full scale; power follows as
    // amp^2 / 2 with the full-scale factor cancelling in the ratio.
    const double amp = std::pow(10.0, spec.mags_db[k] / 20.0);
    return amp * amp / 2.0;
  };

  double p_sig = 0.0;
  for (int k = std::max(0, k_sig - leakage_bins);
       k <= std::min(last, k_sig + leakage_bins); ++k)
    p_sig += bin_power(k);

  double p_noise = 0.0;
  int noise_bins = 0;
  for (int k = k_lo; k <= k_hi; ++k) {
    if (k <= 1) continue;  // DC bin and one neighbor
    if (k >= k_sig - leakage_bins && k <= k_sig + leakage_bins) continue;
    p_noise += bin_power(k);
    ++noise_bins;
  }
  if (noise_bins == 0)
    throw ContractError("SNR band is empty after DC and signal exclusions");

  // Signal and noise use the same bin normalization, so the window's
  // noise-bandwidth factor cancels in the ratio: the leakage cluster
  // overcounts the sine by exactly mean(w^2)/mean(w)^2, matching the
  // per-bin inflation of the noise.
  return 10.0 * std::log10(p_sig / p_noise);
}

void export_csv(const std::string& path, std::span<const double> freqs,
                std::span<const double> mags_db) {
  if (freqs.size() != mags_db.size())
    throw ContractError("CSV export: column length mismatch");
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  bool ok = std::fputs("freq_hz,mag_db\n", f) >= 0;
  for (size_t i = 0; ok && i < freqs.size(); ++i)
    ok = std::fprintf(f, "%.9g,%.9g\n", freqs[i], mags_db[i]) > 0;
  ok = std::fclose(f) == 0 && ok;
  if (!ok) throw IoError("write failed for '" + path + "'");
}

}  // namespace cicsim
