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
#ifndef CICSIM_SPECTRUM_HPP_
#define CICSIM_SPECTRUM_HPP_

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace cicsim {

enum class Window { kRectangular, kHann };

const char* window_name(Window w);

// One-sided magnitude spectrum in dB relative to a declared full-scale
// amplitude, floored at -400 dB.  Bin amplitudes are corrected by the
// window's coherent gain; the mean-square window gain is kept alongside so
// noise power can be read back without window bias.
struct Spectrum {
  double fs = 0;
  int length = 0;  // FFT size; bin count is length/2 + 1
  Window window = Window::kRectangular;
  double coherent_gain = 1.0;  // mean(w)
  double noise_gain = 1.0;     // mean(w^2)
  double full_scale = 1.0;
  std::vector<double> bin_freqs;
  std::vector<double> mags_db;

  double bin_width() const { return fs / length; }
};

// In-place iterative radix-2 FFT; size must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& a);

// `signal` length must be a power of two >= 256.
Spectrum spectrum(std::span<const double> signal, double fs, Window window,
                  double full_scale);

// SNR in dB: signal power is the bin nearest f_signal plus/minus
// `leakage_bins` neighbors; noise is every other in-band bin except DC
// (bin 0 and one neighbor).  Both sums use the same bin normalization,
// so the window's noise-bandwidth factor cancels and the reading is
// window independent.
double measure_snr(const Spectrum& spec, double f_signal, double f_lo,
                   double f_hi, int leakage_bins = 3);

// UTF-8 CSV `freq_hz,mag_db`, one row per bin, 9 significant digits, LF.
void export_csv(const std::string& path, std::span<const double> freqs,
                std::span<const double> mags_db);

}  // namespace cicsim

#endif  // CICSIM_SPECTRUM_HPP_
