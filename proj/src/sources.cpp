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
#include "cicsim/sources.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cicsim/errors.hpp"

namespace cicsim {

std::vector<FixedWord> gen_sine(double amp, double f_hz, double fs, size_t n,
                                int width) {
  FixedWord::check_width(width);
  if (!(amp >= 0.0 && amp <= 1.0))
    throw ConfigError("sine amplitude must be in [0, 1] of full scale");
  if (!(f_hz >= 0.0 && f_hz < fs / 2))
    throw ConfigError("sine frequency must be below fs/2");
  const double full = static_cast<double>(FixedWord::max_value(width));
  std::vector<FixedWord> out;
  out.reserve(n);
  for (size_t k = 0; k < n; ++k) {
    const double ph =
        2.0 * std::numbers::pi * f_hz / fs * static_cast<double>(k);
    out.emplace_back(std::llround(amp * full * std::sin(ph)), width);
  }
  return out;
}

std::vector<FixedWord> gen_impulse(int64_t amplitude, size_t n, int width) {
  std::vector<FixedWord> out(n, FixedWord(0, width));
  if (n > 0) out[0] = FixedWord(amplitude, width);
  return out;
}

std::vector<FixedWord> gen_dc(int64_t value, size_t n, int width) {
  return std::vector<FixedWord>(n, FixedWord(value, width));
}

std::vector<FixedWord> gen_noise(Rng& rng, size_t n, int width) {
  FixedWord::check_width(width);
  std::vector<FixedWord> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i)
    out.emplace_back(rng.uniform_int(FixedWord::min_value(width),
                                     FixedWord::max_value(width)),
                     width);
  return out;
}

std::vector<FixedWord> sdm_modulate(SdmState& st, std::span<const double> in,
                                    int width) {
  FixedWord::check_width(width);
  if (width < 2)
    throw ConfigError("modulator output width must be >= 2 to encode +-1");
  if (st.quantizer_levels != 2)
    throw ConfigError("only the 2-level quantizer is supported");
  std::vector<FixedWord> out;
  out.reserve(in.size());
  double y = 0.0;
  for (double x : in) {
    if (!(x >= -0.9 && x <= 0.9))
      throw ContractError("modulator input outside [-0.9, 0.9]: " +
                          std::to_string(x));
    st.int1 += x - y;
    st.int2 += st.int1 - y;
    for (double* acc : {&st.int1, &st.int2}) {
      if (*acc > st.clip_limit) {
        *acc = st.clip_limit;
        ++st.saturations;
      } else if (*acc < -st.clip_limit) {
        *acc = -st.clip_limit;
        ++st.saturations;
      }
    }
    y = st.int2 >= 0.0 ? 1.0 : -1.0;
    out.emplace_back(static_cast<int64_t>(y), width);
  }
  return out;
}

}  // namespace cicsim
