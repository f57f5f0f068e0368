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
#ifndef CICSIM_FIXED_POINT_HPP_
#define CICSIM_FIXED_POINT_HPP_

#include <cstdint>
#include <string>

#include "cicsim/errors.hpp"

namespace cicsim {

inline constexpr int kMaxWidth = 64;

inline constexpr uint64_t width_mask(int w) {
  return w >= 64 ? ~0ull : ((1ull << w) - 1ull);
}

// Two's-complement value pinned to an explicit bit width.  The value is
// stored as a plain signed integer in LSB counts; there is no scale factor.
// Every datapath sample in the simulator is one of these.
class FixedWord {
public:
  FixedWord() : value_(0), width_(1) {}

  // Requires `value` to already be representable in `width` bits.
  FixedWord(int64_t value, int width) : value_(value), width_(width) {
    check_width(width);
    if (value < min_value(width) || value > max_value(width))
      throw ContractError("FixedWord: value " + std::to_string(value) +
                          " not representable in " + std::to_string(width) +
                          " bits");
  }

  int64_t value() const { return value_; }
  int width() const { return width_; }

  // Raw two's-complement bit pattern, low `width` bits significant.
  uint64_t pattern() const {
    return static_cast<uint64_t>(value_) & width_mask(width_);
  }

  static constexpr int64_t min_value(int w) {
    return w >= 64 ? INT64_MIN : -(int64_t{1} << (w - 1));
  }
  static constexpr int64_t max_value(int w) {
    return w >= 64 ? INT64_MAX : (int64_t{1} << (w - 1)) - 1;
  }

  friend bool operator==(const FixedWord& a, const FixedWord& b) {
    return a.value_ == b.value_ && a.width_ == b.width_;
  }
  friend bool operator!=(const FixedWord& a, const FixedWord& b) {
    return !(a == b);
  }

  static void check_width(int w) {
    if (w < 1 || w > kMaxWidth)
      throw ConfigError("bit width must be in [1, 64], got " +
                        std::to_string(w));
  }

private:
  int64_t value_;
  int width_;
};

// Reduces v modulo 2^W into the two's-complement range of width W.
// Re-wrapping an in-range value is the identity.
inline FixedWord wrap(int64_t v, int width) {
  FixedWord::check_width(width);
  uint64_t u = static_cast<uint64_t>(v) & width_mask(width);
  int64_t s;
  if (width < 64 && (u >> (width - 1)) != 0)
    s = static_cast<int64_t>(u) - (int64_t{1} << (width - 1)) -
        (int64_t{1} << (width - 1));
  else
    s = static_cast<int64_t>(u);
  return FixedWord(s, width);
}

// Interprets a raw bit pattern (low `width` bits) as a signed word.
inline FixedWord from_pattern(uint64_t bits, int width) {
  return wrap(static_cast<int64_t>(bits), width);
}

inline FixedWord add_wrap(const FixedWord& a, const FixedWord& b) {
  if (a.width() != b.width())
    throw ContractError("add_wrap: width mismatch " +
                        std::to_string(a.width()) + " vs " +
                        std::to_string(b.width()));
  uint64_t sum = static_cast<uint64_t>(a.value()) +
                 static_cast<uint64_t>(b.value());
  return from_pattern(sum, a.width());
}

// Drops (a.width - new_width) least significant bits via arithmetic right
// shift, i.e. rounding toward minus infinity.  This matches hardware LSB
// removal and carries a small negative-biased DC offset.
inline FixedWord truncate_lsb(const FixedWord& a, int new_width) {
  FixedWord::check_width(new_width);
  if (new_width > a.width())
    throw ContractError("truncate_lsb: cannot widen " +
                        std::to_string(a.width()) + " -> " +
                        std::to_string(new_width) +
                        " (use resize_extend)");
  int drop = a.width() - new_width;
  return FixedWord(a.value() >> drop, new_width);
}

// Sign-extends to a wider word; the value is unchanged.
inline FixedWord resize_extend(const FixedWord& a, int new_width) {
  FixedWord::check_width(new_width);
  if (new_width < a.width())
    throw ContractError("resize_extend: cannot narrow " +
                        std::to_string(a.width()) + " -> " +
                        std::to_string(new_width) +
                        " (use truncate_lsb)");
  return FixedWord(a.value(), new_width);
}

}  // namespace cicsim

#endif  // CICSIM_FIXED_POINT_HPP_
