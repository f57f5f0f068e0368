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
#ifndef CICSIM_MCLA_HPP_
#define CICSIM_MCLA_HPP_

#include <array>
#include <cstdint>

#include "cicsim/fixed_point.hpp"

// Gate-level model of a carry look-ahead adder built from 4-bit groups.
// Each group produces a group propagate/generate pair; groups are chained
// by feeding the previous group's carry-out into the next group's carry-in.
// This is the addition primitive used inside the CIC integrator and comb
// sections, and it can be exported as a structural AND/OR/XOR netlist.

namespace cicsim {

// Per-bit signals: g = a AND b (carry generated), p = a XOR b (carry
// propagated).  XOR propagate doubles as the half sum, so s_i = p_i ^ c_i.
struct PgPair {
  bool p = false;
  bool g = false;
};

struct GroupPg {
  bool pg = false;  // group propagate, P_G
  bool gg = false;  // group generate, G_G
};

inline PgPair bit_pg(bool a, bool b) { return PgPair{a != b, a && b}; }

// P_G = p3 p2 p1 p0
// G_G = g3 + p3 g2 + p3 p2 g1 + p3 p2 p1 g0
inline GroupPg group_pg(const std::array<PgPair, 4>& s) {
  GroupPg out;
  out.pg = s[3].p && s[2].p && s[1].p && s[0].p;
  out.gg = s[3].g || (s[3].p && s[2].g) || (s[3].p && s[2].p && s[1].g) ||
           (s[3].p && s[2].p && s[1].p && s[0].g);
  return out;
}

// Intra-group carries:
//   c1 = g0 + p0 c0
//   c2 = g1 + p1 g0 + p1 p0 c0
//   c3 = g2 + p2 g1 + p2 p1 g0 + p2 p1 p0 c0
//   c4 = g3 + p3 g2 + p3 p2 g1 + p3 p2 p1 g0 + p3 p2 p1 p0 c0
// c4 also equals G_G + P_G c0; both forms are kept under test.
inline std::array<bool, 4> block_carries(const std::array<PgPair, 4>& s,
                                         bool c0) {
  std::array<bool, 4> c;
  c[0] = s[0].g || (s[0].p && c0);
  c[1] = s[1].g || (s[1].p && s[0].g) || (s[1].p && s[0].p && c0);
  c[2] = s[2].g || (s[2].p && s[1].g) || (s[2].p && s[1].p && s[0].g) ||
         (s[2].p && s[1].p && s[0].p && c0);
  c[3] = s[3].g || (s[3].p && s[2].g) || (s[3].p && s[2].p && s[1].g) ||
         (s[3].p && s[2].p && s[1].p && s[0].g) ||
         (s[3].p && s[2].p && s[1].p && s[0].p && c0);
  return c;
}

struct AddResult {
  FixedWord sum;
  bool carry_out = false;  // carry out of the operands' MSB position
};

// Adds the raw two's-complement patterns of two equal-width words plus a
// carry-in.  Operands are sign-extended internally to the next multiple of
// four bits, the 4-bit groups are chained LSB first, and the result is
// truncated back to the original width.  Equivalent to add_wrap(a, b) + c0
// in modular arithmetic; carry_out is bit W of the unsigned pattern sum.
inline AddResult mcla_add(const FixedWord& a, const FixedWord& b, bool c0) {
  const int w = a.width();
  if (w != b.width())
    throw ContractError("mcla_add: width mismatch " + std::to_string(w) +
                        " vs " + std::to_string(b.width()));
  const int padded = (w + 3) & ~3;
  // Sign extension keeps the low w bits (the only ones retained) intact.
  const uint64_t ap = static_cast<uint64_t>(a.value()) & width_mask(padded);
  const uint64_t bp = static_cast<uint64_t>(b.value()) & width_mask(padded);
  const uint64_t p = ap ^ bp;
  const uint64_t g = ap & bp;

  uint64_t sum = 0;
  bool carry = c0;       // carry entering the current group
  bool cout_msb = c0;    // carry entering bit position w
  for (int base = 0; base < padded; base += 4) {
    std::array<PgPair, 4> s;
    for (int i = 0; i < 4; ++i) {
      s[i].p = (p >> (base + i)) & 1u;
      s[i].g = (g >> (base + i)) & 1u;
    }
    const auto c = block_carries(s, carry);
    // Sum bits: s_i = p_i ^ c_i with c_0 = group carry-in.
    sum |= static_cast<uint64_t>(s[0].p != carry) << (base + 0);
    sum |= static_cast<uint64_t>(s[1].p != c[0]) << (base + 1);
    sum |= static_cast<uint64_t>(s[2].p != c[1]) << (base + 2);
    sum |= static_cast<uint64_t>(s[3].p != c[2]) << (base + 3);
    if (w > base && w <= base + 4) {
      const bool into[5] = {carry, c[0], c[1], c[2], c[3]};
      cout_msb = into[w - base];
    }
    const GroupPg grp = group_pg(s);
    carry = grp.gg || (grp.pg && carry);
  }
  return AddResult{from_pattern(sum & width_mask(w), w), cout_msb};
}

// Comb subtraction x - d realized on the same adder: add the bitwise
// complement of d with carry-in 1 (fused two's-complement negation).
inline FixedWord mcla_sub(const FixedWord& x, const FixedWord& d) {
  const FixedWord nd = from_pattern(~d.pattern(), d.width());
  return mcla_add(x, nd, true).sum;
}

}  // namespace cicsim

#endif  // CICSIM_MCLA_HPP_
