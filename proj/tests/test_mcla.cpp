#include "cicsim/mcla.hpp"

#include "cicsim/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cicsim;

TEST_CASE("per-bit propagate/generate") {
  CHECK(bit_pg(false, false).p == false);
  CHECK(bit_pg(false, false).g == false);
  CHECK(bit_pg(true, true).p == false);
  CHECK(bit_pg(true, true).g == true);
  CHECK(bit_pg(true, false).p == true);
  CHECK(bit_pg(true, false).g == false);
  // p and g are never both set under XOR propagate.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const PgPair s = bit_pg(a != 0, b != 0);
      CHECK_FALSE((s.p && s.g));
    }
}

TEST_CASE("group propagate/generate") {
  std::array<PgPair, 4> all_p{};
  for (auto& s : all_p) s = PgPair{true, false};
  CHECK(group_pg(all_p).pg == true);
  CHECK(group_pg(all_p).gg == false);

  std::array<PgPair, 4> g3{};
  g3[3].g = true;
  CHECK(group_pg(g3).pg == false);
  CHECK(group_pg(g3).gg == true);  // first term of the generate sum

  std::array<PgPair, 4> ripple{};
  ripple[0].g = true;
  ripple[1].p = ripple[2].p = ripple[3].p = true;
  CHECK(group_pg(ripple).pg == false);
  CHECK(group_pg(ripple).gg == true);  // p3 p2 p1 g0 term
}

TEST_CASE("block carries") {
  std::array<PgPair, 4> dead{};
  CHECK(block_carries(dead, true) == std::array<bool, 4>{0, 0, 0, 0});

  std::array<PgPair, 4> all_p{};
  for (auto& s : all_p) s = PgPair{true, false};
  CHECK(block_carries(all_p, true) == std::array<bool, 4>{1, 1, 1, 1});

  std::array<PgPair, 4> gen0{};
  gen0[0].g = true;
  CHECK(block_carries(gen0, false) == std::array<bool, 4>{1, 0, 0, 0});
}

TEST_CASE("c4 equals G_G + P_G c0 on all 512 block inputs") {
  for (int bits = 0; bits < 256; ++bits) {
    std::array<PgPair, 4> s;
    for (int i = 0; i < 4; ++i) {
      s[i].p = (bits >> (2 * i)) & 1;
      s[i].g = (bits >> (2 * i + 1)) & 1;
    }
    for (int c0 = 0; c0 < 2; ++c0) {
      const auto c = block_carries(s, c0 != 0);
      const GroupPg grp = group_pg(s);
      CHECK(c[3] == (grp.gg || (grp.pg && c0 != 0)));
    }
  }
}

TEST_CASE("mcla_add examples") {
  const AddResult r1 = mcla_add(FixedWord(3, 8), FixedWord(5, 8), false);
  CHECK(r1.sum == FixedWord(8, 8));
  CHECK(r1.carry_out == false);

  // 255 + 0 + 1 = 256 as raw patterns: zero sum, carry out.
  const AddResult r2 = mcla_add(FixedWord(-1, 8), FixedWord(0, 8), true);
  CHECK(r2.sum == FixedWord(0, 8));
  CHECK(r2.carry_out == true);

  CHECK_THROWS_AS(mcla_add(FixedWord(0, 8), FixedWord(0, 12), false),
                  ContractError);
}

TEST_CASE("exhaustive equivalence at width 4") {
  int cases = 0;
  for (uint64_t a = 0; a < 16; ++a)
    for (uint64_t b = 0; b < 16; ++b)
      for (int c0 = 0; c0 < 2; ++c0) {
        const auto want = oracle::add_ref(4, a, b, c0 != 0);
        const AddResult got =
            mcla_add(from_pattern(a, 4), from_pattern(b, 4), c0 != 0);
        REQUIRE(got.sum.pattern() == want.sum);
        REQUIRE(got.carry_out == want.cout);
        ++cases;
      }
  CHECK(cases == 512);
}

TEST_CASE("exhaustive equivalence at width 8") {
  int cases = 0;
  for (uint64_t a = 0; a < 256; ++a)
    for (uint64_t b = 0; b < 256; ++b)
      for (int c0 = 0; c0 < 2; ++c0) {
        const auto want = oracle::add_ref(8, a, b, c0 != 0);
        const AddResult got =
            mcla_add(from_pattern(a, 8), from_pattern(b, 8), c0 != 0);
        REQUIRE(got.sum.pattern() == want.sum);
        REQUIRE(got.carry_out == want.cout);
        ++cases;
      }
  CHECK(cases == 131072);
}

TEST_CASE("random equivalence at awkward widths") {
  Rng rng(99);
  for (const int w : {1, 2, 3, 5, 7, 12, 13, 17, 22, 25, 31, 33, 63, 64}) {
    for (int i = 0; i < 20000; ++i) {
      const uint64_t a = rng.next_u64() & width_mask(w);
      const uint64_t b = rng.next_u64() & width_mask(w);
      const bool c0 = (rng.next_u64() & 1) != 0;
      const auto want = oracle::add_ref(w, a, b, c0);
      const AddResult got =
          mcla_add(from_pattern(a, w), from_pattern(b, w), c0);
      REQUIRE(got.sum.pattern() == want.sum);
      REQUIRE(got.carry_out == want.cout);
    }
  }
}

TEST_CASE("a million random triples across widths 12 to 28") {
  Rng rng(101);
  for (int w = 12; w <= 28; ++w) {
    for (int i = 0; i < 60000; ++i) {
      const uint64_t a = rng.next_u64() & width_mask(w);
      const uint64_t b = rng.next_u64() & width_mask(w);
      const bool c0 = (rng.next_u64() & 1) != 0;
      const auto want = oracle::add_ref(w, a, b, c0);
      const AddResult got =
          mcla_add(from_pattern(a, w), from_pattern(b, w), c0);
      REQUIRE(got.sum.pattern() == want.sum);
      REQUIRE(got.carry_out == want.cout);
    }
  }
}

TEST_CASE("mcla_sub is modular subtraction") {
  Rng rng(100);
  for (int i = 0; i < 20000; ++i) {
    const int w = static_cast<int>(rng.uniform_int(1, 64));
    const FixedWord x = from_pattern(rng.next_u64(), w);
    const FixedWord d = from_pattern(rng.next_u64(), w);
    const uint64_t want =
        (static_cast<uint64_t>(x.value()) - static_cast<uint64_t>(d.value())) &
        width_mask(w);
    CHECK(mcla_sub(x, d).pattern() == want);
  }
}
