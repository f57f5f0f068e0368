#include "cicsim/fixed_point.hpp"

#include "cicsim/rng.hpp"
#include "doctest.h"

using namespace cicsim;

namespace {

// Independent floor-division oracle for the truncation semantics.
int64_t floor_div(int64_t a, int64_t d) {
  int64_t q = a / d;
  if (a % d != 0 && ((a < 0) != (d < 0))) --q;
  return q;
}

}  // namespace

TEST_CASE("wrap basics") {
  CHECK(wrap(0, 8).value() == 0);
  CHECK(wrap(128, 8).value() == -128);  // two's-complement boundary
  // 16^5 = 2^20 reduces to zero modulo 2^20.
  int64_t p = 1;
  for (int i = 0; i < 5; ++i) p *= 16;
  CHECK(wrap(p, 20).value() == 0);
  CHECK(wrap(255, 8).value() == -1);
  CHECK(wrap(-129, 8).value() == 127);
}

TEST_CASE("wrap of an in-range value is the identity") {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const int w = static_cast<int>(rng.uniform_int(1, 64));
    const int64_t v =
        rng.uniform_int(FixedWord::min_value(w), FixedWord::max_value(w));
    CHECK(wrap(v, w).value() == v);
    CHECK(wrap(v, w).width() == w);
  }
}

TEST_CASE("wrap periodicity") {
  Rng rng(12);
  for (int i = 0; i < 2000; ++i) {
    const int w = static_cast<int>(rng.uniform_int(1, 40));
    const int64_t v = rng.uniform_int(-(int64_t{1} << 45), int64_t{1} << 45);
    CHECK(wrap(v + (int64_t{1} << w), w) == wrap(v, w));
    CHECK(wrap(v - (int64_t{1} << w), w) == wrap(v, w));
  }
}

TEST_CASE("wrap rejects bad widths") {
  CHECK_THROWS_AS(wrap(0, 0), ConfigError);
  CHECK_THROWS_AS(wrap(0, 65), ConfigError);
  CHECK_THROWS_AS(wrap(0, -3), ConfigError);
}

TEST_CASE("add_wrap basics") {
  CHECK(add_wrap(FixedWord(3, 8), FixedWord(5, 8)).value() == 8);
  CHECK(add_wrap(FixedWord(127, 8), FixedWord(1, 8)).value() == -128);
  CHECK(add_wrap(FixedWord(-1, 25), FixedWord(1, 25)).value() == 0);
  CHECK_THROWS_AS(add_wrap(FixedWord(1, 8), FixedWord(1, 9)), ContractError);
}

TEST_CASE("add_wrap at the 64-bit cap") {
  const FixedWord max64(INT64_MAX, 64);
  const FixedWord one(1, 64);
  CHECK(add_wrap(max64, one).value() == INT64_MIN);
  CHECK(add_wrap(FixedWord(-1, 64), one).value() == 0);
}

TEST_CASE("add_wrap associativity and commutativity") {
  Rng rng(13);
  for (int i = 0; i < 2000; ++i) {
    const int w = static_cast<int>(rng.uniform_int(1, 64));
    const auto rnd = [&] {
      return wrap(static_cast<int64_t>(rng.next_u64()), w);
    };
    const FixedWord a = rnd(), b = rnd(), c = rnd();
    CHECK(add_wrap(add_wrap(a, b), c) == add_wrap(a, add_wrap(b, c)));
    CHECK(add_wrap(a, b) == add_wrap(b, a));
  }
}

TEST_CASE("truncate_lsb examples") {
  const FixedWord x(1234, 25);
  CHECK(truncate_lsb(x, 25) == x);  // no-op
  CHECK(truncate_lsb(FixedWord(13, 5), 3).value() == 3);   // floor(13/4)
  CHECK(truncate_lsb(FixedWord(-1, 8), 4).value() == -1);  // floor(-1/16)
  CHECK(truncate_lsb(FixedWord(-1, 8), 4).width() == 4);
  CHECK_THROWS_AS(truncate_lsb(FixedWord(1, 4), 8), ContractError);
}

TEST_CASE("truncate_lsb is floor division, exhaustive to width 10") {
  for (int w = 1; w <= 10; ++w) {
    for (int64_t v = FixedWord::min_value(w); v <= FixedWord::max_value(w);
         ++v) {
      for (int wn = 1; wn <= w; ++wn) {
        const FixedWord t = truncate_lsb(FixedWord(v, w), wn);
        CHECK(t.value() == floor_div(v, int64_t{1} << (w - wn)));
        // The discarded amount is in [0, 2^drop) in input LSB units.
        const int64_t e = v - (t.value() << (w - wn));
        CHECK(e >= 0);
        CHECK(e < (int64_t{1} << (w - wn)));
      }
    }
  }
}

TEST_CASE("resize_extend") {
  CHECK(resize_extend(FixedWord(-1, 6), 25) == FixedWord(-1, 25));
  CHECK(resize_extend(FixedWord(31, 6), 25) == FixedWord(31, 25));
  const FixedWord x(-17, 9);
  CHECK(resize_extend(x, 9) == x);
  CHECK_THROWS_AS(resize_extend(FixedWord(1, 9), 4), ContractError);
}

TEST_CASE("extension round trips") {
  Rng rng(14);
  for (int i = 0; i < 2000; ++i) {
    const int w = static_cast<int>(rng.uniform_int(1, 60));
    const int wn = static_cast<int>(rng.uniform_int(w, 64));
    const FixedWord a = wrap(static_cast<int64_t>(rng.next_u64()), w);
    const FixedWord ext = resize_extend(a, wn);
    CHECK(ext.value() == a.value());
    // Narrowing an extended word back to its original width recovers it.
    CHECK(wrap(ext.value(), w) == a);
    // Truncation after extension stays plain floor division.
    CHECK(truncate_lsb(ext, w).value() ==
          (a.value() >> (wn - w)));
  }
}

TEST_CASE("construction enforces the range invariant") {
  CHECK_THROWS_AS(FixedWord(128, 8), ContractError);
  CHECK_THROWS_AS(FixedWord(-129, 8), ContractError);
  CHECK(FixedWord(-128, 8).value() == -128);
  CHECK(FixedWord(127, 8).value() == 127);
}
