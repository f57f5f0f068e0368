#include "cicsim/cic.hpp"

#include <cmath>

#include "cicsim/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cicsim;

namespace {

const CicParams kPaper{5, 1, 16, 6};

std::vector<int64_t> taps_i64(const CicParams& p) {
  std::vector<int64_t> h;
  for (const BigInt& c : impulse_response(p))
    h.push_back(static_cast<int64_t>(c));
  return h;
}

std::vector<FixedWord> random_stream(Rng& rng, size_t n, int width) {
  std::vector<FixedWord> v;
  v.reserve(n);
  for (size_t i = 0; i < n; ++i)
    v.emplace_back(rng.uniform_int(FixedWord::min_value(width),
                                   FixedWord::max_value(width)),
                   width);
  return v;
}

}  // namespace

TEST_CASE("register growth") {
  CHECK(register_growth(kPaper) == 1048576);
  CHECK(register_growth(CicParams{1, 1, 2, 1}) == 2);
  CHECK(register_growth(CicParams{3, 2, 4, 1}) == 512);
  // Against repeated multiplication in unbounded integers.
  Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    CicParams p;
    p.n = static_cast<int>(rng.uniform_int(1, 6));
    p.m = static_cast<int>(rng.uniform_int(1, 3));
    p.r = static_cast<int>(rng.uniform_int(2, 32));
    p.b_in = 4;
    oracle::BigInt want = 1;
    for (int k = 0; k < p.n; ++k) want *= oracle::BigInt(p.r) * p.m;
    CHECK(register_growth(p).str() == want.str());
  }
}

TEST_CASE("output msb") {
  CHECK(output_msb(kPaper) == 25);
  CHECK(output_msb(CicParams{5, 1, 16, 1}) == 20);
  CHECK(output_msb(CicParams{1, 1, 2, 1}) == 1);
  CHECK(output_msb(CicParams{1, 1, 2, 4}) == 4);
  // Power-of-two RM reproduces N log2(RM) + B_in - 1 exactly.
  for (int n = 1; n <= 6; ++n)
    for (int b = 1; b <= 8; ++b)
      CHECK(output_msb(CicParams{n, 1, 8, b}) == 3 * n + b - 1);
}

TEST_CASE("design fills sizing and schedules") {
  const CicDesign d =
      design(kPaper, std::vector<int>{25, 22, 20, 18, 16},
             std::vector<int>{16, 16, 16, 16, 16});
  CHECK(d.g_max == 1048576);
  CHECK(d.b_max == 25);
  CHECK(d.integrator_widths == std::vector<int>{25, 22, 20, 18, 16});
  CHECK(d.comb_widths == std::vector<int>{16, 16, 16, 16, 16});
  CHECK(d.output_width() == 16);
  CHECK(d.dropped_bits() == 9);
  CHECK(d.truncating());

  // Default schedule is uniform at the lossless width b_max + 1.
  const CicDesign full = design(CicParams{1, 1, 2, 4});
  CHECK(full.b_max == 4);
  CHECK(full.integrator_widths == std::vector<int>{5});
  CHECK(full.comb_widths == std::vector<int>{5});
  CHECK_FALSE(full.truncating());
}

TEST_CASE("design rejections") {
  CHECK_THROWS_AS(design(CicParams{1, 1, 1, 4}), ConfigError);  // R >= 2
  CHECK_THROWS_AS(design(CicParams{0, 1, 2, 4}), ConfigError);
  CHECK_THROWS_AS(design(CicParams{1, 0, 2, 4}), ConfigError);
  CHECK_THROWS_AS(design(CicParams{1, 1, 2, 0}), ConfigError);
  // Non-increasing schedule violated.
  CHECK_THROWS_AS(design(CicParams{2, 1, 2, 4}, std::vector<int>{10, 12}),
                  ConfigError);
  // First entry below b_max would cut MSBs.
  CHECK_THROWS_AS(design(kPaper, std::vector<int>{24, 22, 20, 18, 16}),
                  ConfigError);
  // Wrong schedule length.
  CHECK_THROWS_AS(design(kPaper, std::vector<int>{25, 22}), ConfigError);
  // Comb wider than the last integrator.
  CHECK_THROWS_AS(design(kPaper, std::vector<int>{25, 22, 20, 18, 16},
                         std::vector<int>{17, 16, 16, 16, 16}),
                  ConfigError);
  CHECK_THROWS_AS(design(kPaper, std::nullopt, std::nullopt, 16),
                  ConfigError);  // phase out of range
}

TEST_CASE("impulse response") {
  const auto h1 = impulse_response(CicParams{1, 1, 4, 1});
  CHECK(h1 == std::vector<BigInt>{1, 1, 1, 1});
  const auto h2 = impulse_response(CicParams{2, 1, 2, 1});
  CHECK(h2 == std::vector<BigInt>{1, 2, 1});
  BigInt sum = 0;
  for (const auto& c : impulse_response(kPaper)) sum += c;
  CHECK(sum == 1048576);  // DC gain equals the bound at z = 1

  // Length identity N(RM-1)+1 and the three-way DC gain agreement.
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    CicParams p;
    p.n = static_cast<int>(rng.uniform_int(1, 4));
    p.m = static_cast<int>(rng.uniform_int(1, 2));
    p.r = static_cast<int>(rng.uniform_int(2, 8));
    p.b_in = 1;
    const auto h = impulse_response(p);
    CHECK(static_cast<int>(h.size()) == p.n * (p.r * p.m - 1) + 1);
    BigInt s = 0;
    for (const auto& c : h) s += c;
    CHECK(s == register_growth(p));
    CHECK(frequency_response_mag(p, 0.0) ==
          doctest::Approx(static_cast<double>(s)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(impulse_response(CicParams{1 << 12, 1, 1 << 10, 1}),
                  ConfigError);  // expansion guard
}

TEST_CASE("frequency response closed form vs polynomial sum") {
  const auto h = impulse_response(kPaper);
  CHECK(frequency_response_mag(kPaper, 0.0) == 1048576.0);
  // Nulls at multiples of 1/16.
  for (int k = 1; k <= 7; ++k) {
    const double mag = frequency_response_mag(kPaper, k / 16.0);
    CHECK(mag <= 1e-9 * 1048576.0);
  }
  // 348 kHz at a 6.144 MHz input rate.
  const double f348 = 348e3 / 6.144e6;
  const double got = frequency_response_mag(kPaper, f348);
  const double want = oracle::polynomial_mag_ref(h, f348);
  CHECK(std::abs(got - want) <= 1e-9 * want);

  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const double f = 0.5 * rng.uniform_double();
    const double a = frequency_response_mag(kPaper, f);
    const double b = oracle::polynomial_mag_ref(h, f);
    REQUIRE(std::abs(a - b) <= 1e-9 * std::max(a, b));
  }
  // Same agreement across a family of small configurations.
  for (const auto& p : {CicParams{1, 1, 2, 1}, CicParams{2, 2, 3, 1},
                        CicParams{3, 1, 5, 1}, CicParams{4, 2, 8, 1}}) {
    const auto hp = impulse_response(p);
    for (int i = 0; i < 100; ++i) {
      const double f = 0.5 * rng.uniform_double();
      const double a = frequency_response_mag(p, f);
      const double b = oracle::polynomial_mag_ref(hp, f);
      REQUIRE(std::abs(a - b) <= 1e-9 * std::max(a, b));
    }
  }
  CHECK_THROWS_AS(frequency_response_mag(kPaper, 0.6), ContractError);
  CHECK_THROWS_AS(frequency_response_mag(kPaper, -0.1), ContractError);
}

TEST_CASE("zero input gives zero output") {
  const CicDesign d = design(kPaper, std::vector<int>{25, 22, 20, 18, 16},
                             std::vector<int>{16, 16, 16, 16, 16});
  CicState st = make_state(d);
  const std::vector<FixedWord> in(320, FixedWord(0, 6));
  for (const FixedWord& y : process(d, st, in)) CHECK(y.value() == 0);
  CHECK(st.truncation_events == 0);
}

TEST_CASE("unit impulse reproduces the impulse response, all phases") {
  const CicParams p{3, 1, 4, 4};
  const auto h = taps_i64(p);
  for (int phase = 0; phase < p.r; ++phase) {
    const CicDesign d = design(p, std::nullopt, std::nullopt, phase);
    CicState st = make_state(d);
    std::vector<FixedWord> in(64, FixedWord(0, 4));
    in[0] = FixedWord(1, 4);
    const auto out = process(d, st, in);
    const auto want = oracle::fir_decimate_ref(h, in, p.r, phase);
    REQUIRE(out.size() == want.size());
    for (size_t i = 0; i < out.size(); ++i)
      REQUIRE(out[i].value() == want[i]);
  }
}

TEST_CASE("full-width process equals the FIR oracle on every phase") {
  // Every decimation phase of a few small configurations.
  Rng rng0(50);
  for (const auto& p :
       {CicParams{2, 2, 6, 5}, CicParams{4, 1, 3, 6}, CicParams{3, 2, 8, 4}}) {
    const auto in = random_stream(rng0, 3000, p.b_in);
    const auto h = taps_i64(p);
    for (int phase = 0; phase < p.r; ++phase) {
      const CicDesign d = design(p, std::nullopt, std::nullopt, phase);
      CicState st = make_state(d);
      const auto out = process(d, st, in);
      const auto want = oracle::fir_decimate_ref(h, in, p.r, phase);
      REQUIRE(out.size() == want.size());
      for (size_t i = 0; i < out.size(); ++i)
        REQUIRE(out[i].value() == want[i]);
    }
  }

  Rng rng(51);
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 2; ++m)
      for (const int r : {2, 5, 8})
        for (const int b_in : {1, 4, 6})
          for (const int phase : {0, r - 1}) {
            const CicParams p{n, m, r, b_in};
            const CicDesign d = design(p, std::nullopt, std::nullopt, phase);
            CicState st = make_state(d);
            const auto in = random_stream(rng, 2000, b_in);
            const auto out = process(d, st, in);
            const auto want =
                oracle::fir_decimate_ref(taps_i64(p), in, r, phase);
            REQUIRE(out.size() == want.size());
            for (size_t i = 0; i < out.size(); ++i)
              REQUIRE(out[i].value() == want[i]);
          }
}

TEST_CASE("equivalence holds while accumulators wrap") {
  // A long run makes every integrator accumulator wrap many times.
  const CicDesign d = design(kPaper);
  CicState st = make_state(d);
  Rng rng(52);
  const auto in = random_stream(rng, 20000, 6);
  const auto out = process(d, st, in);
  const auto want = oracle::fir_decimate_ref(taps_i64(kPaper), in, 16, 0);
  REQUIRE(out.size() == want.size());
  for (size_t i = 0; i < out.size(); ++i)
    REQUIRE(out[i].value() == want[i]);
}

TEST_CASE("process linearity in the full-width configuration") {
  const CicParams p{3, 1, 8, 6};
  const CicDesign d = design(p);
  Rng rng(53);
  std::vector<FixedWord> x, x3;
  for (int i = 0; i < 4000; ++i) {
    const int64_t v = rng.uniform_int(-10, 10);
    x.emplace_back(v, 6);
    x3.emplace_back(3 * v, 6);
  }
  CicState s1 = make_state(d), s2 = make_state(d);
  const auto y = process(d, s1, x);
  const auto y3 = process(d, s2, x3);
  for (size_t i = 0; i < y.size(); ++i)
    CHECK(y3[i].value() == 3 * y[i].value());
}

TEST_CASE("input width must match B_in") {
  const CicDesign d = design(kPaper);
  CicState st = make_state(d);
  const std::vector<FixedWord> bad(4, FixedWord(0, 5));
  CHECK_THROWS_AS(process(d, st, bad), ContractError);
  CicState plain = make_state(d, false);
  const std::vector<FixedWord> in(4, FixedWord(0, 6));
  CHECK_THROWS_AS(process_pipelined(d, plain, in), ContractError);
}

TEST_CASE("pipelined equals plain with an N-1 zero prepend") {
  Rng rng(61);
  for (const auto& p :
       {kPaper, CicParams{3, 2, 4, 4}, CicParams{2, 1, 2, 6},
        CicParams{4, 1, 8, 5}}) {
    const CicDesign d = design(p);
    const auto in = random_stream(rng, 5000, p.b_in);
    CicState sp = make_state(d, true);
    const auto piped = process_pipelined(d, sp, in);

    std::vector<FixedWord> pre(p.n - 1, FixedWord(0, p.b_in));
    pre.insert(pre.end(), in.begin(), in.end());
    CicState sn = make_state(d);
    const auto plain = process(d, sn, pre);

    REQUIRE(plain.size() >= piped.size());
    REQUIRE(plain.size() - piped.size() <= 1);
    for (size_t i = 0; i < piped.size(); ++i) REQUIRE(piped[i] == plain[i]);
  }
}

TEST_CASE("pipelined zero stream is zero") {
  const CicDesign d = design(kPaper, std::vector<int>{25, 22, 20, 18, 16},
                             std::vector<int>{16, 16, 16, 16, 16});
  CicState st = make_state(d, true);
  const std::vector<FixedWord> in(160, FixedWord(0, 6));
  for (const FixedWord& y : process_pipelined(d, st, in))
    CHECK(y.value() == 0);
}

TEST_CASE("truncation error bound") {
  CHECK(truncation_error_bound(design(kPaper)) == 0);

  // One site dropping one bit at the final comb output.
  const CicParams p{2, 1, 4, 4};
  const CicDesign full = design(p);
  const int fw = full.integrator_widths.front();
  const CicDesign one_site =
      design(p, std::vector<int>{fw, fw}, std::vector<int>{fw, fw - 1});
  CHECK(truncation_error_bound(one_site) == 1);
}

TEST_CASE("empirical truncation error stays under the bound") {
  const CicDesign trunc =
      design(kPaper, std::vector<int>{25, 22, 20, 18, 16},
             std::vector<int>{16, 16, 16, 16, 16});
  const CicDesign full = design(kPaper);
  const BigInt bound = truncation_error_bound(trunc);
  CHECK(bound > 0);

  Rng rng(71);
  const auto in = random_stream(rng, 100000, 6);
  CicState s1 = make_state(trunc), s2 = make_state(full);
  const auto yt = process(trunc, s1, in);
  const auto yf = process(full, s2, in);
  REQUIRE(yt.size() == yf.size());
  const int scale_bits = trunc.dropped_bits();
  BigInt max_err = 0;
  for (size_t i = 0; i < yt.size(); ++i) {
    BigInt err = (BigInt(yt[i].value()) << scale_bits) - yf[i].value();
    if (err < 0) err = -err;
    max_err = std::max(max_err, err);
  }
  // Errors are in output LSB units of the truncated path.
  CHECK(max_err <= bound << scale_bits);
  CHECK(s1.truncation_events > 0);
}

TEST_CASE("enlarging a schedule entry never worsens the observed error") {
  const std::vector<std::vector<int>> schedules = {
      {25, 21, 19, 17, 16},
      {25, 22, 20, 18, 16},
      {25, 23, 21, 19, 17},
      {26, 26, 26, 26, 26},
  };
  const CicDesign full = design(kPaper);
  Rng rng(72);
  const auto in = random_stream(rng, 50000, 6);
  CicState sf = make_state(full);
  const auto yf = process(full, sf, in);

  BigInt prev = -1;
  bool first = true;
  for (const auto& sched : schedules) {
    const CicDesign d =
        design(kPaper, sched, std::vector<int>(5, sched.back()));
    CicState st = make_state(d);
    const auto yt = process(d, st, in);
    BigInt max_err = 0;
    for (size_t i = 0; i < yt.size(); ++i) {
      BigInt err =
          (BigInt(yt[i].value()) << d.dropped_bits()) - yf[i].value();
      if (err < 0) err = -err;
      max_err = std::max(max_err, err);
    }
    if (!first) CHECK(max_err <= prev);
    prev = max_err;
    first = false;
  }
  CHECK(prev == 0);  // the widest schedule is the lossless one
}

TEST_CASE("state must come from make_state") {
  const CicDesign d = design(kPaper);
  CicState st;  // wrong shape
  const std::vector<FixedWord> in(4, FixedWord(0, 6));
  CHECK_THROWS_AS(process(d, st, in), ContractError);
}
