#include "cicsim/fir.hpp"

#include <cmath>

#include "doctest.h"

using namespace cicsim;

namespace {

double db(double x) { return 20.0 * std::log10(x); }

}  // namespace

TEST_CASE("half-band structure") {
  const FirFilter f = design_halfband(0.21, 60.0);
  REQUIRE(f.halfband);
  REQUIRE(f.symmetric);
  const int len = static_cast<int>(f.taps.size());
  CHECK(len % 4 == 3);
  const int c = (len - 1) / 2;
  CHECK(f.taps[c] == doctest::Approx(0.5).epsilon(1e-12));
  for (int m = 2; c + m < len; m += 2) {
    CHECK(f.taps[c + m] == 0.0);
    CHECK(f.taps[c - m] == 0.0);
  }
  for (int m = 1; c + m < len; ++m)
    CHECK(f.taps[c + m] == doctest::Approx(f.taps[c - m]).epsilon(1e-12));
  // End taps are nonzero; the 4k+3 length keeps them on odd offsets.
  CHECK(f.taps.front() != 0.0);
}

TEST_CASE("half-band gains") {
  for (const double fp : {0.05, 0.125, 0.22}) {
    const FirFilter f = design_halfband(fp, 80.0);
    double dc = 0.0;
    for (double t : f.taps) dc += t;
    CHECK(std::abs(dc - 1.0) <= 1e-9);
    CHECK(std::abs(fir_magnitude(f.taps, 0.25) - 0.5) <= 1e-6);
  }
}

TEST_CASE("half-band meets its stopband") {
  const FirFilter f = design_halfband(0.22, 80.0);
  double peak = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double g = 0.28 + (0.5 - 0.28) * i / 2000.0;
    peak = std::max(peak, fir_magnitude(f.taps, g));
  }
  CHECK(db(peak) <= -80.0);
}

TEST_CASE("half-band rejections") {
  CHECK_THROWS_AS(design_halfband(0.3, 80.0), ConfigError);
  CHECK_THROWS_AS(design_halfband(0.0, 80.0), ConfigError);
  CHECK_THROWS_AS(design_halfband(0.21, -5.0), ConfigError);
  // Transition too tight for the 1024-tap guard.
  CHECK_THROWS_AS(design_halfband(0.249, 150.0), ConfigError);
}

TEST_CASE("droop corrector boosts the band edge") {
  const CicParams p{5, 1, 16, 6};
  const double fp = 0.10417;  // 20 kHz at the 192 kHz corrector rate
  const FirFilter f = design_droop_corrector(p, fp, 31);
  REQUIRE(f.symmetric);
  CHECK(static_cast<int>(f.taps.size()) == 31);
  double dc = 0.0;
  for (double t : f.taps) dc += t;
  CHECK(std::abs(dc - 1.0) <= 1e-12);
  // The CIC droops in the passband, so its inverse exceeds 1 at the edge.
  CHECK(fir_magnitude(f.taps, fp) > 1.0);
}

TEST_CASE("corrected passband is flatter than the raw droop") {
  const CicParams p{5, 1, 16, 6};
  const double fp = 0.10417;
  const int ratio = 32;
  const FirFilter f = design_droop_corrector(p, fp, 31);
  const double cic_dc = 1048576.0;

  double worst_dev = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double g = fp * i / 400.0;
    const double cic = frequency_response_mag(p, g / ratio) / cic_dc;
    const double corrected = cic * fir_magnitude(f.taps, g);
    worst_dev = std::max(worst_dev, std::abs(db(corrected)));
  }
  const double raw_droop =
      -db(frequency_response_mag(p, fp / ratio) / cic_dc);
  CHECK(raw_droop > 0.1);         // there is real droop to correct
  CHECK(worst_dev < raw_droop);   // and the corrector beats it
  CHECK(worst_dev < 0.05);
}

TEST_CASE("droop corrector fold-band attenuation") {
  const CicParams p{5, 1, 16, 6};
  const double fp = 0.10417;
  const FirFilter f = design_droop_corrector(p, fp, 31);
  double peak = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double g = (0.5 - fp) + fp * i / 1000.0;
    peak = std::max(peak, fir_magnitude(f.taps, g));
  }
  CHECK(db(peak) <= -80.0);
}

TEST_CASE("corrector approaches identity when there is nothing to correct") {
  // With a huge rate ratio the CIC is flat over the fitted band.
  const CicParams p{5, 1, 16, 6};
  const FirFilter f = design_droop_corrector(p, 0.10417, 31, 4096);
  for (int i = 0; i <= 100; ++i) {
    const double g = 0.10417 * i / 100.0;
    CHECK(std::abs(fir_magnitude(f.taps, g) - 1.0) <= 1e-3);
  }
}

TEST_CASE("droop corrector rejections") {
  const CicParams p{5, 1, 16, 6};
  CHECK_THROWS_AS(design_droop_corrector(p, 0.1, 5), ConfigError);
  CHECK_THROWS_AS(design_droop_corrector(p, 0.1, 14), ConfigError);
  CHECK_THROWS_AS(design_droop_corrector(p, 0.7, 15), ConfigError);
}

TEST_CASE("coefficient quantization") {
  FirFilter f;
  f.taps = {0.5, -0.25, 0.1249999, 0.125};
  const QuantFir q = quantize(f, 3);
  CHECK(q.taps_q == std::vector<int64_t>{4, -2, 1, 1});
  CHECK_THROWS_AS(quantize(f, 0), ConfigError);
  CHECK_THROWS_AS(quantize(f, 31), ConfigError);
  // Round half away from zero.
  FirFilter g;
  g.taps = {0.0625, -0.0625};
  const QuantFir q2 = quantize(g, 3);
  CHECK(q2.taps_q == std::vector<int64_t>{1, -1});
}
