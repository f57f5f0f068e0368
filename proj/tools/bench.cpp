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

// Compares the OpenMP kernels against their serial references: wall time
// and result equality.  The parallel versions must be bit-identical, so
// any nonzero diff is a bug, not noise.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cicsim/fir.hpp"
#include "cicsim/kernels.hpp"
#include "cicsim/rng.hpp"

using namespace cicsim;

namespace {

double now_s() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch())
      .count();
}

template <typename F>
double time_best_of(int reps, F&& fn) {
  double best = 1e30;
  for (int i = 0; i < reps; ++i) {
    const double t0 = now_s();
    fn();
    best = std::min(best, now_s() - t0);
  }
  return best;
}

void report(const char* name, double serial_s, double omp_s, bool equal) {
  std::printf("%-24s serial %9.3f ms   omp %9.3f ms   speedup %5.2fx   %s\n",
              name, serial_s * 1e3, omp_s * 1e3, serial_s / omp_s,
              equal ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp; both columns run serial code\n");
#endif

  // Decimating FIR on a million 16-bit samples.
  {
    FirFilter hb = design_halfband(0.21, 80.0);
    QuantFir q = quantize(hb, 16);
    Rng rng(7);
    std::vector<int64_t> in(1 << 20);
    for (auto& v : in) v = rng.uniform_int(-32768, 32767);
    std::vector<int64_t> a, b;
    const double ts = time_best_of(3, [&] { a = fir_decimate_ref(q, in, 2, 16); });
    const double tp = time_best_of(3, [&] { b = fir_decimate(q, in, 2, 16); });
    report("fir_decimate", ts, tp, a == b);
  }

  // CIC closed-form response on a dense grid.
  {
    CicParams p{5, 1, 16, 6};
    std::vector<double> freqs(1 << 19);
    for (size_t i = 0; i < freqs.size(); ++i)
      freqs[i] = 0.5 * static_cast<double>(i) / (freqs.size() - 1);
    std::vector<double> a, b;
    const double ts = time_best_of(3, [&] { a = cic_response_db_ref(p, freqs); });
    const double tp = time_best_of(3, [&] { b = cic_response_db(p, freqs); });
    report("cic_response_db", ts, tp, a == b);
  }

  // Random adder equivalence sweep at the widest stage width.
  {
    SweepResult a{}, b{};
    const double ts = time_best_of(3, [&] { a = mcla_sweep_random_ref(25, 1 << 20, 42); });
    const double tp = time_best_of(3, [&] { b = mcla_sweep_random(25, 1 << 20, 42); });
    report("mcla_sweep_random", ts, tp,
           a.cases == b.cases && a.mismatches == b.mismatches);
  }
  return 0;
}
