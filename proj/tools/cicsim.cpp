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

// Command line front end.  Every run is driven by a config file plus
// overriding flags, and identical (config, seed) pairs produce
// byte-identical outputs.
//
// Exit codes: 0 success, 1 contract/config error, 2 I/O error,
// 3 verification failure.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cicsim/chain.hpp"
#include "cicsim/cic.hpp"
#include "cicsim/config.hpp"
#include "cicsim/errors.hpp"
#include "cicsim/kernels.hpp"
#include "cicsim/mcla.hpp"
#include "cicsim/netlist.hpp"
#include "cicsim/rng.hpp"
#include "cicsim/sample_io.hpp"
#include "cicsim/sources.hpp"
#include "cicsim/spectrum.hpp"

namespace {

using namespace cicsim;

struct CommonOpts {
  std::string config_path;
  std::vector<std::string> sets;  // section.key=value overrides

  Config load() const {
    Config cfg;
    if (!config_path.empty()) cfg = Config::from_file(config_path);
    for (const auto& kv : sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw ConfigError("--set expects section.key=value, got '" + kv +
                          "'");
      cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    return cfg;
  }
};

void add_common(CLI::App* cmd, CommonOpts* c) {
  cmd->add_option("-c,--config", c->config_path,
                  "config file of [section] key = value lines");
  cmd->add_option("--set", c->sets,
                  "override a config entry, section.key=value");
}

// On a bin for the default analysis sizes (450 at 2^19-point/6.144 MHz
// and at 4096-point/48 kHz), so leakage exclusion works out of the box.
constexpr double kDefaultSourceFreq = 5273.4375;

CicParams cic_from_config(const Config& cfg) {
  CicParams p;
  p.n = static_cast<int>(cfg.get_int("cic.n", 5));
  p.m = static_cast<int>(cfg.get_int("cic.m", 1));
  p.r = static_cast<int>(cfg.get_int("cic.r", 16));
  p.b_in = static_cast<int>(cfg.get_int("cic.b_in", 6));
  return p;
}

CicDesign design_from_config(const Config& cfg) {
  return design(cic_from_config(cfg), cfg.get_int_list("cic.integrator_widths"),
                cfg.get_int_list("cic.comb_widths"),
                static_cast<int>(cfg.get_int("cic.phase", 0)));
}

ChainSpec chain_spec_from_config(const Config& cfg) {
  ChainSpec s;
  s.cic = cic_from_config(cfg);
  s.fs_in = cfg.get_double("chain.fs_in", 6.144e6);
  s.f_pass = cfg.get_double("chain.f_pass", 20e3);
  s.stop_atten_db = cfg.get_double("chain.stop_atten_db", 80.0);
  s.droop_taps = static_cast<int>(cfg.get_int("chain.droop_taps", 31));
  s.frac_bits = static_cast<int>(cfg.get_int("chain.frac_bits", 16));
  s.integrator_widths = cfg.get_int_list("cic.integrator_widths");
  s.comb_widths = cfg.get_int_list("cic.comb_widths");
  s.decim_phase = static_cast<int>(cfg.get_int("cic.phase", 0));
  return s;
}

// Builds the input stream named by [source]; returns samples plus rate.
struct SourceOut {
  std::vector<FixedWord> samples;
  double fs = 0;
  uint64_t sdm_saturations = 0;
};

SourceOut make_source(const Config& cfg, double fs_default, int width_default) {
  SourceOut out;
  const std::string kind = cfg.get_str("source.kind", "sine");
  const size_t n = static_cast<size_t>(cfg.get_int("source.n", 65536));
  const int width =
      static_cast<int>(cfg.get_int("source.width", width_default));
  out.fs = cfg.get_double("source.fs", fs_default);
  const double amp = cfg.get_double("source.amp", 0.5);
  const double freq = cfg.get_double("source.freq", kDefaultSourceFreq);
  const uint64_t seed =
      static_cast<uint64_t>(cfg.get_int("run.seed", 1));
  if (kind == "sine") {
    out.samples = gen_sine(amp, freq, out.fs, n, width);
  } else if (kind == "impulse") {
    out.samples = gen_impulse(cfg.get_int("source.value", 1), n, width);
  } else if (kind == "dc") {
    out.samples = gen_dc(cfg.get_int("source.value", 1), n, width);
  } else if (kind == "noise") {
    Rng rng(seed);
    out.samples = gen_noise(rng, n, width);
  } else if (kind == "sdm_sine") {
    std::vector<double> drive(n);
    for (size_t k = 0; k < n; ++k)
      drive[k] = amp * std::sin(2.0 * std::numbers::pi * freq / out.fs *
                                static_cast<double>(k));
    SdmState st;
    st.clip_limit = cfg.get_double("source.clip_limit", 8.0);
    out.samples = sdm_modulate(st, drive, width);
    out.sdm_saturations = st.saturations;
  } else {
    throw ConfigError("unknown source.kind '" + kind + "'");
  }
  return out;
}

std::vector<FixedWord> load_or_generate(const Config& cfg,
                                        const std::string& in_path,
                                        double fs_default, int width_needed,
                                        double* fs_out) {
  if (!in_path.empty()) {
    const SampleData d = read_samples(in_path);
    if (d.width != width_needed)
      throw ContractError("input file width " + std::to_string(d.width) +
                          " does not match B_in " +
                          std::to_string(width_needed));
    if (fs_out && d.fs_hz != 0) *fs_out = static_cast<double>(d.fs_hz);
    return d.to_words();
  }
  SourceOut s = make_source(cfg, fs_default, width_needed);
  if (fs_out) *fs_out = s.fs;
  return s.samples;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw IoError("write failed for '" + path + "'");
}

std::string format_widths(const std::vector<int>& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

// ---- design ---------------------------------------------------------------

int cmd_design(const CommonOpts& common, const std::string& out_path) {
  const Config cfg = common.load();
  const CicDesign d = design_from_config(cfg);
  std::ostringstream rep;
  rep << "cic design report\n";
  rep << "n = " << d.params.n << "\n";
  rep << "m = " << d.params.m << "\n";
  rep << "r = " << d.params.r << "\n";
  rep << "b_in = " << d.params.b_in << "\n";
  rep << "g_max = " << d.g_max.str() << "\n";
  rep << "b_max = " << d.b_max << "\n";
  rep << "lossless_width = " << d.b_max + 1 << "\n";
  rep << "integrator_widths = " << format_widths(d.integrator_widths) << "\n";
  rep << "comb_widths = " << format_widths(d.comb_widths) << "\n";
  rep << "output_width = " << d.output_width() << "\n";
  rep << "truncation_error_bound = " << truncation_error_bound(d).str()
      << " output LSB\n";
  std::fputs(rep.str().c_str(), stdout);
  if (!out_path.empty()) write_text(out_path, rep.str());
  return 0;
}

// ---- simulate / chain ------------------------------------------------------

int cmd_simulate(const CommonOpts& common, const std::string& in_path,
                 const std::string& out_path, bool pipelined) {
  const Config cfg = common.load();
  const CicDesign d = design_from_config(cfg);
  double fs = cfg.get_double("chain.fs_in", 6.144e6);
  const std::vector<FixedWord> in =
      load_or_generate(cfg, in_path, fs, d.params.b_in, &fs);
  CicState st = make_state(d, pipelined);
  const std::vector<FixedWord> out =
      pipelined ? process_pipelined(d, st, in) : process(d, st, in);
  if (!out_path.empty())
    write_samples(out_path, d.output_width(),
                  static_cast<uint64_t>(fs / d.params.r), out);
  std::printf("input_samples = %zu\n", in.size());
  std::printf("output_samples = %zu\n", out.size());
  std::printf("pipelined = %d\n", pipelined ? 1 : 0);
  std::printf("truncation_events = %" PRIu64 "\n", st.truncation_events);
  return 0;
}

int cmd_chain(const CommonOpts& common, const std::string& in_path,
              const std::string& out_path) {
  const Config cfg = common.load();
  const ChainConfig chain = design_chain(chain_spec_from_config(cfg));
  double fs = chain.fs_in;
  const std::vector<FixedWord> in =
      load_or_generate(cfg, in_path, fs, chain.cic.params.b_in, &fs);
  const std::vector<FixedWord> out = chain_process(chain, in);
  if (!out_path.empty())
    write_samples(out_path, chain.output_width(),
                  static_cast<uint64_t>(chain.output_rate()), out);
  std::printf("input_samples = %zu\n", in.size());
  std::printf("output_samples = %zu\n", out.size());
  std::printf("rate_reduction = %d\n", chain.cic.params.r * 8);
  std::printf("output_width = %d\n", chain.output_width());
  std::printf("hb1_taps = %zu\n", chain.hb1.taps.size());
  std::printf("droop_taps = %zu\n", chain.droop.taps.size());
  std::printf("hb2_taps = %zu\n", chain.hb2.taps.size());
  return 0;
}

// ---- response ---------------------------------------------------------------

int cmd_response(const CommonOpts& common, const std::string& mode,
                 const std::string& out_path, int points, double f_max) {
  const Config cfg = common.load();
  if (points < 2) throw ConfigError("response grid needs at least 2 points");
  if (out_path.empty()) throw ConfigError("response requires --out");
  if (mode == "cic") {
    const CicParams p = cic_from_config(cfg);
    const double fs = cfg.get_double("chain.fs_in", 6.144e6);
    const double fmax = f_max > 0 ? f_max : fs / 2;
    if (fmax > fs / 2) throw ContractError("grid extends beyond fs/2");
    std::vector<double> freqs(points), norm(points);
    for (int i = 0; i < points; ++i) {
      freqs[i] = fmax * i / (points - 1);
      norm[i] = freqs[i] / fs;
    }
    const std::vector<double> db = cic_response_db(p, norm);
    export_csv(out_path, freqs, db);
  } else if (mode == "chain") {
    const ChainConfig chain = design_chain(chain_spec_from_config(cfg));
    const double fmax = f_max > 0 ? f_max : chain.fs_in / 2;
    std::vector<double> freqs(points);
    for (int i = 0; i < points; ++i) freqs[i] = fmax * i / (points - 1);
    const std::vector<double> db = chain_response_db(chain, freqs);
    export_csv(out_path, freqs, db);
  } else {
    throw ConfigError("response mode must be 'cic' or 'chain'");
  }
  std::printf("wrote %s (%d points)\n", out_path.c_str(), points);
  return 0;
}

// ---- snr --------------------------------------------------------------------

Window window_from_config(const Config& cfg) {
  const std::string w = cfg.get_str("snr.window", "hann");
  if (w == "hann") return Window::kHann;
  if (w == "rectangular") return Window::kRectangular;
  throw ConfigError("snr.window must be 'hann' or 'rectangular'");
}

int cmd_snr(const CommonOpts& common, const std::string& out_dir) {
  const Config cfg = common.load();
  const bool use_chain = cfg.get_int("snr.chain", 1) != 0;
  const int leakage = static_cast<int>(cfg.get_int("snr.leakage_bins", 3));
  const Window window = window_from_config(cfg);

  std::ostringstream rep;
  const std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
  if (!out_dir.empty()) std::filesystem::create_directories(dir);

  if (!use_chain) {
    const double fs = cfg.get_double("source.fs", 6.144e6);
    SourceOut src = make_source(cfg, fs, 16);
    const size_t fft_n =
        static_cast<size_t>(cfg.get_int("snr.fft", 16384));
    if (src.samples.size() < fft_n)
      throw ConfigError("source.n shorter than snr.fft");
    std::vector<double> x(fft_n);
    for (size_t i = 0; i < fft_n; ++i)
      x[i] = static_cast<double>(src.samples[i].value());
    const int w = src.samples.front().width();
    const Spectrum spec =
        spectrum(x, src.fs, window,
                 static_cast<double>(FixedWord::max_value(w)));
    const double f_sig = cfg.get_double("source.freq", kDefaultSourceFreq);
    const double lo = cfg.get_double("snr.f_lo", 0.0);
    const double hi = cfg.get_double("snr.f_hi", src.fs / 2);
    const double snr = measure_snr(spec, f_sig, lo, hi, leakage);
    export_csv((dir / "spectrum.csv").string(), spec.bin_freqs, spec.mags_db);
    rep << "window = " << window_name(window) << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", snr);
    rep << "snr_db = " << buf << "\n";
  } else {
    const ChainConfig chain = design_chain(chain_spec_from_config(cfg));
    double fs = chain.fs_in;
    const SourceOut src = make_source(cfg, fs, chain.cic.params.b_in);
    const size_t fft_before =
        static_cast<size_t>(cfg.get_int("snr.fft_before", 1 << 19));
    const size_t fft_after =
        static_cast<size_t>(cfg.get_int("snr.fft_after", 4096));
    if (src.samples.size() < fft_before)
      throw ConfigError("source.n shorter than snr.fft_before");

    const std::vector<FixedWord> out = chain_process(chain, src.samples);
    if (out.size() < fft_after)
      throw ConfigError("chain output shorter than snr.fft_after; raise "
                        "source.n");

    // Steady-state windows from the tail of both streams.
    std::vector<double> before(fft_before), after(fft_after);
    const size_t ob = src.samples.size() - fft_before;
    for (size_t i = 0; i < fft_before; ++i)
      before[i] = static_cast<double>(src.samples[ob + i].value());
    const size_t oa = out.size() - fft_after;
    for (size_t i = 0; i < fft_after; ++i)
      after[i] = static_cast<double>(out[oa + i].value());

    const Spectrum spec_before = spectrum(
        before, chain.fs_in, window,
        static_cast<double>(FixedWord::max_value(chain.cic.params.b_in)));
    // Input-referred full scale at the chain output: one input LSB appears
    // as the composite DC gain over the dropped LSBs.
    const double out_full =
        static_cast<double>(FixedWord::max_value(chain.cic.params.b_in)) *
        std::pow(static_cast<double>(chain.cic.params.r) * chain.cic.params.m,
                 chain.cic.params.n) /
        std::pow(2.0, chain.cic.dropped_bits());
    const Spectrum spec_after =
        spectrum(after, chain.output_rate(), window, out_full);

    // Measure at the same frequency the source generates.
    const double f_sig = cfg.get_double("source.freq", kDefaultSourceFreq);
    const double lo = cfg.get_double("snr.f_lo", 0.0);
    const double hi = cfg.get_double("snr.f_hi", 20e3);
    const double snr_before =
        measure_snr(spec_before, f_sig, lo, hi, leakage);
    const double snr_after = measure_snr(spec_after, f_sig, lo, hi, leakage);

    export_csv((dir / "before.csv").string(), spec_before.bin_freqs,
               spec_before.mags_db);
    export_csv((dir / "after.csv").string(), spec_after.bin_freqs,
               spec_after.mags_db);
    char b[64], a[64], d[64];
    std::snprintf(b, sizeof b, "%.2f", snr_before);
    std::snprintf(a, sizeof a, "%.2f", snr_after);
    std::snprintf(d, sizeof d, "%.2f", snr_after - snr_before);
    rep << "window = " << window_name(window) << "\n";
    rep << "band_hz = " << lo << ".." << hi << "\n";
    rep << "signal_hz = " << f_sig << "\n";
    rep << "snr_before_db = " << b << "\n";
    rep << "snr_after_db = " << a << "\n";
    rep << "snr_delta_db = " << d << "\n";
    rep << "sdm_saturations = " << src.sdm_saturations << "\n";
  }
  write_text((dir / "report.txt").string(), rep.str());
  std::fputs(rep.str().c_str(), stdout);
  return 0;
}

// ---- adder-verify / netlist --------------------------------------------------

int cmd_adder_verify(int width, const std::string& mode, uint64_t count,
                     uint64_t seed) {
  SweepResult r;
  if (mode == "exhaustive") {
    if (width > 10)
      throw ConfigError("exhaustive mode is capped at width 10");
    r = mcla_sweep_exhaustive(width);
  } else if (mode == "random") {
    r = mcla_sweep_random(width, count, seed);
  } else {
    throw ConfigError("mode must be 'exhaustive' or 'random'");
  }
  std::printf("width = %d\n", width);
  std::printf("mode = %s\n", mode.c_str());
  std::printf("cases = %" PRIu64 "\n", r.cases);
  std::printf("mismatches = %" PRIu64 "\n", r.mismatches);
  if (r.mismatches != 0) {
    std::printf("example: a=%" PRIu64 " b=%" PRIu64 " c0=%d\n", r.example_a,
                r.example_b, r.example_c0 ? 1 : 0);
    throw VerifyError("adder sweep found mismatches");
  }
  std::printf("result = pass\n");
  return 0;
}

int cmd_netlist(int width, const std::string& out_path, uint64_t seed) {
  const Netlist nl = emit_mcla_netlist(width);
  const NetlistEval ev(nl);
  // Self-check against the behavioral adder before anything is written.
  for (int i = 0; i < 10000; ++i) {
    const uint64_t a = splitmix64(seed + 2 * i) & width_mask(width);
    const uint64_t b = splitmix64(seed + 2 * i + 1) & width_mask(width);
    const bool c0 = (splitmix64(seed + 0x10000 + i) & 1) != 0;
    const auto got = eval_adder_netlist(ev, width, a, b, c0);
    const AddResult want =
        mcla_add(from_pattern(a, width), from_pattern(b, width), c0);
    if (got.sum != want.sum.pattern() || got.cout != want.carry_out)
      throw VerifyError("netlist disagrees with the adder model");
  }
  write_text(out_path, netlist_to_text(nl));
  std::printf("wrote %s (%zu gates, %d-bit)\n", out_path.c_str(),
              nl.gates.size(), width);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bit-accurate CIC decimation chain simulator and designer"};
  app.require_subcommand(1);

  CommonOpts c_design, c_sim, c_chain, c_resp, c_snr;
  std::string out_path, in_path, mode = "cic";
  bool pipelined = false;
  int points = 1024;
  double f_max = 0.0;

  auto* sc_design = app.add_subcommand("design", "register sizing report");
  add_common(sc_design, &c_design);
  sc_design->add_option("-o,--out", out_path, "also write the report here");

  auto* sc_sim = app.add_subcommand("simulate", "run the CIC filter");
  add_common(sc_sim, &c_sim);
  std::string sim_in, sim_out;
  sc_sim->add_option("-i,--in", sim_in, "input sample file");
  sc_sim->add_option("-o,--out", sim_out, "output sample file");
  sc_sim->add_flag("--pipelined", pipelined, "pipelined integrator cascade");

  auto* sc_chain =
      app.add_subcommand("chain", "run the full four-stage chain");
  add_common(sc_chain, &c_chain);
  std::string chain_in, chain_out;
  sc_chain->add_option("-i,--in", chain_in, "input sample file");
  sc_chain->add_option("-o,--out", chain_out, "output sample file");

  auto* sc_resp =
      app.add_subcommand("response", "frequency response CSV export");
  add_common(sc_resp, &c_resp);
  std::string resp_out;
  sc_resp->add_option("--mode", mode, "cic or chain")->capture_default_str();
  sc_resp->add_option("-o,--out", resp_out, "CSV path")->required();
  sc_resp->add_option("--points", points, "grid size")
      ->capture_default_str();
  sc_resp->add_option("--f-max", f_max, "grid upper edge in Hz (default fs/2)");

  auto* sc_snr = app.add_subcommand("snr", "SNR measurement run");
  add_common(sc_snr, &c_snr);
  std::string snr_dir;
  sc_snr->add_option("-o,--out-dir", snr_dir, "output directory");

  auto* sc_adder =
      app.add_subcommand("adder-verify", "adder equivalence sweep");
  int adder_width = 8;
  std::string adder_mode = "exhaustive";
  uint64_t adder_count = 1000000, adder_seed = 1;
  sc_adder->add_option("--width", adder_width, "operand width")
      ->capture_default_str();
  sc_adder->add_option("--mode", adder_mode, "exhaustive or random")
      ->capture_default_str();
  sc_adder->add_option("--count", adder_count, "random case count")
      ->capture_default_str();
  sc_adder->add_option("--seed", adder_seed, "sweep seed")
      ->capture_default_str();

  auto* sc_net = app.add_subcommand("netlist", "emit the adder netlist");
  int net_width = 8;
  uint64_t net_seed = 1;
  std::string net_out;
  sc_net->add_option("--width", net_width, "adder width (multiple of 4)")
      ->capture_default_str();
  sc_net->add_option("-o,--out", net_out, "netlist path")->required();
  sc_net->add_option("--seed", net_seed, "self-check seed")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    if (sc_design->parsed()) return cmd_design(c_design, out_path);
    if (sc_sim->parsed()) return cmd_simulate(c_sim, sim_in, sim_out, pipelined);
    if (sc_chain->parsed()) return cmd_chain(c_chain, chain_in, chain_out);
    if (sc_resp->parsed())
      return cmd_response(c_resp, mode, resp_out, points, f_max);
    if (sc_snr->parsed()) return cmd_snr(c_snr, snr_dir);
    if (sc_adder->parsed())
      return cmd_adder_verify(adder_width, adder_mode, adder_count,
                              adder_seed);
    if (sc_net->parsed()) return cmd_netlist(net_width, net_out, net_seed);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 2;
  } catch (const VerifyError& e) {
    std::fprintf(stderr, "verification failed: %s\n", e.what());
    return 3;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const ContractError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
