#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hfcur/errors.hpp"
#include "hfcur/io.hpp"
#include "hfcur/rng.hpp"

namespace {

using namespace hfcur;

std::string with_suffix(const std::string& path, const std::string& suffix) {
  const auto dot = path.find_last_of('.');
  const auto slash = path.find_last_of("/\\");
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

PowerSpectrum reference_spectrum(const RunConfig& cfg) {
  const double df = 1.0 / (static_cast<double>(cfg.n_samples) * cfg.radar.dt);
  const auto grid = full_band_grid(cfg.n_samples, cfg.radar.dt);
  return build_reference_spectrum(cfg.spectrum.resolved(df), cfg.radar, grid);
}

ComplexTimeSeries simulate_series(const RunConfig& cfg) {
  const PowerSpectrum sigma0 = reference_spectrum(cfg);
  ComplexTimeSeries s0 = synthesize_signal(sigma0, cfg.radar, cfg.u_r,
                                           cfg.n_samples, mix_seed(cfg.seed, 0));
  NoiseSource noise;
  noise.seed = mix_seed(cfg.seed, 1);
  return add_noise(s0, noise, cfg.alpha);
}

std::string require(const std::string& value, const char* what) {
  if (value.empty())
    throw ConfigParseError(std::string(what) +
                           " is required (flag or [io] config section)");
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HF radar surface current estimation (FFT and AR-MEM methods)"};
  app.require_subcommand(1);

  std::string config_path, out_path, in_path, method_str;
  std::optional<std::uint64_t> seed_flag;
  std::optional<std::size_t> n_flag;
  std::optional<double> alpha_flag, ur_flag;
  unsigned threads = 0;

  app.add_option("--config", config_path, "Run configuration file");
  app.add_option("--out", out_path, "Output file path");
  app.add_option("--in", in_path, "Input file path");
  app.add_option("--method", method_str, "Spectral method: fft or armem");
  app.add_option("--seed", seed_flag, "Master RNG seed");
  app.add_option("--n", n_flag, "Sample count");
  app.add_option("--alpha", alpha_flag, "Noise level (1 = 0 dB SNR)");
  app.add_option("--ur", ur_flag, "Injected radial current, m/s");
  app.add_option("--threads", threads, "Worker threads (0 = hardware)");
  app.fallthrough();

  auto* cmd_simulate =
      app.add_subcommand("simulate", "Emit a synthetic IQ time series");
  auto* cmd_estimate =
      app.add_subcommand("estimate", "Estimate the current from one IQ series");
  auto* cmd_sweep_order =
      app.add_subcommand("sweep-order", "QC success / nRMSE vs AR order");
  auto* cmd_sweep_noise =
      app.add_subcommand("sweep-noise", "QC success vs noise level, both methods");
  auto* cmd_map = app.add_subcommand("map", "Per-cell estimation over a grid");
  auto* cmd_track =
      app.add_subcommand("track", "Sliding-window current time series");
  auto* cmd_spectrum =
      app.add_subcommand("spectrum", "Fluctuation spectrum and power-law slope");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (seed_flag) cfg.seed = *seed_flag;
    if (n_flag) cfg.n_samples = *n_flag;
    if (alpha_flag) cfg.alpha = *alpha_flag;
    if (ur_flag) cfg.u_r = *ur_flag;
    if (!out_path.empty()) cfg.output = out_path;
    if (!in_path.empty()) cfg.input = in_path;
    if (!method_str.empty()) {
      if (method_str == "fft")
        cfg.method = SpectralMethod::periodogram;
      else if (method_str == "armem")
        cfg.method = SpectralMethod::ar_mem;
      else
        throw ConfigParseError("--method must be fft or armem");
    }
    set_max_threads(threads);

    if (cmd_simulate->parsed()) {
      const ComplexTimeSeries series = simulate_series(cfg);
      write_iq(series, require(cfg.output, "output path"), cfg.format);
    } else if (cmd_estimate->parsed()) {
      ComplexTimeSeries series =
          read_iq(require(cfg.input, "input path"), cfg.format, cfg.radar.dt);
      if (n_flag && *n_flag < series.size()) series.samples.resize(*n_flag);
      const BraggEstimate est =
          estimate_current(series, cfg.radar, cfg.policy, cfg.estimate_options());
      std::cout << "method=" << (est.method == SpectralMethod::periodogram
                                     ? "fft"
                                     : "armem")
                << " f_plus=" << num(est.f_plus) << " f_minus=" << num(est.f_minus)
                << " snr_plus_db=" << num(est.snr_plus_db)
                << " snr_minus_db=" << num(est.snr_minus_db)
                << " qc=" << (est.qc.pass ? "pass" : qc_reason_name(est.qc.reason));
      if (est.u_r) std::cout << " u_r=" << num(*est.u_r);
      std::cout << "\n";
    } else if (cmd_sweep_order->parsed()) {
      const SweepReport report =
          order_sweep(cfg.sim_params(), cfg.orders, cfg.trials, cfg.seed);
      write_report(report, cfg, require(cfg.output, "output path"));
    } else if (cmd_sweep_noise->parsed()) {
      const auto [fft_report, armem_report] =
          noise_sweep(cfg.sim_params(), cfg.alphas, cfg.trials, cfg.seed);
      const std::string out = require(cfg.output, "output path");
      write_report(fft_report, cfg, with_suffix(out, ".fft"));
      write_report(armem_report, cfg, with_suffix(out, ".armem"));
    } else if (cmd_map->parsed()) {
      const auto cells =
          synthesize_grid(cfg.sim_params(), cfg.grid_ranges, cfg.grid_azimuths,
                          cfg.noise_cell_fraction, cfg.seed);
      const CurrentMap map =
          estimate_grid(cells, cfg.radar, cfg.policy, cfg.estimate_options());
      write_report(map, cfg, require(cfg.output, "output path"));
      std::cout << "coverage_pct=" << num(map.coverage_pct) << "\n";
    } else if (cmd_track->parsed()) {
      const ComplexTimeSeries series =
          read_iq(require(cfg.input, "input path"), cfg.format, cfg.radar.dt);
      const CurrentTrack track =
          track_current(series, cfg.window_len, cfg.hop, cfg.radar, cfg.policy,
                        cfg.estimate_options());
      write_report(track, cfg, require(cfg.output, "output path"));
    } else if (cmd_spectrum->parsed()) {
      const CurrentTrack track = read_track_report(require(cfg.input, "input path"));
      const SlopeFit fit =
          fluctuation_spectrum(track, cfg.fit_lo_cph, cfg.fit_hi_cph);
      write_report(fit.spectrum, cfg, require(cfg.output, "output path"));
      std::cout << "slope=" << num(fit.slope)
                << " slope_stderr=" << num(fit.slope_stderr) << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
