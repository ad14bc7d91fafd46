#pragma once

#include <string>
#include <vector>

#include "hfcur/harness.hpp"

namespace hfcur {

enum class IqFormat { csv, raw_f32 };

/// Fully resolved run configuration; every field has a documented default so
/// an empty config file is valid.
struct RunConfig {
  // [radar]
  RadarConfig radar;  ///< bistatic_angle stored in radians (file uses degrees)

  // [spectrum]
  ReferenceSpectrumSpec spectrum;

  // [estimation]
  SpectralMethod method = SpectralMethod::ar_mem;
  QcPolicy policy;
  std::size_t eval_bins = 4096;
  std::size_t ar_order = 0;  ///< 0 = optimal_order(n)
  std::size_t window_len = 512;
  std::size_t hop = 0;  ///< 0 = window_len
  double fit_lo_cph = 0.5;
  double fit_hi_cph = 6.0;

  // [sweep]
  std::vector<std::size_t> orders = {64, 128, 256, 384, 512, 640, 768, 896};
  std::vector<double> alphas = {0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  double u_r = 0.3;
  double alpha = 1.0;
  std::size_t n_samples = 1024;
  std::size_t grid_ranges = 25;
  std::size_t grid_azimuths = 40;
  double noise_cell_fraction = 0.0;

  // [io]
  std::string input;
  std::string output;
  IqFormat format = IqFormat::csv;

  SimParams sim_params() const;
  EstimateOptions estimate_options() const;
};

/// Parses the line-oriented `key = value` / `[section]` config grammar.
/// Unknown keys, type mismatches and invariant violations raise
/// ConfigParseError naming the key and line.
RunConfig parse_config(const std::string& text);

/// parse_config over a file's contents.
RunConfig load_config(const std::string& path);

/// Serializes a RunConfig back to the config grammar (used verbatim as the
/// `# key = value` reproducibility header of every report).
std::string format_config(const RunConfig& config);

/// IQ readers/writers. csv: header `t,i,q`, dt inferred from the first two
/// rows and checked uniform within 1e-6 relative. raw-f32: little-endian
/// interleaved float32 I,Q pairs, dt supplied by the caller.
ComplexTimeSeries read_iq(const std::string& path, IqFormat format,
                          double raw_dt = 0.26);
void write_iq(const ComplexTimeSeries& series, const std::string& path,
              IqFormat format);

/// Report emission; every file starts with the config header, then typed
/// columns (sweeps: axis,success_rate_pct,nrmse_pct,trials; maps:
/// range_idx,azimuth_idx,u_r,qc,snr_plus,snr_minus; tracks: t_s,u_r,qc;
/// spectra: freq_hz,psd).
void write_report(const SweepReport& report, const RunConfig& config,
                  const std::string& path);
void write_report(const CurrentMap& map, const RunConfig& config,
                  const std::string& path);
void write_report(const CurrentTrack& track, const RunConfig& config,
                  const std::string& path);
void write_report(const PowerSpectrum& spectrum, const RunConfig& config,
                  const std::string& path);

/// Matching readers (round-trip counterpart of write_report).
SweepReport read_sweep_report(const std::string& path);
CurrentMap read_map_report(const std::string& path);
CurrentTrack read_track_report(const std::string& path);
PowerSpectrum read_spectrum_report(const std::string& path);

}  // namespace hfcur
