#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hfcur/doppler.hpp"
#include "hfcur/estimator.hpp"
#include "hfcur/signal.hpp"

namespace hfcur {

/// Worker-thread cap for the Monte-Carlo loops (0 = hardware concurrency).
/// Results are assembled by index, so the thread count never changes them.
void set_max_threads(unsigned count);
unsigned max_threads();

/// Shared inputs of one synthetic simulation: radar constants, reference
/// spectrum shape, injected current, sample count and noise model.
struct SimParams {
  RadarConfig radar;
  ReferenceSpectrumSpec spectrum;
  double u_r = 0.3;            ///< m/s
  std::size_t n_samples = 1024;
  double alpha = 1.0;          ///< noise level, 1 = 0 dB SNR
  NoiseSource noise;           ///< seed field is overridden per trial
  QcPolicy policy;
  std::size_t eval_bins = 4096;  ///< AR-MEM evaluation grid
};

/// Per-axis-value Monte-Carlo outcome of a parameter sweep.
struct SweepReport {
  std::vector<double> axis;
  std::vector<double> success_rate_pct;  ///< % of trials passing QC
  std::vector<double> nrmse_pct;         ///< % of |U_r|, over passing trials
  std::size_t trials = 0;
  SpectralMethod method = SpectralMethod::ar_mem;
};

/// QC success rate and nRMSE vs forced AR order; `trials` independent
/// synthesize -> add_noise -> estimate pipelines per order, paired across
/// orders through shared per-trial seeds.
SweepReport order_sweep(const SimParams& params, std::span<const std::size_t> orders,
                        std::size_t trials, std::uint64_t seed);

/// Success rate vs noise level for both methods (periodogram first, AR-MEM
/// second), paired through shared per-trial signal and noise seeds.
std::pair<SweepReport, SweepReport> noise_sweep(const SimParams& params,
                                                std::span<const double> alphas,
                                                std::size_t trials,
                                                std::uint64_t seed);

struct GridCell {
  std::size_t range_idx = 0;
  std::size_t azimuth_idx = 0;
  ComplexTimeSeries series;
};

struct CurrentMap {
  struct Cell {
    std::size_t range_idx = 0;
    std::size_t azimuth_idx = 0;
    BraggEstimate estimate;
  };
  std::vector<Cell> cells;
  double coverage_pct = 0.0;  ///< 100 * (# QC pass) / (# cells)
};

/// Independent per-cell current estimation with coverage accounting.
/// All cells must share the same dt.
CurrentMap estimate_grid(std::span<const GridCell> cells, const RadarConfig& config,
                         const QcPolicy& policy, const EstimateOptions& options);

/// Synthetic ranges x azimuths grid sharing one injected current; the first
/// floor(noise_cell_fraction * total) cells carry pure noise instead of signal.
std::vector<GridCell> synthesize_grid(const SimParams& params, std::size_t ranges,
                                      std::size_t azimuths,
                                      double noise_cell_fraction,
                                      std::uint64_t seed);

/// Sliding-window current time series; missing entries mark QC failures.
struct CurrentTrack {
  std::vector<double> times;  ///< s, window centers, strictly increasing
  std::vector<std::optional<double>> u_r;
  std::vector<QcReason> qc_reason;  ///< none for passing windows
  std::size_t window_len = 0;
  std::size_t hop = 0;
  SpectralMethod method = SpectralMethod::ar_mem;
};

/// Splits the series into windows (hop = 0 means non-overlapping) and
/// estimates the current per window.
CurrentTrack track_current(const ComplexTimeSeries& series, std::size_t window_len,
                           std::size_t hop, const RadarConfig& config,
                           const QcPolicy& policy, const EstimateOptions& options);

struct SlopeFit {
  PowerSpectrum spectrum;  ///< PSD of the u_r sequence
  double slope = 0.0;      ///< fitted exponent gamma of P(f) ~ f^gamma
  double slope_stderr = 0.0;
};

/// PSD of the track's current sequence (gaps linearly interpolated,
/// Blackman-Harris periodogram) and least-squares log-log slope over
/// [fit_lo, fit_hi], in cycles per hour.
SlopeFit fluctuation_spectrum(const CurrentTrack& track, double fit_lo_cph,
                              double fit_hi_cph);

}  // namespace hfcur
