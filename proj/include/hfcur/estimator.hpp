#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "hfcur/doppler.hpp"
#include "hfcur/signal.hpp"

namespace hfcur {

/// Quality-control thresholds for a Bragg-line pair.
struct QcPolicy {
  double snr_threshold_db = 12.0;
  double symmetry_tolerance = 0.025;  ///< fraction of f_B
  double max_abs_current = 1.0;       ///< m/s
};

enum class QcReason { none, snr, symmetry, range };

struct QcVerdict {
  bool pass = false;
  QcReason reason = QcReason::none;  ///< first failed check when !pass
};

std::string qc_reason_name(QcReason reason);

/// Result of one Doppler-spectrum current estimation.
struct BraggEstimate {
  double f_plus = 0.0;   ///< Hz, > 0
  double f_minus = 0.0;  ///< Hz, < 0
  double snr_plus_db = 0.0;
  double snr_minus_db = 0.0;
  std::optional<double> u_r;  ///< m/s, present only when qc.pass
  QcVerdict qc;
  SpectralMethod method = SpectralMethod::periodogram;
  bool refined = false;  ///< centroid refinement applied
};

struct PeakPair {
  double f_plus = 0.0;
  double f_minus = 0.0;
};

/// Argmax of the PSD inside the two search windows
/// [+-f_B - df_max, +-f_B + df_max], df_max = current_shift(max_abs_current).
PeakPair find_bragg_peaks(const PowerSpectrum& psd, const RadarConfig& config,
                          const QcPolicy& policy);

/// 10*log10(peak / floor); the floor is the median PSD outside both Bragg
/// search windows plus a guard band of 2*df_max around each.
double estimate_snr(const PowerSpectrum& psd, double peak_freq,
                    const RadarConfig& config, const QcPolicy& policy);

/// Ordered checks: SNR, line symmetry |f+ - f- - 2 f_B| < tol * f_B, implied
/// |U_r| within range. The first failure is reported.
QcVerdict quality_check(double f_plus, double f_minus, double snr_plus_db,
                        double snr_minus_db, const RadarConfig& config,
                        const QcPolicy& policy);

/// Power-weighted mean frequency over +-half_width bins around the peak bin.
/// `clipped` (optional) is set when the neighborhood hits a grid edge.
double centroid_refine(const PowerSpectrum& psd, double peak_freq,
                       std::size_t half_width, bool* clipped = nullptr);

/// U_r = lambda * (f+ + f-) / (4 cos(phi)); both lines carry the same shift,
/// so their average halves the grid-rounding noise.
double radial_current(double f_plus, double f_minus, const RadarConfig& config);

struct EstimateOptions {
  SpectralMethod method = SpectralMethod::ar_mem;
  std::size_t eval_bins = 4096;  ///< AR-MEM evaluation grid (full band)
  std::size_t ar_order = 0;      ///< 0 = optimal_order(n)
  bool centroid = true;          ///< periodogram only
  std::size_t centroid_half_width = 2;
};

/// Full pipeline: PSD by the selected method, peak search, SNR, QC, current
/// conversion. QC failure is the normal rejection path for noisy input.
BraggEstimate estimate_current(const ComplexTimeSeries& series,
                               const RadarConfig& config, const QcPolicy& policy,
                               const EstimateOptions& options = {});

}  // namespace hfcur
