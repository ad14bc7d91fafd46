#include "hfcur/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hfcur/burg.hpp"
#include "hfcur/errors.hpp"

namespace hfcur {

namespace {

std::size_t nearest_bin(const PowerSpectrum& psd, double freq) {
  const auto it = std::lower_bound(psd.freqs.begin(), psd.freqs.end(), freq);
  if (it == psd.freqs.begin()) return 0;
  if (it == psd.freqs.end()) return psd.freqs.size() - 1;
  const std::size_t hi = static_cast<std::size_t>(it - psd.freqs.begin());
  return (freq - psd.freqs[hi - 1] <= psd.freqs[hi] - freq) ? hi - 1 : hi;
}

// Argmax of psd.values over freqs in [lo, hi].
double window_peak(const PowerSpectrum& psd, double lo, double hi) {
  const auto begin = std::lower_bound(psd.freqs.begin(), psd.freqs.end(), lo);
  const auto end = std::upper_bound(psd.freqs.begin(), psd.freqs.end(), hi);
  const std::size_t i0 = static_cast<std::size_t>(begin - psd.freqs.begin());
  const std::size_t i1 = static_cast<std::size_t>(end - psd.freqs.begin());
  std::size_t best = i0;
  for (std::size_t i = i0 + 1; i < i1; ++i)
    if (psd.values[i] > psd.values[best]) best = i;
  return psd.freqs[best];
}

}  // namespace

std::string qc_reason_name(QcReason reason) {
  switch (reason) {
    case QcReason::none: return "none";
    case QcReason::snr: return "snr";
    case QcReason::symmetry: return "symmetry";
    case QcReason::range: return "range";
  }
  return "none";
}

PeakPair find_bragg_peaks(const PowerSpectrum& psd, const RadarConfig& config,
                          const QcPolicy& policy) {
  const double f_b = bragg_frequency(config);
  const double df_max = current_shift(config, policy.max_abs_current);
  if (psd.freqs.empty() || psd.freqs.front() > -f_b - df_max ||
      psd.freqs.back() < f_b + df_max)
    throw std::invalid_argument("find_bragg_peaks: search windows fall outside grid");
  PeakPair out;
  out.f_plus = window_peak(psd, f_b - df_max, f_b + df_max);
  out.f_minus = window_peak(psd, -f_b - df_max, -f_b + df_max);
  return out;
}

double estimate_snr(const PowerSpectrum& psd, double peak_freq,
                    const RadarConfig& config, const QcPolicy& policy) {
  if (psd.freqs.empty() || peak_freq < psd.freqs.front() ||
      peak_freq > psd.freqs.back())
    throw std::invalid_argument("estimate_snr: peak frequency outside grid");
  const double f_b = bragg_frequency(config);
  const double df_max = current_shift(config, policy.max_abs_current);
  const double exclusion = 3.0 * df_max;  // search window + guard band

  std::vector<double> floor_bins;
  floor_bins.reserve(psd.freqs.size());
  for (std::size_t i = 0; i < psd.freqs.size(); ++i) {
    const double f = psd.freqs[i];
    if (std::abs(f - f_b) <= exclusion || std::abs(f + f_b) <= exclusion) continue;
    floor_bins.push_back(psd.values[i]);
  }
  if (floor_bins.size() < 16)
    throw InsufficientDataError(
        "estimate_snr: fewer than 16 bins left for the noise floor");

  const std::size_t mid = floor_bins.size() / 2;
  std::nth_element(floor_bins.begin(), floor_bins.begin() + mid, floor_bins.end());
  const double floor = floor_bins[mid];
  const double peak = psd.values[nearest_bin(psd, peak_freq)];
  return 10.0 * std::log10(peak / floor);
}

QcVerdict quality_check(double f_plus, double f_minus, double snr_plus_db,
                        double snr_minus_db, const RadarConfig& config,
                        const QcPolicy& policy) {
  const double f_b = bragg_frequency(config);
  if (std::min(snr_plus_db, snr_minus_db) <= policy.snr_threshold_db)
    return {false, QcReason::snr};
  if (std::abs(f_plus - f_minus - 2.0 * f_b) >= policy.symmetry_tolerance * f_b)
    return {false, QcReason::symmetry};
  if (std::abs(radial_current(f_plus, f_minus, config)) > policy.max_abs_current)
    return {false, QcReason::range};
  return {true, QcReason::none};
}

double centroid_refine(const PowerSpectrum& psd, double peak_freq,
                       std::size_t half_width, bool* clipped) {
  if (clipped) *clipped = false;
  if (psd.freqs.empty())
    throw std::invalid_argument("centroid_refine: empty spectrum");
  if (half_width == 0) return peak_freq;

  const std::size_t center = nearest_bin(psd, peak_freq);
  std::size_t lo = center >= half_width ? center - half_width : 0;
  std::size_t hi = std::min(center + half_width, psd.freqs.size() - 1);
  if (clipped && (hi - lo != 2 * half_width)) *clipped = true;

  double weight = 0.0;
  double moment = 0.0;
  for (std::size_t i = lo; i <= hi; ++i) {
    weight += psd.values[i];
    moment += psd.freqs[i] * psd.values[i];
  }
  if (weight <= 0.0) return psd.freqs[center];
  return moment / weight;
}

double radial_current(double f_plus, double f_minus, const RadarConfig& config) {
  if (!std::isfinite(f_plus) || !std::isfinite(f_minus))
    throw std::invalid_argument("radial_current: non-finite peak frequency");
  const double cos_phi = std::cos(config.bistatic_angle);
  if (cos_phi <= 0.0)
    throw std::invalid_argument("radial_current: cos(bistatic angle) must be > 0");
  const double f_c = 0.5 * (f_plus + f_minus);
  return config.wavelength() * f_c / (2.0 * cos_phi);
}

BraggEstimate estimate_current(const ComplexTimeSeries& series,
                               const RadarConfig& config, const QcPolicy& policy,
                               const EstimateOptions& options) {
  PowerSpectrum psd;
  if (options.method == SpectralMethod::periodogram) {
    psd = periodogram(series);
  } else {
    const std::size_t p =
        options.ar_order > 0 ? options.ar_order : optimal_order(series.size());
    const ARModel model = burg_fit(series, p);
    psd = ar_psd_full_band(model, options.eval_bins);
  }

  const PeakPair peaks = find_bragg_peaks(psd, config, policy);
  BraggEstimate est;
  est.method = options.method;
  est.f_plus = peaks.f_plus;
  est.f_minus = peaks.f_minus;
  est.snr_plus_db = estimate_snr(psd, peaks.f_plus, config, policy);
  est.snr_minus_db = estimate_snr(psd, peaks.f_minus, config, policy);

  // AR-MEM grids are fine enough to skip the centroid step.
  if (options.method == SpectralMethod::periodogram && options.centroid &&
      options.centroid_half_width > 0) {
    est.f_plus = centroid_refine(psd, est.f_plus, options.centroid_half_width);
    est.f_minus = centroid_refine(psd, est.f_minus, options.centroid_half_width);
    est.refined = true;
  }

  est.qc = quality_check(est.f_plus, est.f_minus, est.snr_plus_db,
                         est.snr_minus_db, config, policy);
  if (est.qc.pass) est.u_r = radial_current(est.f_plus, est.f_minus, config);
  return est;
}

}  // namespace hfcur
