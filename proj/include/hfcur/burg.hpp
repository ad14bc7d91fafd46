#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "hfcur/signal.hpp"

namespace hfcur {

/// Autoregressive model of a complex time series,
///   s[n] = -sum_{k=1..p} a[k] s[n-k] + eps[n].
///
/// Coefficients are stored so the PSD denominator reads
/// |1 + sum_k a[k] exp(-i*w*k*dt)|^2 with no extra sign flip. Mixing this
/// convention with the opposite one (minus before the sum moved into the
/// coefficients) is the classic cross-library bug; every consumer in this
/// project assumes the form above.
struct ARModel {
  std::vector<std::complex<double>> coeffs;      ///< a[1..p]
  std::vector<std::complex<double>> reflection;  ///< k_1..k_p, |k_m| <= 1
  double innovation_power = 0.0;                 ///< P_eps > 0
  double dt = 0.0;                               ///< s
  bool truncated = false;  ///< recursion stopped early on a near-unit |k_m|

  std::size_t order() const { return coeffs.size(); }
};

/// Burg lattice recursion minimizing combined forward/backward prediction
/// error. Reflection coefficient at stage m:
///   k_m = -2 sum f[n] conj(b[n-1]) / sum(|f[n]|^2 + |b[n-1]|^2)
/// with the Levinson coefficient update and E_m = E_{m-1} (1 - |k_m|^2).
/// If 1 - |k_m|^2 < 1e-12 the recursion stops and the order-(m-1) model is
/// returned with `truncated` set.
ARModel burg_fit(const ComplexTimeSeries& series, std::size_t order);

/// Closed-form AR PSD, values[j] = P_eps * dt / |1 + sum a[k] e^{-i w k dt}|^2,
/// evaluable on any grid inside the Nyquist band.
PowerSpectrum ar_psd(const ARModel& model, std::span<const double> freqs);

/// ar_psd on the uniform two-sided `bins`-point grid, evaluated through one
/// FFT of the zero-padded coefficient polynomial. Identical values to the
/// generic route, O(M log M) instead of O(M p).
PowerSpectrum ar_psd_full_band(const ARModel& model, std::size_t bins);

/// Empirical optimal AR order for a length-n series: floor(n/2).
std::size_t optimal_order(std::size_t n);

}  // namespace hfcur
