#include "hfcur/burg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hfcur/errors.hpp"
#include "hfcur/fft.hpp"

namespace hfcur {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

ARModel burg_fit(const ComplexTimeSeries& series, std::size_t order) {
  const std::size_t n = series.samples.size();
  if (n == 0) throw std::invalid_argument("burg_fit: empty series");
  if (series.dt <= 0.0) throw std::invalid_argument("burg_fit: dt must be > 0");
  if (order >= n)
    throw std::invalid_argument("burg_fit: order must be smaller than sample count");

  double mean_power = 0.0;
  for (const auto& s : series.samples) mean_power += std::norm(s);
  mean_power /= static_cast<double>(n);
  if (mean_power == 0.0)
    throw DegenerateInputError("burg_fit: zero-power input series");

  ARModel model;
  model.dt = series.dt;
  model.innovation_power = mean_power;
  model.coeffs.reserve(order);
  model.reflection.reserve(order);

  std::vector<std::complex<double>> fwd(series.samples);
  std::vector<std::complex<double>> bwd(series.samples);

  for (std::size_t m = 1; m <= order; ++m) {
    std::complex<double> num(0.0, 0.0);
    double den = 0.0;
    for (std::size_t i = m; i < n; ++i) {
      num += fwd[i] * std::conj(bwd[i - 1]);
      den += std::norm(fwd[i]) + std::norm(bwd[i - 1]);
    }
    if (!(den > mean_power * 1e-280))
      throw NumericalError("burg_fit: degenerate denominator at stage " +
                           std::to_string(m));
    const std::complex<double> k = -2.0 * num / den;
    if (1.0 - std::norm(k) < 1e-12) {
      model.truncated = true;
      break;
    }

    // Levinson step: a_m[j] = a_{m-1}[j] + k * conj(a_{m-1}[m-j]), a_m[m] = k.
    std::vector<std::complex<double>> next(m);
    for (std::size_t j = 1; j < m; ++j)
      next[j - 1] = model.coeffs[j - 1] + k * std::conj(model.coeffs[m - j - 1]);
    next[m - 1] = k;
    model.coeffs = std::move(next);
    model.reflection.push_back(k);
    model.innovation_power *= 1.0 - std::norm(k);

    // Downward so bwd[i-1] is still the stage-(m-1) value when read.
    for (std::size_t i = n - 1; i >= m; --i) {
      const std::complex<double> f = fwd[i];
      const std::complex<double> b = bwd[i - 1];
      fwd[i] = f + k * b;
      bwd[i] = b + std::conj(k) * f;
    }
  }
  return model;
}

PowerSpectrum ar_psd(const ARModel& model, std::span<const double> freqs) {
  if (model.dt <= 0.0) throw std::invalid_argument("ar_psd: model dt must be > 0");
  if (model.innovation_power <= 0.0)
    throw std::invalid_argument("ar_psd: innovation power must be > 0");
  const double nyquist = 0.5 / model.dt;
  for (double f : freqs)
    if (std::abs(f) > nyquist * (1.0 + 1e-12))
      throw std::invalid_argument("ar_psd: frequency outside the Nyquist band");

  const std::size_t p = model.order();
  PowerSpectrum out;
  out.estimator = SpectralMethod::ar_mem;
  out.freqs.assign(freqs.begin(), freqs.end());
  out.values.resize(freqs.size());
  const double scale = model.innovation_power * model.dt;
  for (std::size_t j = 0; j < freqs.size(); ++j) {
    const double ang = -kTwoPi * freqs[j] * model.dt;
    const std::complex<double> z(std::cos(ang), std::sin(ang));
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t k = p; k >= 1; --k) acc = (acc + model.coeffs[k - 1]) * z;
    acc += 1.0;
    out.values[j] = scale / std::norm(acc);
  }
  return out;
}

PowerSpectrum ar_psd_full_band(const ARModel& model, std::size_t bins) {
  if (model.dt <= 0.0)
    throw std::invalid_argument("ar_psd_full_band: model dt must be > 0");
  const std::size_t p = model.order();
  if (bins < p + 1)
    throw std::invalid_argument("ar_psd_full_band: need bins >= order + 1");

  // On the shifted grid f_j = (j - neg)/(bins*dt) the denominator polynomial
  // becomes a plain DFT of a[k] * exp(2*pi*i*neg*k/bins).
  const std::size_t neg = bins / 2;
  std::vector<std::complex<double>> poly(bins, std::complex<double>(0.0, 0.0));
  poly[0] = 1.0;
  for (std::size_t k = 1; k <= p; ++k) {
    const double ang = kTwoPi * static_cast<double>((neg * k) % bins) /
                       static_cast<double>(bins);
    poly[k] = model.coeffs[k - 1] * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  fft::forward(poly);

  PowerSpectrum out;
  out.estimator = SpectralMethod::ar_mem;
  out.freqs = full_band_grid(bins, model.dt);
  out.values.resize(bins);
  const double scale = model.innovation_power * model.dt;
  for (std::size_t j = 0; j < bins; ++j) out.values[j] = scale / std::norm(poly[j]);
  return out;
}

std::size_t optimal_order(std::size_t n) {
  if (n < 4) throw std::invalid_argument("optimal_order: need at least 4 samples");
  return n / 2;
}

}  // namespace hfcur
