#include "hfcur/signal.hpp"

#include <cmath>
#include <stdexcept>

#include "hfcur/fft.hpp"

namespace hfcur {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

std::vector<double> blackman_harris_window(std::size_t n) {
  if (n == 0) throw std::invalid_argument("blackman_harris_window: n must be >= 1");
  // Standard 4-term minimum-sidelobe coefficients.
  constexpr double a0 = 0.35875;
  constexpr double a1 = 0.48829;
  constexpr double a2 = 0.14128;
  constexpr double a3 = 0.01168;
  if (n == 1) return {1.0};
  std::vector<double> w(n);
  const double step = kTwoPi / static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = step * static_cast<double>(k);
    w[k] = a0 - a1 * std::cos(x) + a2 * std::cos(2.0 * x) - a3 * std::cos(3.0 * x);
  }
  return w;
}

std::vector<double> rectangular_window(std::size_t n) {
  if (n == 0) throw std::invalid_argument("rectangular_window: n must be >= 1");
  return std::vector<double>(n, 1.0);
}

std::vector<double> full_band_grid(std::size_t n, double dt) {
  if (n == 0 || dt <= 0.0)
    throw std::invalid_argument("full_band_grid: need n >= 1 and dt > 0");
  std::vector<double> freqs(n);
  const std::size_t neg = n / 2;
  const double df = 1.0 / (static_cast<double>(n) * dt);
  for (std::size_t j = 0; j < n; ++j)
    freqs[j] = (static_cast<double>(j) - static_cast<double>(neg)) * df;
  return freqs;
}

PowerSpectrum periodogram(const ComplexTimeSeries& series,
                          std::span<const double> window, std::size_t pad_to) {
  const std::size_t n = series.samples.size();
  if (n == 0) throw std::invalid_argument("periodogram: empty series");
  if (series.dt <= 0.0) throw std::invalid_argument("periodogram: dt must be > 0");

  std::vector<double> default_window;
  if (window.empty()) {
    default_window = blackman_harris_window(n);
    window = default_window;
  }
  if (window.size() != n)
    throw std::invalid_argument("periodogram: window/series length mismatch");

  const std::size_t m = pad_to > n ? pad_to : n;
  std::vector<std::complex<double>> buf(m, std::complex<double>(0.0, 0.0));
  double w2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    buf[i] = series.samples[i] * window[i];
    w2 += window[i] * window[i];
  }
  w2 /= static_cast<double>(n);
  fft::forward(buf);

  PowerSpectrum out;
  out.estimator = SpectralMethod::periodogram;
  out.freqs = full_band_grid(m, series.dt);
  out.values.resize(m);
  const double scale = series.dt / (static_cast<double>(n) * w2);
  const std::size_t neg = m / 2;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t k = (j + m - neg) % m;
    out.values[j] = std::norm(buf[k]) * scale;
  }
  return out;
}

}  // namespace hfcur
