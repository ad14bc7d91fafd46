#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hfcur {

/// Uniformly sampled complex (I/Q) voltage sequence.
struct ComplexTimeSeries {
  std::vector<std::complex<double>> samples;
  double dt = 0.0;  ///< sampling interval, s
  double t0 = 0.0;  ///< start time, s

  std::size_t size() const { return samples.size(); }
  double duration() const { return static_cast<double>(samples.size()) * dt; }
};

enum class SpectralMethod { periodogram, ar_mem };

/// Two-sided power spectral density on an ascending frequency grid.
struct PowerSpectrum {
  std::vector<double> freqs;   ///< Hz, strictly increasing
  std::vector<double> values;  ///< (voltage^2)/Hz, nonnegative
  SpectralMethod estimator = SpectralMethod::periodogram;
};

/// 4-term minimum-sidelobe Blackman-Harris window,
/// w[k] = a0 - a1*cos(2*pi*k/(n-1)) + a2*cos(4*pi*k/(n-1)) - a3*cos(6*pi*k/(n-1)).
/// n == 1 degenerates to [1.0].
std::vector<double> blackman_harris_window(std::size_t n);

/// All-ones window of length n.
std::vector<double> rectangular_window(std::size_t n);

/// n-point two-sided grid with spacing 1/(n*dt), ascending from -1/(2*dt).
std::vector<double> full_band_grid(std::size_t n, double dt);

/// Windowed FFT estimate of the PSD on the two-sided n-point grid
/// (or pad_to-point grid when pad_to > n; zero-padding interpolates the grid
/// without adding information). The default window is Blackman-Harris.
/// Normalized so that sum(values)*df equals the windowed mean power; the
/// window power mean(w^2) is compensated.
PowerSpectrum periodogram(const ComplexTimeSeries& series,
                          std::span<const double> window = {},
                          std::size_t pad_to = 0);

}  // namespace hfcur
