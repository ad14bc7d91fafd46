#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "hfcur/signal.hpp"

namespace hfcur {

/// Radar carrier / geometry constants.
struct RadarConfig {
  double carrier_freq = 16.15e6;  ///< Hz
  double bistatic_angle = 0.0;    ///< radians, half the Tx-cell-Rx angle, in [0, pi/2)
  double dt = 0.26;               ///< sampling interval, s
  double gravity = 9.81;          ///< m/s^2

  double wavelength() const { return 299792458.0 / carrier_freq; }
};

/// Bragg resonance frequency f_B = sqrt(g*cos(phi)/(pi*lambda)), Hz.
double bragg_frequency(const RadarConfig& config);

/// Doppler shift of both Bragg lines for radial current u_r:
/// f_c = (2*u_r/lambda)*cos(phi), Hz.
double current_shift(const RadarConfig& config, double u_r);

/// One Gaussian second-order feature, placed at (+f_B + offset) and
/// (-f_B + offset) relative to the respective line amplitude.
struct SpectrumBump {
  double offset_hz = 0.0;
  double width_hz = 0.0;
  double level_db = 0.0;  ///< relative to the surrounding Bragg line, < 0
};

/// Parametric stand-in for the second-order sea Doppler spectrum: two
/// finite-width first-order lines at +-f_B, Gaussian bumps for the swell /
/// wind-wave / hydrodynamic peaks, and a flat continuum.
struct ReferenceSpectrumSpec {
  double bragg_amplitude_pos = 0.04;  ///< +f_B line, ~14 dB below the negative line
  double bragg_amplitude_neg = 1.0;
  double line_width = 0.0;  ///< Hz (Gaussian sigma); 0 = auto, a 2-grid-bin line
  std::vector<SpectrumBump> bumps;
  double continuum_db = -45.0;  ///< relative to the strongest Bragg line

  /// Copy with default bumps filled in and line_width resolved against the
  /// target grid step.
  ReferenceSpectrumSpec resolved(double grid_step) const;
};

/// Additive noise model: seeded Gaussian white noise or a recorded sample
/// bank recycled circularly from a seeded start offset. Both are normalized
/// to unit variance before scaling.
struct NoiseSource {
  enum class Kind { gaussian_white, file_samples };
  Kind kind = Kind::gaussian_white;
  std::vector<std::complex<double>> samples;  ///< used when kind == file_samples
  std::uint64_t seed = 0;
};

/// Reference Doppler spectrum sigma_0 on the given grid, normalized to unit
/// total power. The grid must cover both +-f_B.
PowerSpectrum build_reference_spectrum(const ReferenceSpectrumSpec& spec,
                                       const RadarConfig& config,
                                       std::span<const double> grid);

/// Random stationary realization with prescribed spectrum,
///   s0(t) = sum_j sqrt(sigma0(w_j)) exp(i(w_j + w_c) t) exp(i phi_j),
/// with i.i.d. uniform phases phi_j drawn from `seed` and the output
/// normalized to unit variance. sigma0 must live on the n-point two-sided
/// grid with spacing 1/(n*dt).
ComplexTimeSeries synthesize_signal(const PowerSpectrum& sigma0,
                                    const RadarConfig& config, double u_r,
                                    std::size_t n_samples, std::uint64_t seed);

/// s(t) = s0(t) + alpha * n(t) with unit-variance noise; alpha = 1 is the
/// SNR = 0 dB convention.
ComplexTimeSeries add_noise(const ComplexTimeSeries& signal,
                            const NoiseSource& noise, double alpha);

}  // namespace hfcur
