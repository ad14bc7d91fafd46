#include "hfcur/doppler.hpp"

#include <cmath>
#include <stdexcept>

#include "hfcur/errors.hpp"
#include "hfcur/fft.hpp"
#include "hfcur/rng.hpp"

namespace hfcur {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

void validate(const RadarConfig& config) {
  if (config.carrier_freq <= 0.0)
    throw std::invalid_argument("radar config: carrier frequency must be > 0");
  if (std::cos(config.bistatic_angle) <= 0.0)
    throw std::invalid_argument("radar config: cos(bistatic angle) must be > 0");
  if (config.dt <= 0.0) throw std::invalid_argument("radar config: dt must be > 0");
}
}  // namespace

double bragg_frequency(const RadarConfig& config) {
  validate(config);
  return std::sqrt(config.gravity * std::cos(config.bistatic_angle) /
                   (kPi * config.wavelength()));
}

double current_shift(const RadarConfig& config, double u_r) {
  validate(config);
  return 2.0 * u_r / config.wavelength() * std::cos(config.bistatic_angle);
}

ReferenceSpectrumSpec ReferenceSpectrumSpec::resolved(double grid_step) const {
  ReferenceSpectrumSpec out = *this;
  // A line spanning ~2 grid bins end to end: sigma of half a bin keeps the
  // +-2 sigma extent inside two bins.
  if (out.line_width <= 0.0) out.line_width = 0.5 * grid_step;
  if (out.bumps.empty()) {
    // Swell / wind-wave / hydrodynamic stand-ins flanking each Bragg line.
    out.bumps = {{-0.12, 0.008, -20.0},
                 {-0.05, 0.006, -25.0},
                 {0.05, 0.006, -30.0},
                 {0.12, 0.008, -35.0}};
  }
  return out;
}

PowerSpectrum build_reference_spectrum(const ReferenceSpectrumSpec& spec,
                                       const RadarConfig& config,
                                       std::span<const double> grid) {
  validate(config);
  if (grid.size() < 2)
    throw std::invalid_argument("build_reference_spectrum: grid too small");
  if (spec.line_width <= 0.0)
    throw std::invalid_argument("build_reference_spectrum: line width must be > 0");
  const double f_b = bragg_frequency(config);
  if (grid.front() > -f_b || grid.back() < f_b)
    throw std::invalid_argument(
        "build_reference_spectrum: grid does not cover both Bragg lines");

  PowerSpectrum out;
  out.estimator = SpectralMethod::periodogram;
  out.freqs.assign(grid.begin(), grid.end());
  out.values.assign(grid.size(), 0.0);

  auto add_gaussian = [&](double center, double amplitude, double sigma) {
    for (std::size_t j = 0; j < out.freqs.size(); ++j) {
      const double x = (out.freqs[j] - center) / sigma;
      out.values[j] += amplitude * std::exp(-0.5 * x * x);
    }
  };

  add_gaussian(+f_b, spec.bragg_amplitude_pos, spec.line_width);
  add_gaussian(-f_b, spec.bragg_amplitude_neg, spec.line_width);
  for (const auto& bump : spec.bumps) {
    if (bump.level_db >= 0.0)
      throw std::invalid_argument(
          "build_reference_spectrum: bump levels must be below the lines");
    if (bump.width_hz <= 0.0)
      throw std::invalid_argument("build_reference_spectrum: bump width must be > 0");
    const double rel = std::pow(10.0, bump.level_db / 10.0);
    add_gaussian(+f_b + bump.offset_hz, spec.bragg_amplitude_pos * rel, bump.width_hz);
    add_gaussian(-f_b + bump.offset_hz, spec.bragg_amplitude_neg * rel, bump.width_hz);
  }
  const double peak = std::max(spec.bragg_amplitude_pos, spec.bragg_amplitude_neg);
  const double floor = peak * std::pow(10.0, spec.continuum_db / 10.0);
  for (auto& v : out.values) v += floor;

  const double df = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
  double total = 0.0;
  for (double v : out.values) total += v;
  total *= df;
  for (auto& v : out.values) v /= total;
  return out;
}

ComplexTimeSeries synthesize_signal(const PowerSpectrum& sigma0,
                                    const RadarConfig& config, double u_r,
                                    std::size_t n_samples, std::uint64_t seed) {
  validate(config);
  const std::size_t n = n_samples;
  if (n == 0) throw std::invalid_argument("synthesize_signal: need n_samples >= 1");
  if (sigma0.freqs.size() != n)
    throw std::invalid_argument("synthesize_signal: spectrum grid size != n_samples");
  const double df = 1.0 / (static_cast<double>(n) * config.dt);
  if (n > 1) {
    const double got = sigma0.freqs[1] - sigma0.freqs[0];
    if (std::abs(got - df) > 1e-9 * df)
      throw std::invalid_argument(
          "synthesize_signal: spectrum grid spacing does not match 1/(n*dt)");
  }

  // Independent phases drawn in ascending-frequency order; amplitudes follow
  // the prescribed spectrum, the overall scale is fixed afterwards by the
  // unit-variance normalization.
  Rng rng(seed);
  const std::size_t neg = n / 2;
  std::vector<std::complex<double>> spectrum(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double phase = rng.uniform(0.0, kTwoPi);
    const std::size_t k = (j + n - neg) % n;
    spectrum[k] = std::sqrt(std::max(sigma0.values[j], 0.0)) *
                  std::complex<double>(std::cos(phase), std::sin(phase));
  }
  fft::inverse(spectrum);

  ComplexTimeSeries out;
  out.dt = config.dt;
  out.samples = std::move(spectrum);

  const double f_c = current_shift(config, u_r);
  double power = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const double ang = kTwoPi * f_c * static_cast<double>(m) * config.dt;
    out.samples[m] *= std::complex<double>(std::cos(ang), std::sin(ang));
    power += std::norm(out.samples[m]);
  }
  power /= static_cast<double>(n);
  if (power <= 0.0)
    throw DegenerateInputError("synthesize_signal: prescribed spectrum has no power");
  const double scale = 1.0 / std::sqrt(power);
  for (auto& s : out.samples) s *= scale;
  return out;
}

ComplexTimeSeries add_noise(const ComplexTimeSeries& signal,
                            const NoiseSource& noise, double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("add_noise: alpha must be >= 0");
  ComplexTimeSeries out = signal;
  if (alpha == 0.0) return out;

  const std::size_t n = signal.samples.size();
  Rng rng(noise.seed);
  if (noise.kind == NoiseSource::Kind::gaussian_white) {
    for (auto& s : out.samples) s += alpha * rng.complex_gaussian();
    return out;
  }

  if (noise.samples.empty())
    throw std::invalid_argument("add_noise: file-based noise source has no samples");
  std::complex<double> mean(0.0, 0.0);
  for (const auto& x : noise.samples) mean += x;
  mean /= static_cast<double>(noise.samples.size());
  double var = 0.0;
  double msq = 0.0;
  for (const auto& x : noise.samples) {
    var += std::norm(x - mean);
    msq += std::norm(x);
  }
  var /= static_cast<double>(noise.samples.size());
  msq /= static_cast<double>(noise.samples.size());
  // relative threshold so a constant recording is caught despite the rounding
  // noise of the mean accumulation
  if (var <= msq * 1e-20)
    throw DegenerateInputError("add_noise: noise source has zero variance");
  const double inv_std = 1.0 / std::sqrt(var);

  // Short recordings are recycled circularly from a seeded start offset.
  const std::size_t len = noise.samples.size();
  const std::size_t start = rng.uniform_index(len);
  for (std::size_t m = 0; m < n; ++m) {
    const auto& x = noise.samples[(start + m) % len];
    out.samples[m] += alpha * (x - mean) * inv_std;
  }
  return out;
}

}  // namespace hfcur
