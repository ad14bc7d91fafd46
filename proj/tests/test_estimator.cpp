#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hfcur/doppler.hpp"
#include "hfcur/errors.hpp"
#include "hfcur/estimator.hpp"
#include "hfcur/rng.hpp"
#include "hfcur/signal.hpp"

using namespace hfcur;

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

RadarConfig default_radar() { return RadarConfig{}; }

// Flat floor with two Gaussian lines shifted by f_c; line/floor ratio in dB.
PowerSpectrum two_line_psd(const RadarConfig& radar, double f_c, double line_db,
                           std::size_t n = 2048) {
  const double f_b = bragg_frequency(radar);
  PowerSpectrum psd;
  psd.freqs = full_band_grid(n, radar.dt);
  psd.values.assign(n, 1.0);
  const double amp = std::pow(10.0, line_db / 10.0);
  const double sigma = 2.0 * (psd.freqs[1] - psd.freqs[0]);
  for (std::size_t i = 0; i < n; ++i) {
    const double f = psd.freqs[i];
    for (double center : {f_b + f_c, -f_b + f_c}) {
      const double x = (f - center) / sigma;
      psd.values[i] += amp * std::exp(-0.5 * x * x);
    }
  }
  return psd;
}

PowerSpectrum reference_on_grid(const RadarConfig& radar, std::size_t n) {
  const double df = 1.0 / (static_cast<double>(n) * radar.dt);
  return build_reference_spectrum(ReferenceSpectrumSpec{}.resolved(df), radar,
                                  full_band_grid(n, radar.dt));
}
}  // namespace

TEST_CASE("peak search finds both shifted Bragg lines") {
  const RadarConfig radar = default_radar();
  const double f_b = bragg_frequency(radar);
  const QcPolicy policy;
  const double f_c = 0.0323;
  const auto psd = two_line_psd(radar, f_c, 20.0);
  const double step = psd.freqs[1] - psd.freqs[0];

  const auto peaks = find_bragg_peaks(psd, radar, policy);
  CHECK(std::abs(peaks.f_plus - (f_b + f_c)) <= step);
  CHECK(std::abs(peaks.f_minus - (-f_b + f_c)) <= step);

  const auto centered = find_bragg_peaks(two_line_psd(radar, 0.0, 20.0), radar, policy);
  CHECK(std::abs(centered.f_plus - f_b) <= step);
  CHECK(std::abs(centered.f_minus + f_b) <= step);
}

TEST_CASE("a dominant parasitic bump wins the window and then fails QC") {
  const RadarConfig radar = default_radar();
  const double f_b = bragg_frequency(radar);
  const QcPolicy policy;
  auto psd = two_line_psd(radar, 0.0, 20.0);
  // 10 dB stronger bump inside the positive search window, offset 0.06 Hz
  const double sigma = 2.0 * (psd.freqs[1] - psd.freqs[0]);
  for (std::size_t i = 0; i < psd.freqs.size(); ++i) {
    const double x = (psd.freqs[i] - (f_b + 0.06)) / sigma;
    psd.values[i] += 1000.0 * std::exp(-0.5 * x * x);
  }
  const auto peaks = find_bragg_peaks(psd, radar, policy);
  CHECK(peaks.f_plus == doctest::Approx(f_b + 0.06).epsilon(1e-2));

  const auto verdict = quality_check(peaks.f_plus, peaks.f_minus, 30.0, 30.0,
                                     radar, policy);
  CHECK_FALSE(verdict.pass);
  CHECK(verdict.reason == QcReason::symmetry);
}

TEST_CASE("peak search demands a grid covering the windows") {
  const RadarConfig radar = default_radar();
  PowerSpectrum psd;
  psd.freqs = {-0.1, 0.0, 0.1};
  psd.values = {1.0, 1.0, 1.0};
  CHECK_THROWS_AS(find_bragg_peaks(psd, radar, QcPolicy{}), std::invalid_argument);
}

TEST_CASE("SNR of a flat spectrum is 0 dB") {
  const RadarConfig radar = default_radar();
  PowerSpectrum psd;
  psd.freqs = full_band_grid(512, radar.dt);
  psd.values.assign(512, 3.7);
  CHECK(estimate_snr(psd, bragg_frequency(radar), radar, QcPolicy{}) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("SNR recovers a constructed 20 dB line") {
  const RadarConfig radar = default_radar();
  const auto psd = two_line_psd(radar, 0.0, 20.0);
  const double snr =
      estimate_snr(psd, bragg_frequency(radar), radar, QcPolicy{});
  CHECK(snr == doctest::Approx(20.0).epsilon(0.05));  // +-1 dB
}

TEST_CASE("peak below the floor gives negative dB, not an error") {
  const RadarConfig radar = default_radar();
  auto psd = two_line_psd(radar, 0.0, 20.0);
  // dig a notch at the positive Bragg line
  const double f_b = bragg_frequency(radar);
  for (std::size_t i = 0; i < psd.freqs.size(); ++i)
    if (std::abs(psd.freqs[i] - f_b) < 0.12) psd.values[i] = 0.01;
  CHECK(estimate_snr(psd, f_b, radar, QcPolicy{}) < 0.0);
}

TEST_CASE("SNR needs floor support") {
  const RadarConfig radar = default_radar();
  PowerSpectrum psd;
  psd.freqs = full_band_grid(16, radar.dt);  // almost everything excluded
  psd.values.assign(16, 1.0);
  CHECK_THROWS_AS(estimate_snr(psd, bragg_frequency(radar), radar, QcPolicy{}),
                  InsufficientDataError);
}

TEST_CASE("quality check: pass / fail-snr / fail-symmetry") {
  const RadarConfig radar = default_radar();
  const QcPolicy policy;
  const double f_b = bragg_frequency(radar);

  const auto pass =
      quality_check(f_b + 0.01, -f_b + 0.01, 15.0, 15.0, radar, policy);
  CHECK(pass.pass);
  CHECK(pass.reason == QcReason::none);

  const auto snr_fail =
      quality_check(f_b + 0.01, -f_b + 0.01, 15.0, 11.0, radar, policy);
  CHECK_FALSE(snr_fail.pass);
  CHECK(snr_fail.reason == QcReason::snr);

  // asymmetry 0.012 Hz vs threshold 0.025 * 0.4101 = 0.01025 Hz
  const auto sym_fail =
      quality_check(f_b + 0.012, -f_b, 15.0, 15.0, radar, policy);
  CHECK_FALSE(sym_fail.pass);
  CHECK(sym_fail.reason == QcReason::symmetry);
}

TEST_CASE("quality check: out-of-range current") {
  const RadarConfig radar = default_radar();
  const double f_b = bragg_frequency(radar);
  // symmetric shift equivalent to ~1.15 m/s
  const double f_c = current_shift(radar, 1.15);
  const auto verdict =
      quality_check(f_b + f_c, -f_b + f_c, 20.0, 20.0, radar, QcPolicy{});
  CHECK_FALSE(verdict.pass);
  CHECK(verdict.reason == QcReason::range);
}

TEST_CASE("QC monotonicity in the thresholds") {
  const RadarConfig radar = default_radar();
  const double f_b = bragg_frequency(radar);
  Rng rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    const double fp = f_b + rng.uniform(-0.02, 0.02);
    const double fm = -f_b + rng.uniform(-0.02, 0.02);
    const double sp = rng.uniform(5.0, 25.0);
    const double sm = rng.uniform(5.0, 25.0);
    QcPolicy loose;
    QcPolicy strict;
    strict.snr_threshold_db = loose.snr_threshold_db + rng.uniform(0.0, 6.0);
    strict.symmetry_tolerance = loose.symmetry_tolerance * rng.uniform(0.2, 1.0);
    const bool loose_pass = quality_check(fp, fm, sp, sm, radar, loose).pass;
    const bool strict_pass = quality_check(fp, fm, sp, sm, radar, strict).pass;
    if (strict_pass) CHECK(loose_pass);
  }
}

TEST_CASE("centroid refinement") {
  const RadarConfig radar = default_radar();
  SUBCASE("half-width zero returns the input") {
    const auto psd = two_line_psd(radar, 0.0, 20.0);
    CHECK(centroid_refine(psd, 0.3, 0) == 0.3);
  }
  SUBCASE("a symmetric on-bin peak refines to the bin frequency") {
    PowerSpectrum psd;
    psd.freqs = {-2.0, -1.0, 0.0, 1.0, 2.0};
    psd.values = {0.1, 1.0, 4.0, 1.0, 0.1};
    CHECK(centroid_refine(psd, 0.0, 1) == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("edge clipping sets the warning flag") {
    PowerSpectrum psd;
    psd.freqs = {0.0, 1.0, 2.0};
    psd.values = {1.0, 1.0, 1.0};
    bool clipped = false;
    centroid_refine(psd, 0.0, 2, &clipped);
    CHECK(clipped);
  }
  SUBCASE("off-grid tone: centroid beats raw argmax by 2x or better") {
    const std::size_t n = 128;
    const double dt = radar.dt;
    const double df = 1.0 / (static_cast<double>(n) * dt);
    double raw_err = 0.0, refined_err = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Rng rng(seed);
      const double f0 = 0.41 + 0.5 * df;  // halfway between bins
      ComplexTimeSeries s;
      s.dt = dt;
      for (std::size_t m = 0; m < n; ++m) {
        const double ang = kTwoPi * f0 * static_cast<double>(m) * dt;
        s.samples.emplace_back(std::cos(ang), std::sin(ang));
        s.samples.back() += 0.05 * rng.complex_gaussian();
      }
      const auto psd = periodogram(s);
      std::size_t best = 0;
      for (std::size_t i = 1; i < n; ++i)
        if (psd.values[i] > psd.values[best]) best = i;
      raw_err += std::abs(psd.freqs[best] - f0);
      refined_err += std::abs(centroid_refine(psd, psd.freqs[best], 2) - f0);
    }
    CHECK(refined_err * 2.0 <= raw_err);
  }
}

TEST_CASE("radial current conversion") {
  RadarConfig radar = default_radar();
  const double f_b = bragg_frequency(radar);
  CHECK(radial_current(f_b, -f_b, radar) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(radial_current(0.44247, -0.37783, radar) == doctest::Approx(0.300).epsilon(1e-3));

  RadarConfig bistatic = radar;
  bistatic.bistatic_angle = 15.0 * kPi / 180.0;
  CHECK(radial_current(0.44247, -0.37783, bistatic) ==
        doctest::Approx(0.300 * 1.0353).epsilon(1e-3));

  RadarConfig bad = radar;
  bad.bistatic_angle = 1.6;  // past 90 degrees, cos < 0
  CHECK_THROWS_AS(radial_current(0.44247, -0.37783, bad), std::invalid_argument);
}

TEST_CASE("end-to-end: clean synthetic current with AR-MEM") {
  const RadarConfig radar = default_radar();
  const std::size_t n = 1024;
  const auto sigma0 = reference_on_grid(radar, n);
  const auto s = synthesize_signal(sigma0, radar, 0.3, n, 21);
  EstimateOptions options;
  options.method = SpectralMethod::ar_mem;
  const auto est = estimate_current(s, radar, QcPolicy{}, options);
  REQUIRE(est.qc.pass);
  CHECK(*est.u_r == doctest::Approx(0.3).epsilon(0.067));  // |u_r - 0.3| < 0.02
}

TEST_CASE("pure noise is rejected by the SNR gate") {
  const RadarConfig radar = default_radar();
  int rejects = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    ComplexTimeSeries s;
    s.dt = radar.dt;
    for (int i = 0; i < 1024; ++i) s.samples.push_back(rng.complex_gaussian());
    const auto est = estimate_current(s, radar, QcPolicy{}, EstimateOptions{});
    if (!est.qc.pass) ++rejects;
  }
  CHECK(rejects >= 95);
}

TEST_CASE("negating the injected current negates the estimate") {
  const RadarConfig radar = default_radar();
  const std::size_t n = 1024;
  const auto sigma0 = reference_on_grid(radar, n);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto plus = estimate_current(
        synthesize_signal(sigma0, radar, 0.25, n, seed), radar, QcPolicy{}, {});
    const auto minus = estimate_current(
        synthesize_signal(sigma0, radar, -0.25, n, seed), radar, QcPolicy{}, {});
    REQUIRE(plus.qc.pass);
    REQUIRE(minus.qc.pass);
    CHECK(*plus.u_r == doctest::Approx(-*minus.u_r).epsilon(0.05));
  }
}

TEST_CASE("both methods return the same structure on the same signal") {
  const RadarConfig radar = default_radar();
  const std::size_t n = 4096;
  const auto sigma0 = reference_on_grid(radar, n);
  const auto s = synthesize_signal(sigma0, radar, 0.2, n, 8);

  EstimateOptions fft;
  fft.method = SpectralMethod::periodogram;
  EstimateOptions armem;
  armem.method = SpectralMethod::ar_mem;

  ComplexTimeSeries short_series;
  short_series.dt = s.dt;
  short_series.samples.assign(s.samples.begin(), s.samples.begin() + 128);

  const auto a = estimate_current(short_series, radar, QcPolicy{}, armem);
  const auto b = estimate_current(s, radar, QcPolicy{}, fft);
  CHECK(a.method == SpectralMethod::ar_mem);
  CHECK(b.method == SpectralMethod::periodogram);
  CHECK(b.refined);
  CHECK_FALSE(a.refined);
  if (a.qc.pass && b.qc.pass)
    CHECK(std::abs(*a.u_r - *b.u_r) < 0.05);
}
