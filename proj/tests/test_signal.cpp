#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hfcur/rng.hpp"
#include "hfcur/signal.hpp"

using namespace hfcur;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

ComplexTimeSeries tone(double f0, std::size_t n, double dt) {
  ComplexTimeSeries s;
  s.dt = dt;
  s.samples.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double ang = kTwoPi * f0 * static_cast<double>(m) * dt;
    s.samples.emplace_back(std::cos(ang), std::sin(ang));
  }
  return s;
}

double integrated_power(const PowerSpectrum& psd) {
  const double df = psd.freqs[1] - psd.freqs[0];
  double acc = 0.0;
  for (double v : psd.values) acc += v;
  return acc * df;
}
}  // namespace

TEST_CASE("blackman-harris window values") {
  CHECK(blackman_harris_window(1) == std::vector<double>{1.0});
  // center of an odd window sums all four terms
  const auto w5 = blackman_harris_window(5);
  CHECK(w5[2] == doctest::Approx(1.0).epsilon(1e-12));
  // k = 0 limit of the 4-term formula
  CHECK(w5[0] == doctest::Approx(0.35875 - 0.48829 + 0.14128 - 0.01168).epsilon(1e-12));
  CHECK_THROWS_AS(blackman_harris_window(0), std::invalid_argument);
}

TEST_CASE("blackman-harris window symmetry and range") {
  for (std::size_t n : {2u, 5u, 17u, 128u, 1001u}) {
    const auto w = blackman_harris_window(n);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(w[k] == doctest::Approx(w[n - 1 - k]).epsilon(1e-12));
      CHECK(w[k] > 0.0);
      CHECK(w[k] <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("periodogram of an on-grid tone is a single line") {
  const std::size_t n = 256;
  const double dt = 0.26;
  const double f0 = 16.0 / (static_cast<double>(n) * dt);  // exact grid frequency
  const auto psd = periodogram(tone(f0, n, dt), rectangular_window(n));

  std::size_t peak = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (psd.values[i] > psd.values[peak]) peak = i;
  CHECK(psd.freqs[peak] == doctest::Approx(f0).epsilon(1e-12));
  for (std::size_t i = 0; i < n; ++i) {
    if (i == peak) continue;
    CHECK(psd.values[i] <= psd.values[peak] * 1e-6);  // <= -60 dB
  }
}

TEST_CASE("periodogram satisfies Parseval with a rectangular window") {
  Rng rng(7);
  ComplexTimeSeries s;
  s.dt = 0.5;
  for (int i = 0; i < 300; ++i) s.samples.push_back(rng.complex_gaussian());
  double mean_power = 0.0;
  for (const auto& x : s.samples) mean_power += std::norm(x);
  mean_power /= static_cast<double>(s.samples.size());

  const auto psd = periodogram(s, rectangular_window(s.size()));
  CHECK(integrated_power(psd) == doctest::Approx(mean_power).epsilon(1e-9));
}

TEST_CASE("white-noise periodogram integrates to the variance") {
  const std::size_t n = 4096;
  double acc = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    ComplexTimeSeries s;
    s.dt = 0.26;
    for (std::size_t i = 0; i < n; ++i) s.samples.push_back(rng.complex_gaussian());
    acc += integrated_power(periodogram(s, rectangular_window(n)));
  }
  CHECK(acc / 100.0 == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("constant series puts all power in the DC bin") {
  ComplexTimeSeries s;
  s.dt = 0.26;
  s.samples.assign(64, std::complex<double>(1.0, 0.0));
  const auto psd = periodogram(s, rectangular_window(64));
  for (std::size_t i = 0; i < psd.freqs.size(); ++i) {
    if (psd.freqs[i] == 0.0)
      CHECK(psd.values[i] > 0.0);
    else
      CHECK(psd.values[i] == doctest::Approx(0.0).epsilon(1e-20));
  }
}

TEST_CASE("periodogram grid spacing is exactly 1/(N dt)") {
  const std::size_t n = 200;  // non-power-of-two path
  ComplexTimeSeries s = tone(0.1, n, 0.26);
  const auto psd = periodogram(s);
  const double df = 1.0 / (static_cast<double>(n) * 0.26);
  for (std::size_t i = 1; i < n; ++i)
    CHECK(psd.freqs[i] - psd.freqs[i - 1] == doctest::Approx(df).epsilon(1e-12));
  CHECK(psd.freqs.front() == doctest::Approx(-0.5 / 0.26).epsilon(1e-12));
}

TEST_CASE("modulation shifts the peak bin circularly") {
  const std::size_t n = 512;
  const double dt = 0.26;
  const double f0 = 20.0 / (static_cast<double>(n) * dt);
  const double fc = 37.0 / (static_cast<double>(n) * dt);
  ComplexTimeSeries base = tone(f0, n, dt);
  ComplexTimeSeries shifted = base;
  for (std::size_t m = 0; m < n; ++m) {
    const double ang = kTwoPi * fc * static_cast<double>(m) * dt;
    shifted.samples[m] *= std::complex<double>(std::cos(ang), std::sin(ang));
  }
  auto argmax = [](const PowerSpectrum& psd) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < psd.values.size(); ++i)
      if (psd.values[i] > psd.values[best]) best = i;
    return best;
  };
  const auto p0 = periodogram(base, rectangular_window(n));
  const auto p1 = periodogram(shifted, rectangular_window(n));
  CHECK(argmax(p1) == argmax(p0) + 37);
}

TEST_CASE("zero padding interpolates the grid without changing total power") {
  Rng rng(11);
  ComplexTimeSeries s;
  s.dt = 0.26;
  for (int i = 0; i < 128; ++i) s.samples.push_back(rng.complex_gaussian());
  const auto coarse = periodogram(s, rectangular_window(128));
  const auto fine = periodogram(s, rectangular_window(128), 512);
  CHECK(fine.freqs.size() == 512);
  CHECK(integrated_power(fine) == doctest::Approx(integrated_power(coarse)).epsilon(1e-9));
}

TEST_CASE("periodogram input validation") {
  ComplexTimeSeries empty;
  empty.dt = 0.26;
  CHECK_THROWS_AS(periodogram(empty), std::invalid_argument);
  ComplexTimeSeries s = tone(0.1, 32, 0.26);
  CHECK_THROWS_AS(periodogram(s, rectangular_window(31)), std::invalid_argument);
}
