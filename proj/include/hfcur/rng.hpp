#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace hfcur {

/// Derives an independent stream seed from a master seed and a work-unit
/// index, so parallel and serial runs draw identical numbers.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

/// Seeded generator with explicit, implementation-independent draws.
/// std::uniform_real_distribution and friends are not pinned across standard
/// library versions, so the conversions are done by hand here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform();

  /// Uniform double in [a, b).
  double uniform(double a, double b);

  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);

  /// Standard normal via Box-Muller.
  double gaussian();

  /// Circular complex Gaussian with unit total variance.
  std::complex<double> complex_gaussian();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace hfcur
