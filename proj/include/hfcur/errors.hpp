#pragma once

#include <stdexcept>
#include <string>

namespace hfcur {

/// Input whose content (not shape) makes the operation meaningless,
/// e.g. an all-zero series handed to the AR fitter.
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical breakdown inside an otherwise valid computation.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Not enough usable data points (noise-floor support, track gaps).
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed data file (IQ input, report CSV).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid run configuration.
class ConfigParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hfcur
