#pragma once

#include <complex>
#include <vector>

namespace hfcur::fft {

/// In-place forward DFT, X[k] = sum_n x[n] exp(-2*pi*i*n*k/N).
/// Radix-2 for power-of-two sizes, direct evaluation otherwise.
void forward(std::vector<std::complex<double>>& data);

/// In-place inverse DFT including the 1/N factor.
void inverse(std::vector<std::complex<double>>& data);

}  // namespace hfcur::fft
