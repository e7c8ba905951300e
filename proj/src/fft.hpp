#pragma once

#include <complex>
#include <span>

namespace specfact::detail {

enum class FftDirection { kForward, kBackward };

// Unnormalized in-place DFT: forward uses e^{-2 pi i jk/n}, backward e^{+2 pi i jk/n}.
// Safe to call concurrently.
void dft(std::span<std::complex<double>> data, FftDirection dir);

}  // namespace specfact::detail
