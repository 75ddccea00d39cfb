#pragma once

#include <complex>
#include <span>
#include <vector>

namespace mudp::fft {

// Forward real DFT of n samples, scaled by 1/n. Returns modes 0..n/2
// (half-complex layout); for real input modes 0 and n/2 are purely real.
std::vector<std::complex<double>> forward(std::span<const double> values);

// Inverse of forward(): n real samples from the n/2+1 half-complex modes.
std::vector<double> inverse(std::span<const std::complex<double>> modes, int n);

}  // namespace mudp::fft
