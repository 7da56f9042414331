#pragma once

// Discrete approximation of the Fourier-Plancherel transform
//   F(k) = (2 pi)^{-1/2} Int e^{iku} f(u) du
// for samples on a uniform grid, zero-extended outside their support.

#include <complex>
#include <vector>

namespace dcmod {

struct Spectrum {
    std::vector<double> k;                      // symmetric frequency axis
    std::vector<std::complex<double>> values;   // F(k)
    double dk = 0.0;
};

/// Uniform-grid samples f_j at u_j = u0 + j du.  `padding` extra zero samples
/// are appended before the transform (the total length is rounded up to a
/// power of two).  Throws std::invalid_argument if du <= 0.
Spectrum fourier_interval(const std::vector<std::complex<double>>& samples,
                          double u0, double du, int padding = 0);

Spectrum fourier_interval(const std::vector<double>& samples,
                          double u0, double du, int padding = 0);

/// In-place radix-2 FFT of a power-of-two-length vector;
/// sign = +1 applies e^{+2 pi i jk/N}, sign = -1 the inverse kernel (unscaled).
void fft_pow2(std::vector<std::complex<double>>& a, int sign);

}  // namespace dcmod
