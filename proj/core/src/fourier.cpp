#include "dcmod/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dcmod {

void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft_pow2: length not a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const std::complex<double> u = a[i + j];
                const std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

Spectrum fourier_interval(const std::vector<std::complex<double>>& samples,
                          double u0, double du, int padding) {
    if (!(du > 0.0)) throw std::invalid_argument("fourier_interval: grid spacing must be positive");
    if (samples.empty()) throw std::invalid_argument("fourier_interval: empty input");

    std::size_t n = samples.size() + static_cast<std::size_t>(std::max(0, padding));
    std::size_t n2 = 1;
    while (n2 < n) n2 <<= 1;
    if (n2 < 4) n2 = 4;

    std::vector<std::complex<double>> a(n2, 0.0);
    for (std::size_t j = 0; j < samples.size(); ++j) a[j] = samples[j];
    fft_pow2(a, +1);  // sum_j f_j e^{+2 pi i jk/n2}

    // frequencies k_m = 2 pi m/(n2 du), m = -n2/2+1 .. n2/2-1 (symmetric set,
    // Nyquist bin dropped); F(k) = (2pi)^{-1/2} du e^{i k u0} * bin(k)
    Spectrum out;
    out.dk = 2.0 * std::numbers::pi / (static_cast<double>(n2) * du);
    const std::size_t half = n2 / 2;
    out.k.reserve(n2 - 1);
    out.values.reserve(n2 - 1);
    const double scale = du / std::sqrt(2.0 * std::numbers::pi);
    for (std::size_t idx = half + 1; idx < n2; ++idx) {  // negative frequencies
        const double k = out.dk * (static_cast<double>(idx) - static_cast<double>(n2));
        out.k.push_back(k);
        out.values.push_back(scale * std::polar(1.0, k * u0) * a[idx]);
    }
    for (std::size_t idx = 0; idx <= half - 1; ++idx) {  // k >= 0
        const double k = out.dk * static_cast<double>(idx);
        out.k.push_back(k);
        out.values.push_back(scale * std::polar(1.0, k * u0) * a[idx]);
    }
    return out;
}

Spectrum fourier_interval(const std::vector<double>& samples, double u0, double du,
                          int padding) {
    std::vector<std::complex<double>> c(samples.begin(), samples.end());
    return fourier_interval(c, u0, du, padding);
}

}  // namespace dcmod
