#include "dcmod/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dcmod {

namespace {

using cd = std::complex<double>;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Ascending series, valid on the whole cut plane (principal log):
//   I1(z) = (z/2) sum_k (z^2/4)^k / (k! (k+1)!)
//   K1(z) = 1/z + ln(z/2) I1(z) - (z/4) sum_k [psi(k+1)+psi(k+2)] (z^2/4)^k/(k!(k+1)!)
// Terms are added until they stop contributing; cancellation limits accuracy
// for large |z|, which the dispatcher avoids.
cd k1_series(cd z) {
    const cd q = 0.25 * z * z;
    const cd lg = std::log(0.5 * z);

    cd i1_sum = 1.0;         // sum over k of q^k/(k!(k+1)!)
    cd psi_sum = 0.0;        // sum over k of [psi(k+1)+psi(k+2)] q^k/(k!(k+1)!)
    double hk = 0.0;         // H_k
    double hk1 = 1.0;        // H_{k+1}
    cd term = 1.0;           // q^k/(k!(k+1)!)
    for (int k = 0; k < 60; ++k) {
        psi_sum += term * (-2.0 * kEulerGamma + hk + hk1);
        if (k > 0) i1_sum += term;  // k = 0 seeded above
        const cd next = term * q / (static_cast<double>(k + 1) * (k + 2));
        if (std::abs(next) < 1e-17 * (std::abs(i1_sum) + 1.0) && k > 3) break;
        term = next;
        hk += 1.0 / (k + 1);
        hk1 += 1.0 / (k + 2);
    }
    const cd i1 = 0.5 * z * i1_sum;
    return 1.0 / z + lg * i1 - 0.25 * z * psi_sum;
}

cd k0_series(cd z) {
    const cd q = 0.25 * z * z;
    const cd lg = std::log(0.5 * z);
    cd i0 = 1.0, sum = 0.0, term = 1.0;
    double hk = 0.0;
    for (int k = 1; k < 60; ++k) {
        term *= q / (static_cast<double>(k) * k);
        hk += 1.0 / k;
        i0 += term;
        sum += term * hk;
        if (std::abs(term) < 1e-17 * (std::abs(i0) + 1.0) && k > 3) break;
    }
    return -(lg + kEulerGamma) * i0 + sum;
}

// Thompson-Barnett continued fraction (CF2) for K0 and K1, Re z > 0.
void k01_cf2(cd z, cd& k0, cd& k1) {
    constexpr int kMaxIter = 40000;
    const double eps = 1e-16;
    const double a1 = 0.25;  // 1/4 - nu^2 with nu = 0
    cd b = 2.0 * (1.0 + z);
    cd d = 1.0 / b;
    cd delh = d, h = d;
    cd q1 = 0.0, q2 = 1.0;
    cd q = a1, c = a1;
    double a = -a1;
    cd s = 1.0 + q * delh;
    bool converged = false;
    for (int i = 2; i <= kMaxIter; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / static_cast<double>(i);
        const cd qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const cd dels = q * delh;
        s += dels;
        if (std::abs(dels) <= eps * std::abs(s)) { converged = true; break; }
    }
    if (!converged) throw std::runtime_error("bessel K: continued fraction stalled");
    h *= a1;
    k0 = std::sqrt(std::numbers::pi / (2.0 * z)) * std::exp(-z) / s;
    k1 = k0 * (z + 0.5 - h) / z;
}

void check_cut(cd z) {
    if (z.imag() == 0.0 && z.real() <= 0.0)
        throw std::domain_error("bessel K: argument on the cut (-inf, 0]");
}

}  // namespace

std::complex<double> bessel_K1_complex(std::complex<double> z) {
    check_cut(z);
    if (std::abs(z) <= 2.0 || z.real() < 0.05 * std::abs(z)) {
        if (std::abs(z) > 9.0)
            throw std::domain_error("bessel K1: near-imaginary argument too large for the series");
        return k1_series(z);
    }
    cd k0, k1;
    k01_cf2(z, k0, k1);
    return k1;
}

std::complex<double> bessel_K0_complex(std::complex<double> z) {
    check_cut(z);
    if (std::abs(z) <= 2.0 || z.real() < 0.05 * std::abs(z)) {
        if (std::abs(z) > 9.0)
            throw std::domain_error("bessel K0: near-imaginary argument too large for the series");
        return k0_series(z);
    }
    cd k0, k1;
    k01_cf2(z, k0, k1);
    return k0;
}

double bessel_I0(double x) {
    const double q = 0.25 * x * x;
    double sum = 1.0, term = 1.0;
    for (int k = 1; k < 80; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum;
}

double bessel_I1(double x) {
    const double q = 0.25 * x * x;
    double sum = 1.0, term = 1.0;
    for (int k = 1; k < 80; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return 0.5 * x * sum;
}

double bessel_K0(double x) { return bessel_K0_complex(cd(x, 0.0)).real(); }
double bessel_K1(double x) { return bessel_K1_complex(cd(x, 0.0)).real(); }

}  // namespace dcmod
