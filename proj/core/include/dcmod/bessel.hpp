#pragma once

// Modified Bessel functions for the massive causal propagator.  K0/K1 accept
// complex arguments off the cut (-inf, 0]; the propagator only ever produces
// arguments with Re z >= 0 (principal square root of sigma).

#include <complex>

namespace dcmod {

/// K1 for complex z off the negative real axis.  Ascending series for small
/// or near-imaginary z, Thompson-Barnett continued fraction otherwise.
/// Relative accuracy ~1e-12 on the argument range produced by masses <= 2.
std::complex<double> bessel_K1_complex(std::complex<double> z);

/// K0, same domain and method as K1.
std::complex<double> bessel_K0_complex(std::complex<double> z);

// Real-argument helpers (ascending series); used by the Wronskian test and
// by small-argument propagator checks.
double bessel_I0(double x);
double bessel_I1(double x);
double bessel_K0(double x);
double bessel_K1(double x);

}  // namespace dcmod
