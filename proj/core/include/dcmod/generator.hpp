#pragma once

// The modular generator on solutions: gamma^X, the explicit difference
// delta^(m) - delta^(0) with kernel F_m and cutoff u*, the vanishing boundary
// term, and the pseudodifferential amplitude b(x,k) with its decay scan.
//
//   delta^(m) phi = gamma^X phi
//     + 2 Int_{S2} Int_0^{u*} u [2-(t+u)] [F_m(sigma) + sigma F_m'(sigma)]
//       d_u Phi(w,u) du dw.

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "dcmod/boundary.hpp"
#include "dcmod/bulk.hpp"

namespace dcmod {

/// F_m(z) = (m^2/8pi) sum_k (m/2)^{2k} z^k / (k! (k+1)!) and its derivative.
/// F_m(0) = m^2/(8 pi); identically zero for m = 0.
struct FmValue {
    double F = 0.0;
    double Fprime = 0.0;
};
FmValue fm_eval(double m, double z);

/// gamma^X phi = -X(phi) - (t-1) phi.
double gamma_X(const KGSolution& s, const SpacetimePoint& p);

/// The integral term of delta^(m) - delta^(0) acting on boundary data.
/// p must lie in D.
double delta_diff(const BoundaryData& phi, double m, const SpacetimePoint& p,
                  const BoundaryOps& ops);

/// Full generator delta^(m) = gamma^X + delta_diff on a bulk solution.
double delta_m(const KGSolution& s, const BoundaryData& phi, double m,
               const SpacetimePoint& p, const BoundaryOps& ops);

/// |u(1-u) + X^a d_a u*| at u = u*(p, w); vanishes identically.
/// Also asserts t - w.x > 0 (guaranteed in D).
double boundary_term_residual(const SpacetimePoint& p, const Vec3& omega);

/// Z = 1 + t d_t + x . grad applied to a solution.
double Z_apply(const KGSolution& s, const SpacetimePoint& p);

/// Z applied to a generic callable (finite differences); plumbing check.
double Z_apply_generic(const std::function<double(const SpacetimePoint&)>& f,
                       const SpacetimePoint& p, double fd_step = 1e-5);

/// Four-momentum (k0, k).
struct FourVector {
    double k0 = 0.0;
    Vec3 k{};
};

/// Pseudodifferential amplitude
///   b(x,k) = e^{-i<k,x>} Int dS2 Int_0^{u*} e^{i(k0 u + u k.w)} g(x,w,u) du dw,
///   g = (2pi)^{-4} u [2-(t+u)] [F_m + sigma F_m'].
/// The u-quadrature order grows with |k| (>= 10 + 3 |k| u*), and the sphere
/// grid is built per call with its polar axis along the spatial momentum so
/// the e^{i u k.w} oscillation lives in cos(theta) alone (n_theta grows with
/// |k|; the azimuthal content of g is low order).
std::complex<double> symbol_b(const SpacetimePoint& p, const FourVector& k, double m,
                              int n_phi = 24);

/// Multi-indices over (t, x, y, z) for x- and (k0, kx, ky, kz) for k-derivatives.
using MultiIndex = std::array<int, 4>;

struct DecayFit {
    MultiIndex alpha{};  // x-derivatives
    MultiIndex beta{};   // k-derivatives
    double slope = 0.0;       // fitted log-log exponent
    double residual = 0.0;    // rms of the fit
    double expected = 0.0;    // -1 + |alpha| - |beta|
};

/// Log-log slope of sup over directions of |d^alpha_x d^beta_k b| against
/// |k| in [k_min, k_max] (central differences, step fd_step).
DecayFit symbol_decay_fit(const SpacetimePoint& p, double m,
                          const std::vector<FourVector>& directions,
                          double k_min, double k_max, int n_k,
                          const MultiIndex& alpha, const MultiIndex& beta,
                          double fd_step = 1e-3);

/// Residual of the conformal commutation identity for F = F_m:
/// gamma^X_x F(sigma) + gamma^X_{x'} F(sigma)
///   = (1/4)(div X(x) + div X(x')) (F + sigma F').
double fm_trick_residual(double m, const SpacetimePoint& p, const SpacetimePoint& q);

}  // namespace dcmod
