#pragma once

// The boundary flow beta^X_tau, its one-particle unitary on h-spectra, the
// bulk flow s^(m)_tau, the massless geometric flow, and KMS checks.
//
// Orientation conventions (fixed by X|_V = u(u-1) d_u = -d_l):
//   (beta_tau Phi)(u) = Phi(u / (u + e^{-tau} (1-u)))  <=>  Phi(l + tau),
//   so beta_tau acts on h-spectra as multiplication by e^{-i tau h}.
// two_point_flowed continues the correlation along tau -> beta_{-tau}
// (phase e^{+i tau h}), which is the direction analytic on 0 <= Im tau <= 2pi.

#include <complex>
#include <vector>

#include "dcmod/boundary.hpp"
#include "dcmod/goursat.hpp"

namespace dcmod {

struct FlowParams {
    double tau = 0.0;
    double mass = 0.0;
};

/// Pullback of the boundary data along the flow of X, resampled on the grid.
BoundaryData beta_flow_boundary(const BoundaryData& phi, double tau,
                                const BoundaryOps& ops);

/// Multiplication by e^{i s tau h}; sign = -1 implements beta_tau (default),
/// sign = +1 the reversed flow used by the KMS continuation.
HSpectrum modular_unitary_hspace(const HSpectrum& spec, double tau, int sign = -1);

/// Bulk action of the flow through the boundary:
/// goursat(beta_tau(restrict(phi))) at the points.
std::vector<double> s_tau(const BoundaryData& phi, const FlowParams& params,
                          const std::vector<SpacetimePoint>& points,
                          const BoundaryOps& ops, const GoursatSpec* spec = nullptr);
std::vector<double> s_tau(const KGSolution& s, double tau,
                          const std::vector<SpacetimePoint>& points,
                          const BoundaryOps& ops);

/// Massless geometric flow: (beta_tau phi)(p) = J^{-1/4} phi(Y(-tau, p)),
/// RK4 along X with the Jacobian accumulated via div X = 4(t-1).
double s_tau_massless_bulk(const KGSolution& s, double tau, const SpacetimePoint& p,
                           double step = 1e-3);

/// Backward flow endpoint and ln J, exposed for tests.
struct FlowEndpoint {
    SpacetimePoint point;
    double log_jacobian = 0.0;
};
FlowEndpoint flow_X(const SpacetimePoint& p, double tau, double step = 1e-3);

/// sup over the grid of e^{-pi h} |Phi-tilde(w,h) - conj(Phi-tilde(w,-h))|,
/// the one-particle KMS reality condition.  Zero for spectra of real data.
double kms_reality_check(const HSpectrum& spec);

/// One-particle correlation F(tau) = Int w(h) conj(Phi1-tilde) e^{i tau h}
/// Phi2-tilde, analytically continued; requires 0 <= Im tau <= 2pi.
std::complex<double> two_point_flowed(const HSpectrum& a, const HSpectrum& b,
                                      std::complex<double> tau);

}  // namespace dcmod
