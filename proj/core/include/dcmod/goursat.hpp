#pragma once

// Characteristic (Goursat) inversion: reconstruct the bulk solution from its
// boundary data on V via the regularized propagator integral
//   phi(t,x) = lim_{eps->0+} -2 Int_{S2} Int_0^1 Delta_m((t-i eps, x),(u, u w))
//              u d_u Phi(w,u) du dw,
// with a u-quadrature split and refined at the cone cut u*(p, w).

#include <vector>

#include "dcmod/boundary.hpp"
#include "dcmod/bulk.hpp"
#include "dcmod/extrapolation.hpp"

namespace dcmod {

struct GoursatSpec {
    double mass = 0.0;
    // the eps-error is a steep eps (a + b ln eps) series; the order-3 fit
    // extrapolates it to ~1e-5 relative from these nine samples
    EpsSchedule sched = EpsSchedule::geometric(0.08, 0.55, 9, 3, /*log*/ true);
    double u_floor_frac = 0.05;  // refinement floor = frac * eps around u*
    int nodes_per_panel = 10;
};

/// Reconstructed field values at the given points (all must lie in D).
/// Throws std::domain_error for points outside D and std::runtime_error if
/// the eps-extrapolation is unstable.
std::vector<double> goursat_solve(const BoundaryData& phi, const GoursatSpec& spec,
                                  const std::vector<SpacetimePoint>& points,
                                  const BoundaryOps& ops);

/// sup_p |goursat(restrict(s)) - s| / sup_p |s| over the probe points.
double roundtrip_residual(const KGSolution& s, const GoursatSpec& spec,
                          const std::vector<SpacetimePoint>& probes,
                          const BoundaryOps& ops);

}  // namespace dcmod
