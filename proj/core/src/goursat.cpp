#include "dcmod/goursat.hpp"

#include <cmath>
#include <stdexcept>

#include "dcmod/parallel.hpp"

namespace dcmod {

namespace {
using cd = std::complex<double>;
}

std::vector<double> goursat_solve(const BoundaryData& phi, const GoursatSpec& spec,
                                  const std::vector<SpacetimePoint>& points,
                                  const BoundaryOps& ops) {
    spec.sched.validate();
    for (const SpacetimePoint& p : points)
        if (!in_double_cone(p)) throw std::domain_error("goursat_solve: point outside D");

    const ConeGrid& grid = phi.grid;
    const std::size_t nw = grid.sphere.size();
    const std::size_t nu = grid.u.size();
    const std::vector<double> dphi = ops.u_derivative(phi);
    const std::size_t ne = spec.sched.eps_values.size();

    std::vector<double> out(points.size(), 0.0);
    // (point, eps) pairs are independent; flatten them for the pool
    std::vector<cd> samples(points.size() * ne, cd(0.0));
    parallel_for(points.size() * ne, [&](std::size_t job) {
        const std::size_t ip = job / ne;
        const std::size_t ie = job % ne;
        const SpacetimePoint& p = points[ip];
        const double eps = spec.sched.eps_values[ie];
        const cd tc(p.t, -eps);
        cd acc = 0.0;
        std::vector<double> row(nu);
        for (std::size_t iw = 0; iw < nw; ++iw) {
            const Vec3& w = grid.sphere.directions[iw];
            const double us = u_star(p, w);
            const Quadrature1D q = refined_quadrature(
                0.0, 1.0, us, std::max(eps * spec.u_floor_frac, 1e-9), spec.nodes_per_panel);
            const double* dp = dphi.data() + iw * nu;
            cd dir = 0.0;
            for (std::size_t b = 0; b < q.size(); ++b) {
                const double u = q.nodes[b];
                ops.ugrid().weights_at(u, row);
                double dval = 0.0;
                for (std::size_t j = 0; j < nu; ++j) dval += row[j] * dp[j];
                const SpacetimePoint y{u, u * w};
                dir += q.weights[b] * u * dval * propagator_complex(spec.mass, tc, p.x, y);
            }
            acc += grid.sphere.weights[iw] * dir;
        }
        samples[ip * ne + ie] = -2.0 * acc;
    });

    for (std::size_t ip = 0; ip < points.size(); ++ip) {
        std::vector<EpsSample> s(ne);
        for (std::size_t ie = 0; ie < ne; ++ie)
            s[ie] = {spec.sched.eps_values[ie], samples[ip * ne + ie]};
        const EpsLimit lim = eps_extrapolate(s, spec.sched);
        if (std::abs(lim.limit.imag()) > 1e-6 * (std::abs(lim.limit.real()) + 1.0))
            throw std::runtime_error("goursat_solve: imaginary residue out of tolerance");
        if (lim.error_estimate > 0.05 * std::abs(lim.limit) + 1e-4)
            throw std::runtime_error("goursat_solve: extrapolation unstable");
        out[ip] = lim.limit.real();
    }
    return out;
}

double roundtrip_residual(const KGSolution& s, const GoursatSpec& spec,
                          const std::vector<SpacetimePoint>& probes,
                          const BoundaryOps& ops) {
    const BoundaryData phi = ops.restrict_to_V(s);
    const std::vector<double> rec = goursat_solve(phi, spec, probes, ops);
    double sup_err = 0.0, sup_phi = 0.0;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const double ref = evaluate_solution(s, probes[i]);
        sup_err = std::max(sup_err, std::abs(rec[i] - ref));
        sup_phi = std::max(sup_phi, std::abs(ref));
    }
    if (sup_phi == 0.0) return 0.0;
    return sup_err / sup_phi;
}

}  // namespace dcmod
