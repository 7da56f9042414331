#include "dcmod/geometry.hpp"

#include <stdexcept>

namespace dcmod {

LightconeCoord to_lightcone(const SpacetimePoint& p) {
    const double r = norm(p.x);
    if (r == 0.0) throw std::domain_error("to_lightcone: omega undefined at |x| = 0");
    return {0.5 * (p.t + r), 0.5 * (p.t - r), p.x * (1.0 / r)};
}

SpacetimePoint from_lightcone(const LightconeCoord& lc) {
    return {lc.u + lc.v, lc.omega * (lc.u - lc.v)};
}

double sigma_distance(const SpacetimePoint& p, const SpacetimePoint& q) {
    const double dt = p.t - q.t;
    return -dt * dt + norm2(p.x - q.x);
}

cplx sigma_complex(cplx tc, const Vec3& x, const SpacetimePoint& q) {
    const cplx dt = tc - q.t;
    return -dt * dt + norm2(x - q.x);
}

bool in_double_cone(const SpacetimePoint& p) {
    return std::abs(p.t - 1.0) + norm(p.x) < 1.0;
}

KillingSample killing_X(const SpacetimePoint& p) {
    KillingSample s;
    s.t_component = 0.5 * (p.t * p.t + norm2(p.x)) - p.t;
    s.x_component = (p.t - 1.0) * p.x;
    s.divergence = 4.0 * (p.t - 1.0);
    return s;
}

double flow_u(double tau, double u) {
    if (u < 0.0 || u > 1.0) throw std::domain_error("flow_u: u outside [0,1]");
    if (u == 0.0 || u == 1.0) return u;
    return u / (u + std::exp(tau) * (1.0 - u));
}

double u_star(const SpacetimePoint& p, const Vec3& omega) {
    if (!in_double_cone(p)) throw std::domain_error("u_star: point outside D");
    return (p.t * p.t - norm2(p.x)) / (2.0 * (p.t - dot(omega, p.x)));
}

UStarGradient u_star_gradient(const SpacetimePoint& p, const Vec3& omega) {
    // u* = N/D with N = t^2 - |x|^2, D = 2(t - omega.x)
    const double N = p.t * p.t - norm2(p.x);
    const double D = 2.0 * (p.t - dot(omega, p.x));
    UStarGradient g;
    g.dt = (2.0 * p.t * D - 2.0 * N) / (D * D);
    g.dx = ((-2.0) * p.x * D + 2.0 * N * omega) * (1.0 / (D * D));
    return g;
}

double conformal_identity_residual(const SpacetimePoint& p, const SpacetimePoint& q) {
    // analytic gradients: d sigma/dt = -2(t-t'), d sigma/dx = 2(x-x'),
    // and the opposite signs for the second argument.
    const double dt = p.t - q.t;
    const Vec3 dx = p.x - q.x;
    const KillingSample Xp = killing_X(p);
    const KillingSample Xq = killing_X(q);
    const double Xp_sigma = Xp.t_component * (-2.0 * dt) + dot(Xp.x_component, 2.0 * dx);
    const double Xq_sigma = Xq.t_component * (2.0 * dt) + dot(Xq.x_component, -2.0 * dx);
    const double rhs = 0.25 * (Xp.divergence + Xq.divergence) * sigma_distance(p, q);
    return std::abs(Xp_sigma + Xq_sigma - rhs);
}

}  // namespace dcmod
