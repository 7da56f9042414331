#pragma once

// Causal geometry of the unit double cone D = {|t-1| + |x| < 1} in Minkowski
// space (signature -+++), light-cone coordinates, and the conformal Killing
// field X whose flow preserves D and its lower null boundary V.

#include <array>
#include <cmath>
#include <complex>

namespace dcmod {

using cplx = std::complex<double>;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double norm2(const Vec3& v) { return dot(v, v); }

/// Event (t, x) in the Minkowski frame adapted to the unit double cone.
struct SpacetimePoint {
    double t = 0.0;
    Vec3 x{};
};

/// Light-cone coordinates u = (t+|x|)/2, v = (t-|x|)/2, omega = x/|x|.
struct LightconeCoord {
    double u = 0.0;
    double v = 0.0;
    Vec3 omega{};
};

/// The conformal Killing field X at a point: components and divergence.
struct KillingSample {
    double t_component = 0.0;
    Vec3 x_component{};
    double divergence = 0.0;  // div X = 4(t-1)
};

/// Throws std::domain_error at the spatial origin, where omega is undefined.
LightconeCoord to_lightcone(const SpacetimePoint& p);

/// Inverse map t = u+v, x = (u-v) omega; valid for u >= v.
SpacetimePoint from_lightcone(const LightconeCoord& lc);

/// Signed squared geodesic distance sigma(p,q) = -(t-t')^2 + |x-x'|^2.
double sigma_distance(const SpacetimePoint& p, const SpacetimePoint& q);

/// sigma with complexified time of the first argument.
cplx sigma_complex(cplx tc, const Vec3& x, const SpacetimePoint& q);

bool in_double_cone(const SpacetimePoint& p);

/// X^t = (t^2+|x|^2)/2 - t, X^x = (t-1) x, div X = 4(t-1).
KillingSample killing_X(const SpacetimePoint& p);

/// Flow of X restricted to V: u -> u / (u + e^tau (1-u)).
/// Throws std::domain_error if u is outside [0,1].
double flow_u(double tau, double u);

/// Cone cutoff u*(p, omega) = (t^2-|x|^2) / (2(t - omega.x)), the unique root
/// of sigma(p, (u, u omega)) = 0.  Requires p in D.
double u_star(const SpacetimePoint& p, const Vec3& omega);

/// Gradient of u* with respect to (t, x) at fixed omega.
struct UStarGradient {
    double dt = 0.0;
    Vec3 dx{};
};
UStarGradient u_star_gradient(const SpacetimePoint& p, const Vec3& omega);

/// Residual of the conformal identity
///   X_p(sigma) + X_q(sigma) = (1/4)(div X(p) + div X(q)) sigma(p,q),
/// computed with analytic gradients of sigma.
double conformal_identity_residual(const SpacetimePoint& p, const SpacetimePoint& q);

}  // namespace dcmod
