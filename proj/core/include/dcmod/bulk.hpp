#pragma once

// Klein-Gordon solutions in the double cone, represented by momentum-space
// amplitudes built from Cauchy data on the t = 1 surface.  The amplitude
// phi_hat(k) is the positive-frequency representative
//   phi_hat(k) = e^{iE} (1/2) (sqrt(2E) f_hat(k) + i sqrt(2/E) g_hat(k)),
// and fields are evaluated as
//   phi(t,x) = 2 Re (2pi)^{-3/2} Int dk (2E)^{-1/2} phi_hat(k) e^{i(k.x - tE)}.

#include <complex>
#include <vector>

#include "dcmod/geometry.hpp"
#include "dcmod/quadrature.hpp"

namespace dcmod {

/// Radial x angular quadrature of the ball {|x| < 1} at t = 1.
struct DiscGrid {
    Quadrature1D radial;   // nodes in (0, 1)
    SphereGrid sphere;

    std::size_t size() const { return radial.size() * sphere.size(); }
    static DiscGrid make(int n_radial, int n_theta, int n_phi);
};

/// Compactly supported Cauchy data (f, g) = (phi, d_t phi) at t = 1.
/// Sample layout: values[ir * sphere.size() + iw].
struct CauchyData {
    DiscGrid grid;
    std::vector<double> f;
    std::vector<double> g;
    double support_radius = 0.0;
};

/// Momentum grid: radial Gauss nodes on (0, k_max] x sphere directions.
struct KGrid {
    Quadrature1D radial;
    SphereGrid sphere;
    double k_max = 0.0;

    std::size_t size() const { return radial.size() * sphere.size(); }
    static KGrid make(int n_radial, double k_max, int n_theta, int n_phi);
};

/// One centered-radial component of a mode amplitude:
/// phi_hat(k) = e^{-i k . center} profile(|k|).  For such amplitudes every
/// angular k-integral reduces to a closed form (sinc kernels), which the
/// evaluators use to bypass the sphere-grid quadrature entirely.
struct RadialTerm {
    Vec3 center{};
    std::vector<std::complex<double>> profile;  // on the radial k-nodes
};

struct ModeAmplitude {
    double mass = 0.0;
    KGrid grid;
    std::vector<std::complex<double>> values;  // phi_hat, layout [ikr * nsph + iw]
    /// When non-empty: exact factorization of `values` as a sum of centered
    /// radial components; evaluation and inner products take the fast path.
    std::vector<RadialTerm> radial_terms;

    double energy(double k) const { return std::sqrt(mass * mass + k * k); }
};

/// A solution is its mode amplitude; evaluation is derived.
struct KGSolution {
    ModeAmplitude modes;
};

/// Smooth bump pair A * exp(-steepness/(1-s^2)), s = |x-center|/radius.
/// Steeper bumps have faster momentum tails (the k^2-weighted tail of the
/// standard steepness-1 bump converges slowly; identity checks use 4).
/// Throws std::invalid_argument if the support leaves the unit ball.
CauchyData make_bump_cauchy(const Vec3& center, double radius, double amplitude_f,
                            double amplitude_g, const DiscGrid& grid,
                            double steepness = 1.0);

/// Forward transform of Cauchy data to the mode amplitude.  m >= 0.
ModeAmplitude modes_from_cauchy(const CauchyData& data, double m, const KGrid& kgrid);

/// Mode amplitude of a centered bump pair, with the angular integral done in
/// closed form (radial 1D transform only).  Fills both `values` and
/// `radial_terms`; agrees with modes_from_cauchy on resolvable grids.
ModeAmplitude bump_modes(const Vec3& center, double radius, double amplitude_f,
                         double amplitude_g, double steepness, double m,
                         const KGrid& kgrid);

/// Same for the C^{p-1} polynomial profile A (1 - s^2)^p, whose momentum
/// tail decays like k^{-(p+2)}; at p = 8 the band-limiting ripple is ~1e-5,
/// which the flow-intertwining checks need.
ModeAmplitude poly_bump_modes(const Vec3& center, double radius, double amplitude_f,
                              double amplitude_g, int p, double m, const KGrid& kgrid);

/// Field, time derivative and spatial gradient at a point, in one pass.
struct FieldSample {
    double phi = 0.0;
    double dphi_dt = 0.0;
    Vec3 grad{};
    double imag_residue = 0.0;  // |Im| of the phi quadrature, diagnostics
};

FieldSample evaluate_fields(const KGSolution& s, const SpacetimePoint& p);
double evaluate_solution(const KGSolution& s, const SpacetimePoint& p);
double evaluate_dt(const KGSolution& s, const SpacetimePoint& p);

/// X(phi)(p) from exact mode derivatives.
double evaluate_X_derivative(const KGSolution& s, const SpacetimePoint& p);

/// Batch evaluation (parallel over points).
std::vector<FieldSample> evaluate_fields_batch(const KGSolution& s,
                                               const std::vector<SpacetimePoint>& pts);

/// Pool evaluation: all solutions must share one grid and mass; the phase
/// table is computed once per point and reused across the pool.
/// Layout: out[isol][ipt].
std::vector<std::vector<FieldSample>> evaluate_fields_pool(
    const std::vector<const KGSolution*>& pool, const std::vector<SpacetimePoint>& pts);

/// All pairwise sigma_bulk values of a pool, via one shared disc evaluation.
/// out[i * n + j] = sigma_bulk(pool[i], pool[j], grid).
std::vector<double> sigma_bulk_matrix(const std::vector<const KGSolution*>& pool,
                                      const DiscGrid& grid);

/// Symplectic form on the t = 1 disc: Int (phi2 d_t phi1 - phi1 d_t phi2) d3x.
/// Throws std::invalid_argument on mass mismatch.
double sigma_bulk(const KGSolution& s1, const KGSolution& s2, const DiscGrid& grid);

/// Full vacuum one-particle product <phi_hat1, phi_hat2>; mu_vacuum is its
/// real part and -2 Im equals sigma_bulk.
std::complex<double> vacuum_product(const KGSolution& s1, const KGSolution& s2);
double mu_vacuum(const KGSolution& s1, const KGSolution& s2);

/// Causal propagator at complexified time, Delta_m((tc, x), q):
///   m > 0:  (i m / 4 pi^2) [K1(m sqrt(s+))/sqrt(s+) - K1(m sqrt(s-))/sqrt(s-)]
///   m = 0:  (i / 4 pi^2) [1/s+ - 1/s-]
/// with s+- = sigma(t +- i eps, ...) for tc = t - i eps.  Im(tc) must be
/// nonzero (throws std::domain_error otherwise).
std::complex<double> propagator_complex(double m, std::complex<double> tc,
                                        const Vec3& x, const SpacetimePoint& q);

}  // namespace dcmod
