#pragma once

// The boundary symplectic space S(V), the restriction map, and the boundary
// state lambda in its three equivalent representations:
//   kernel:  mu = Re lim_{eps->0+} -(1/pi) Int Phi1 Phi2 / (u-u'-i eps)^2
//   k-space: mu = Re Int_{S2 x R+} 2k conj(Phi1-hat) Phi2-hat
//   h-space: mu = Re Int w(h) conj(Phi1-tilde) Phi2-tilde,
//            w(h) = 2h/(1 - e^{-2 pi h}) = h e^{pi h}/sinh(pi h)
// with the l-coordinate u = 1/(1+e^{-l}), Phi-tilde(h) = (2pi)^{-1/2}
// Int e^{ilh} Phi(l) dl.

#include <complex>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "dcmod/bulk.hpp"
#include "dcmod/extrapolation.hpp"
#include "dcmod/interpolation.hpp"
#include "dcmod/quadrature.hpp"
#include "dcmod/rng.hpp"

namespace dcmod {

/// V = S^2 x (0,1): sphere directions x Gauss u-nodes.
struct ConeGrid {
    SphereGrid sphere;
    Quadrature1D u;

    std::size_t size() const { return sphere.size() * u.size(); }
    static ConeGrid make(int n_theta, int n_phi, int n_u);
};

/// Real samples of Phi = u phi|_V, layout values[iw * nu + iu].
struct BoundaryData {
    ConeGrid grid;
    std::vector<double> values;
    double support_cap = 1.0;  // Phi = 0 for u >= support_cap
};

/// Phi-hat(omega, k) on a Gauss k-grid over (0, k_max].
struct BoundarySpectrum {
    SphereGrid sphere;
    Quadrature1D k;
    std::vector<std::complex<double>> values;  // [iw * nk + ik]
};

/// Phi-tilde(omega, h) on a symmetric uniform h-grid.
struct HSpectrum {
    SphereGrid sphere;
    std::vector<double> h;  // symmetric, ascending, spacing dh
    double dh = 0.0;
    std::vector<std::complex<double>> values;  // [iw * nh + ih]

    std::size_t nh() const { return h.size(); }
};

/// Thermal spectral weight of the boundary one-particle space;
/// w(0) = 1/pi, w(-h) = e^{-2 pi h} w(h).
double thermal_weight(double h);

struct BoundaryParams {
    int n_theta = 16;
    int n_phi = 32;
    int n_u = 96;
    // k-space representation
    double k_max = 400.0;
    int n_k = 768;
    int n_u_fine = 320;  // intermediate rule resolving e^{iku} up to k_max
    // l/h representation
    double ell_L = 26.0;
    int n_ell = 4096;
    double h_keep = 48.0;  // retain |h| <= h_keep
    // kernel representation
    EpsSchedule kernel_sched = EpsSchedule::geometric(0.05, 0.5, 9, 3, /*log*/ true);
    int kernel_outer_nodes = 400;
    double kernel_floor_frac = 0.05;
    double truncation_tol = 1e-10;  // |Phi| at l = +-L relative to max|Phi|
};

/// Grid-bound operations with cached transform matrices.
class BoundaryOps {
public:
    explicit BoundaryOps(BoundaryParams params = {});

    const BoundaryParams& params() const { return params_; }
    const ConeGrid& grid() const { return grid_; }
    const BarycentricGrid& ugrid() const { return ubary_; }

    /// Phi(omega, u) = u phi(u, u omega); support cap detected from the data.
    BoundaryData restrict_to_V(const KGSolution& s) const;

    /// Pool restriction with one shared phase evaluation (same grid and mass).
    std::vector<BoundaryData> restrict_to_V_pool(
        const std::vector<const KGSolution*>& pool) const;

    /// Int_V (Phi2 d_u Phi1 - Phi1 d_u Phi2) du domega, spectral d_u.
    double sigma_boundary(const BoundaryData& a, const BoundaryData& b) const;

    /// d_u Phi on the grid (barycentric differentiation).
    std::vector<double> u_derivative(const BoundaryData& a) const;

    BoundarySpectrum k_transform(const BoundaryData& a) const;

    /// Full complex product Int 2k conj(Phi1-hat) Phi2-hat; the real part is
    /// mu_lambda, and -2 Im equals sigma_V.
    std::complex<double> lambda_product_kspace(const BoundaryData& a,
                                               const BoundaryData& b) const;
    double mu_lambda_kspace(const BoundaryData& a, const BoundaryData& b) const;

    /// Kernel (eps-regularized) representation; throws std::runtime_error if
    /// the extrapolation error estimate is out of proportion to the value.
    double mu_lambda_kernel(const BoundaryData& a, const BoundaryData& b) const;
    double mu_lambda_kernel(const BoundaryData& a, const BoundaryData& b,
                            const EpsSchedule& sched) const;

    /// Resample to the uniform l-grid and transform to h.  Throws
    /// std::runtime_error if |Phi| at l = +-L exceeds the truncation
    /// tolerance relative to max |Phi|.
    HSpectrum ell_resample(const BoundaryData& a) const;

    std::complex<double> lambda_product_hspace(const HSpectrum& a, const HSpectrum& b) const;
    double mu_lambda_hspace(const BoundaryData& a, const BoundaryData& b) const;

    /// lambda(W(Phi)) = exp(-mu_lambda(Phi,Phi)/2), k-space representation.
    double weyl_expectation_lambda(const BoundaryData& a) const;

    /// Both sides of e^{i sigma/2} lambda(W(Phi1+Phi2)): (bilinear expansion,
    /// direct evaluation on the sum).
    std::pair<std::complex<double>, std::complex<double>> weyl_product_check(
        const BoundaryData& a, const BoundaryData& b) const;

    BoundaryData zero_data() const;

    /// Interpolation row at x for Phi = u q with q interpolated on the grid.
    void q_interp_row(double x, std::span<double> out) const;

    /// Per-direction l-grid samples of the data (support-capped), the common
    /// front end of ell_resample and the trigonometric flow shift.
    void ell_samples(const BoundaryData& a, std::size_t iw,
                     std::vector<double>& out) const;

    const std::vector<double>& ell_nodes() const { return ell_nodes_; }
    const std::vector<double>& ell_u() const { return ell_u_; }

private:
    BoundaryParams params_;
    ConeGrid grid_;
    BarycentricGrid ubary_;
    Quadrature1D kgrid_;
    std::vector<std::complex<double>> ktrans_;   // [ik * nu + iu], weights included
    std::vector<double> ell_nodes_;              // l-grid
    std::vector<double> ell_u_;                  // u(l)
    std::vector<double> ell_interp_;             // [il * nu + iu] rows for Phi/u
    // per-eps effective kernel matrices, [ieps][i * nu + j] (weights included)
    std::vector<std::vector<std::complex<double>>> kernel_mats_;

    void build_kernel_matrices();
};

/// Sochockij eps-regularizer independence (test families on an interval):
/// extrapolated values of Int g/(f + i eps h)^2 and Int g/(f + i eps)^2.
struct SochockijResult {
    std::complex<double> with_h;
    std::complex<double> plain;
    double error_estimate;
};
SochockijResult sochockij_compare(const std::function<double(double)>& f,
                                  const std::function<double(double)>& h,
                                  const std::function<double(double)>& g,
                                  double a, double b,
                                  const std::vector<double>& f_zeros,
                                  const EpsSchedule& sched);

/// Random element of S(V): u times a few radial bumps with mild angular
/// modulation, supported away from u = 1.
BoundaryData random_boundary_data(const ConeGrid& grid, Rng& rng, int n_bumps = 2);

/// Random single wide bump, well resolved in the flow coordinate
/// l = ln(u/(1-u)); the flow tests need ~20+ nodes per data width.
BoundaryData smooth_boundary_data(const ConeGrid& grid, Rng& rng);

}  // namespace dcmod
