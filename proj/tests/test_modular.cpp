#include "doctest.h"

#include <cmath>
#include <numbers>

#include "dcmod/modular.hpp"
#include "test_support.hpp"

using namespace dcmod;
namespace ts = dcmod::testsupport;
using std::numbers::pi;

TEST_CASE("beta flow on boundary data") {
    const BoundaryOps& ops = ts::small_ops();
    Rng rng(7);
    const BoundaryData d = smooth_boundary_data(ops.grid(), rng);

    // identity at tau = 0
    const BoundaryData d0 = beta_flow_boundary(d, 0.0, ops);
    double err = 0.0, vmax = 0.0;
    for (std::size_t i = 0; i < d.values.size(); ++i) {
        err = std::max(err, std::abs(d0.values[i] - d.values[i]));
        vmax = std::max(vmax, std::abs(d.values[i]));
    }
    CHECK(err < 1e-10 * vmax);

    // group law
    const BoundaryData a = beta_flow_boundary(beta_flow_boundary(d, 0.4, ops), -0.9, ops);
    const BoundaryData b = beta_flow_boundary(d, -0.5, ops);
    err = 0.0;
    for (std::size_t i = 0; i < d.values.size(); ++i)
        err = std::max(err, std::abs(a.values[i] - b.values[i]));
    CHECK(err < 1e-8 * vmax);

    // support stays away from u = 1
    for (double tau : {-1.0, 0.5, 1.0})
        CHECK(beta_flow_boundary(d, tau, ops).support_cap < 1.0);
}

TEST_CASE("beta flow preserves the symplectic form") {
    const BoundaryOps& ops = ts::small_ops();
    Rng rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const BoundaryData a = smooth_boundary_data(ops.grid(), rng);
        const BoundaryData b = smooth_boundary_data(ops.grid(), rng);
        const double s0 = ops.sigma_boundary(a, b);
        for (double tau : {-0.8, 0.3, 1.1}) {
            const double s1 = ops.sigma_boundary(beta_flow_boundary(a, tau, ops),
                                                 beta_flow_boundary(b, tau, ops));
            CHECK(std::abs(s1 - s0) < 1e-6 * std::max(1.0, std::abs(s0)));
        }
    }
}

TEST_CASE("modular unitary intertwines the flow (Eq. ONE)") {
    const BoundaryOps& ops = ts::small_ops();
    Rng rng(13);
    const BoundaryData d = smooth_boundary_data(ops.grid(), rng);
    const HSpectrum base = ops.ell_resample(d);
    for (double tau : {-0.7, 0.37, 1.2}) {
        const HSpectrum flowed = ops.ell_resample(beta_flow_boundary(d, tau, ops));
        const HSpectrum rotated = modular_unitary_hspace(base, tau);  // e^{-i tau h}
        double err = 0.0, vmax = 0.0;
        for (std::size_t i = 0; i < base.values.size(); ++i) {
            err = std::max(err, std::abs(flowed.values[i] - rotated.values[i]));
            vmax = std::max(vmax, std::abs(base.values[i]));
        }
        CAPTURE(tau);
        CHECK(err < 1e-6 * vmax);
    }
    // tau = 0 is the identity; phases preserve the weighted norm
    const HSpectrum r0 = modular_unitary_hspace(base, 0.0);
    for (std::size_t i = 0; i < base.values.size(); ++i)
        CHECK(std::abs(r0.values[i] - base.values[i]) == 0.0);
    const HSpectrum r1 = modular_unitary_hspace(base, 2.3);
    CHECK(ops.lambda_product_hspace(r1, r1).real() ==
          doctest::Approx(ops.lambda_product_hspace(base, base).real()).epsilon(1e-12));
}

TEST_CASE("massless bulk flow") {
    const KGSolution& s = ts::solution_a(0.0);
    const SpacetimePoint p{0.9, {0.1, 0.0, 0.2}};
    CHECK(s_tau_massless_bulk(s, 0.0, p) ==
          doctest::Approx(evaluate_solution(s, p)).epsilon(1e-12));

    // flow from a point near the lower tip stays in the closed cone
    const FlowEndpoint e = flow_X({0.05, {0.0, 0.0, 0.02}}, 2.0);
    CHECK(std::abs(e.point.t - 1.0) + norm(e.point.x) <= 1.0 + 1e-9);

    // step-halving consistency of the RK4 integrator
    const FlowEndpoint c1 = flow_X(p, 0.8, 1e-3);
    const FlowEndpoint c2 = flow_X(p, 0.8, 5e-4);
    CHECK(std::abs(c1.point.t - c2.point.t) < 1e-12);
    CHECK(std::abs(c1.log_jacobian - c2.log_jacobian) < 1e-12);
}

TEST_CASE("restriction intertwines the massless flow (Thm 3.8)") {
    const BoundaryOps& ops = ts::small_ops();
    const KGSolution& s = ts::poly_solution(0.0);
    const BoundaryData base = ops.restrict_to_V(s);
    const double tau = 0.6;
    const BoundaryData flowed = beta_flow_boundary(base, tau, ops);
    double vmax = 0.0;
    for (double v : flowed.values) vmax = std::max(vmax, std::abs(v));
    // compare u * (beta_tau phi)(u, u w) with the flowed boundary data
    double err = 0.0;
    const std::size_t nu = ops.grid().u.size();
    for (std::size_t iw = 0; iw < ops.grid().sphere.size(); iw += 23) {
        for (std::size_t iu = 4; iu < nu; iu += 9) {
            const double u = ops.grid().u.nodes[iu];
            const SpacetimePoint p{u, u * ops.grid().sphere.directions[iw]};
            if (!in_double_cone({p.t + 1e-9, p.x * (1.0 - 1e-9)})) continue;
            const double bulk = u * s_tau_massless_bulk(s, tau, p);
            err = std::max(err, std::abs(bulk - flowed.values[iw * nu + iu]));
        }
    }
    CHECK(err < 1e-4 * vmax);
}

TEST_CASE("s_tau through the boundary matches the massless geometric flow") {
    const BoundaryOps& ops = ts::small_ops();
    const KGSolution& s = ts::poly_solution(0.0);
    const std::vector<SpacetimePoint> pts = {{1.0, {0.1, 0.0, 0.0}},
                                             {0.85, {0.0, 0.15, 0.1}}};
    for (double tau : {-0.5, 0.5}) {
        const std::vector<double> via_boundary = s_tau(s, tau, pts, ops);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double geometric = s_tau_massless_bulk(s, tau, pts[i]);
            CAPTURE(tau);
            CHECK(std::abs(via_boundary[i] - geometric) < 2e-3);
        }
    }
}

TEST_CASE("lambda invariance under the flow") {
    const BoundaryOps& ops = ts::small_ops();
    Rng rng(17);
    const BoundaryData d = smooth_boundary_data(ops.grid(), rng);
    const double w0 = ops.weyl_expectation_lambda(d);
    for (double tau : {-1.0, 0.4, 1.0}) {
        const double w1 = ops.weyl_expectation_lambda(beta_flow_boundary(d, tau, ops));
        CHECK(std::abs(w1 - w0) < 1e-5);
    }
}

TEST_CASE("KMS reality condition") {
    const BoundaryOps& ops = ts::small_ops();
    Rng rng(19);
    const BoundaryData d = random_boundary_data(ops.grid(), rng);
    HSpectrum hs = ops.ell_resample(d);
    CHECK(kms_reality_check(hs) < 1e-8 * 1.0);

    const HSpectrum hz = ops.ell_resample(ops.zero_data());
    CHECK(kms_reality_check(hz) == 0.0);

    // negative control: breaking reality must show up
    HSpectrum bad = hs;
    bad.values[bad.values.size() / 3] += std::complex<double>(0.0, 0.05);
    CHECK(kms_reality_check(bad) > 1e-4);
}

TEST_CASE("two-point function on the KMS strip") {
    const BoundaryOps& ops = ts::small_ops();
    Rng rng(23);
    const BoundaryData da = random_boundary_data(ops.grid(), rng);
    const BoundaryData db = random_boundary_data(ops.grid(), rng);
    const HSpectrum a = ops.ell_resample(da);
    const HSpectrum b = ops.ell_resample(db);

    // tau = 0 reproduces the h-space product
    const std::complex<double> f0 = two_point_flowed(a, b, 0.0);
    const std::complex<double> prod = ops.lambda_product_hspace(a, b);
    CHECK(std::abs(f0 - prod) < 1e-12 * std::abs(prod));

    // bounded on a grid over the strip
    for (double re : {-1.0, 0.0, 1.5})
        for (double im : {0.0, 1.0, pi, 2.0 * pi}) {
            const std::complex<double> v = two_point_flowed(a, b, {re, im});
            CHECK(std::isfinite(std::abs(v)));
            CHECK(std::abs(v) < 1e3);
        }

    // KMS boundary identity: F(tau + 2 pi i) = G(-tau) with swapped arguments
    for (double tau : {-0.6, 0.3, 1.0}) {
        const std::complex<double> lhs = two_point_flowed(a, b, {tau, 2.0 * pi});
        const std::complex<double> swapped_neg = two_point_flowed(b, a, {-tau, 0.0});
        const std::complex<double> swapped_pos = two_point_flowed(b, a, {tau, 0.0});
        CHECK(std::abs(lhs - swapped_neg) < 1e-4 * std::max(1.0, std::abs(lhs)));
        // the opposite pairing does not match in general
        if (std::abs(swapped_pos - swapped_neg) > 1e-6)
            CHECK(std::abs(lhs - swapped_pos) > std::abs(lhs - swapped_neg));
    }

    CHECK_THROWS_AS(two_point_flowed(a, b, {0.0, -0.5}), std::domain_error);
    CHECK_THROWS_AS(two_point_flowed(a, b, {0.0, 7.0}), std::domain_error);
}

TEST_CASE("mu_lambda invariance through s_tau data") {
    const BoundaryOps& ops = ts::small_ops();
    const KGSolution& s = ts::poly_solution(0.0);
    const BoundaryData base = ops.restrict_to_V(s);
    const double mu0 = ops.mu_lambda_kspace(base, base);
    for (double tau : {-0.8, 0.8}) {
        const double mu1 =
            ops.mu_lambda_kspace(beta_flow_boundary(base, tau, ops),
                                 beta_flow_boundary(base, tau, ops));
        CHECK(std::abs(mu1 - mu0) < 1e-4 * std::abs(mu0));
    }
}
