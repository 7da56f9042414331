#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "dcmod/bulk.hpp"
#include "dcmod/modular.hpp"
#include "dcmod/rng.hpp"
#include "test_support.hpp"

using namespace dcmod;
namespace ts = dcmod::testsupport;
using std::numbers::pi;

TEST_CASE("bump Cauchy data") {
    const DiscGrid grid = ts::small_discgrid();
    const CauchyData zero = make_bump_cauchy({}, 0.5, 0.0, 0.0, grid);
    for (double v : zero.f) CHECK(v == 0.0);

    const CauchyData d = make_bump_cauchy({}, 0.5, 2.0, 0.0, grid);
    // value at a grid node inside the support matches the profile
    const std::size_t nw = grid.sphere.size();
    const double r0 = grid.radial.nodes[5];
    const double s2 = r0 * r0 / 0.25;
    CHECK(d.f[5 * nw] == doctest::Approx(2.0 * std::exp(-1.0 / (1.0 - s2))).epsilon(1e-14));
    // vanishes at |x| = 0.95
    for (std::size_t ir = 0; ir < grid.radial.size(); ++ir)
        if (grid.radial.nodes[ir] > 0.5)
            for (std::size_t iw = 0; iw < nw; ++iw) CHECK(d.f[ir * nw + iw] == 0.0);

    CHECK_THROWS_AS(make_bump_cauchy({0.8, 0.0, 0.0}, 0.3, 1.0, 0.0, grid),
                    std::invalid_argument);
}

TEST_CASE("modes_from_cauchy against a direct quadrature oracle") {
    const DiscGrid grid = DiscGrid::make(16, 6, 12);
    const KGrid kg = KGrid::make(8, 12.0, 4, 8);
    const CauchyData d = make_bump_cauchy({0.1, 0.0, 0.0}, 0.35, 1.0, 0.5, grid, 2.0);
    const ModeAmplitude md = modes_from_cauchy(d, 1.0, kg);

    // independent reimplementation of the defining integral at a few k-nodes
    Rng rng(41);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t ikr = static_cast<std::size_t>(rng.uniform(0.0, kg.radial.size()));
        const std::size_t ikw = static_cast<std::size_t>(rng.uniform(0.0, kg.sphere.size()));
        const double k = kg.radial.nodes[ikr];
        const double E = std::sqrt(1.0 + k * k);
        std::complex<double> acc = 0.0;
        for (std::size_t ir = 0; ir < grid.radial.size(); ++ir)
            for (std::size_t iw = 0; iw < grid.sphere.size(); ++iw) {
                const double r = grid.radial.nodes[ir];
                const Vec3 x = r * grid.sphere.directions[iw];
                const double w = grid.radial.weights[ir] * r * r * grid.sphere.weights[iw];
                const std::size_t i = ir * grid.sphere.size() + iw;
                const std::complex<double> integrand =
                    0.5 * (std::sqrt(2.0 * E) * d.f[i] +
                           std::complex<double>(0.0, 1.0) * std::sqrt(2.0 / E) * d.g[i]);
                acc += w * integrand *
                       std::polar(1.0, -k * dot(kg.sphere.directions[ikw], x));
            }
        const std::complex<double> oracle =
            std::polar(1.0, E) * acc / std::pow(2.0 * pi, 1.5);
        const std::complex<double> got = md.values[ikr * kg.sphere.size() + ikw];
        CHECK(std::abs(got - oracle) < 1e-13 * (std::abs(oracle) + 1e-12));
    }

    // zero data -> zero amplitude
    const CauchyData z = make_bump_cauchy({}, 0.3, 0.0, 0.0, grid);
    const ModeAmplitude mz = modes_from_cauchy(z, 1.0, kg);
    for (const auto& v : mz.values) CHECK(std::abs(v) == 0.0);

    CHECK_THROWS_AS(modes_from_cauchy(d, -0.5, kg), std::invalid_argument);
}

TEST_CASE("bump_modes agrees with the generic transform on resolvable grids") {
    // at low k_max the sphere quadratures resolve e^{-ik.x}, so the closed
    //-form angular reduction and the full 3D transform must coincide
    const DiscGrid grid = DiscGrid::make(40, 14, 28);
    const KGrid kg = KGrid::make(24, 8.0, 14, 28);
    const Vec3 c{0.12, 0.0, 0.08};
    const CauchyData d = make_bump_cauchy(c, 0.35, 0.9, -0.4, grid, 4.0);
    const ModeAmplitude generic = modes_from_cauchy(d, 1.0, kg);
    const ModeAmplitude radial = bump_modes(c, 0.35, 0.9, -0.4, 4.0, 1.0, kg);
    double vmax = 0.0, err = 0.0;
    for (std::size_t i = 0; i < generic.values.size(); ++i) {
        vmax = std::max(vmax, std::abs(generic.values[i]));
        err = std::max(err, std::abs(generic.values[i] - radial.values[i]));
    }
    CHECK(err < 2e-4 * vmax);

    // field evaluation through both paths
    KGSolution sg{generic}, sr{radial};
    for (const SpacetimePoint p : {SpacetimePoint{0.9, {0.2, 0.1, 0.0}},
                                   SpacetimePoint{1.2, {0.0, -0.15, 0.3}}}) {
        const FieldSample a = evaluate_fields(sg, p);
        const FieldSample b = evaluate_fields(sr, p);
        CHECK(a.phi == doctest::Approx(b.phi).epsilon(1e-6));
        CHECK(a.dphi_dt == doctest::Approx(b.dphi_dt).epsilon(1e-6));
        CHECK(a.grad.z == doctest::Approx(b.grad.z).epsilon(1e-5));
    }
    // vacuum product through both paths
    CHECK(vacuum_product(sg, sg).real() ==
          doctest::Approx(vacuum_product(sr, sr).real()).epsilon(1e-8));
}

TEST_CASE("mode amplitude peaks near the dominant wavevector") {
    const DiscGrid grid = DiscGrid::make(32, 10, 20);
    const KGrid kg = KGrid::make(48, 16.0, 10, 20);
    // plane wave along z restricted by a bump: dominant wavevector k0 = 7 z
    const double k0 = 7.0;
    CauchyData d = make_bump_cauchy({}, 0.45, 1.0, 0.0, grid, 2.0);
    for (std::size_t ir = 0; ir < grid.radial.size(); ++ir)
        for (std::size_t iw = 0; iw < grid.sphere.size(); ++iw) {
            const Vec3 x = grid.radial.nodes[ir] * grid.sphere.directions[iw];
            d.f[ir * grid.sphere.size() + iw] *= std::cos(k0 * x.z);
        }
    const ModeAmplitude md = modes_from_cauchy(d, 1.0, kg);
    double best = 0.0, best_k = 0.0;
    for (std::size_t ikr = 0; ikr < kg.radial.size(); ++ikr)
        for (std::size_t iw = 0; iw < kg.sphere.size(); ++iw)
            if (std::abs(md.values[ikr * kg.sphere.size() + iw]) > best) {
                best = std::abs(md.values[ikr * kg.sphere.size() + iw]);
                best_k = kg.radial.nodes[ikr];
            }
    CHECK(best_k == doctest::Approx(k0).epsilon(0.25));
}

namespace {
// radial solution with modes built from a 1D transform: the high-k_max
// configuration for the Cauchy roundtrip invariant
KGSolution radial_solution(double m, double radius, double af, double ag,
                           double steep, double kmax, int nkr) {
    const KGrid kg = KGrid::make(nkr, kmax, 96, 2);
    const Quadrature1D rq = gauss_legendre(400, 0.0, radius);
    ModeAmplitude md;
    md.mass = m;
    md.grid = kg;
    md.values.assign(kg.size(), {});
    for (std::size_t ikr = 0; ikr < kg.radial.size(); ++ikr) {
        const double k = kg.radial.nodes[ikr];
        const double E = std::sqrt(m * m + k * k);
        double ft = 0.0;  // (4 pi / k) Int f(r) r sin(kr) dr, unit amplitude
        for (std::size_t ir = 0; ir < rq.size(); ++ir) {
            const double r = rq.nodes[ir];
            const double s2 = r * r / (radius * radius);
            const double prof = std::exp(-steep / (1.0 - s2));
            ft += rq.weights[ir] * prof * r * std::sin(k * r);
        }
        ft *= 4.0 * pi / (k * std::pow(2.0 * pi, 1.5));
        const std::complex<double> amp =
            std::polar(1.0, E) * 0.5 *
            std::complex<double>(std::sqrt(2.0 * E) * af * ft,
                                 std::sqrt(2.0 / E) * ag * ft);
        for (std::size_t iw = 0; iw < kg.sphere.size(); ++iw)
            md.values[ikr * kg.sphere.size() + iw] = amp;
    }
    RadialTerm term;
    term.center = {};
    term.profile.resize(kg.radial.size());
    for (std::size_t ikr = 0; ikr < kg.radial.size(); ++ikr)
        term.profile[ikr] = md.values[ikr * kg.sphere.size()];
    md.radial_terms.push_back(std::move(term));
    return {md};
}
}  // namespace

TEST_CASE("Cauchy roundtrip at t = 1") {
    const double R = 0.5, af = 1.0, ag = 0.7, m = 1.0, steep = 2.0;
    const KGSolution s = radial_solution(m, R, af, ag, steep, 320.0, 512);
    double sup_f = 0.0, sup_g = 0.0;
    for (double r : {0.0, 0.07, 0.15, 0.22, 0.31, 0.4, 0.55, 0.7}) {
        const double s2 = r * r / (R * R);
        const double prof = s2 < 1.0 ? std::exp(-steep / (1.0 - s2)) : 0.0;
        const FieldSample v = evaluate_fields(s, {1.0, {0.0, 0.0, r}});
        sup_f = std::max(sup_f, std::abs(v.phi - af * prof));
        sup_g = std::max(sup_g, std::abs(v.dphi_dt - ag * prof));
    }
    CHECK(sup_f < 1e-4);
    CHECK(sup_g < 1e-4);
}

TEST_CASE("solution support stays causal") {
    // data supported in |x| <= 0.5 at t = 1; points spacelike to the support
    // should carry only the band-limiting ringing
    const KGSolution s = radial_solution(1.0, 0.5, 1.0, 0.4, 2.0, 320.0, 512);
    const double peak = std::abs(evaluate_solution(s, {1.0, {}}));
    double leak = 0.0;
    for (double r : {0.9, 0.95}) {
        // (1, r z-hat) with r > 0.5: sigma > 0 to the support ball
        leak = std::max(leak, std::abs(evaluate_solution(s, {1.0, {0.0, 0.0, r}})));
    }
    CHECK(leak < 1e-3 * peak);
}

TEST_CASE("evaluate_dt cross-checked by finite differences") {
    const KGSolution& s = ts::solution_a(1.0);
    const SpacetimePoint p{0.9, {0.1, -0.05, 0.2}};
    const double d0 = evaluate_dt(s, p);
    double prev_err = 0.0;
    int step = 0;
    for (double h : {0.02, 0.01, 0.005}) {
        const double fd = (evaluate_solution(s, {p.t + h, p.x}) -
                           evaluate_solution(s, {p.t - h, p.x})) / (2.0 * h);
        const double err = std::abs(fd - d0);
        if (step > 0) CHECK(err < 0.35 * prev_err);  // ~ O(h^2)
        prev_err = err;
        ++step;
    }
}

TEST_CASE("evaluate_X_derivative against the flow") {
    const KGSolution& s = ts::solution_a(1.0);
    const SpacetimePoint p{0.8, {0.15, 0.0, -0.1}};
    const double xd = evaluate_X_derivative(s, p);
    // (phi(flow(h, p)) - phi(flow(-h, p))) / 2h -> X(phi)(p)
    double prev = 1e9;
    for (double h : {0.02, 0.01, 0.005}) {
        const SpacetimePoint fp = flow_X(p, -h).point;  // forward flow of X
        const SpacetimePoint bp = flow_X(p, h).point;
        const double fd =
            (evaluate_solution(s, fp) - evaluate_solution(s, bp)) / (2.0 * h);
        const double err = std::abs(fd - xd);
        CHECK(err < prev + 1e-12);
        prev = err;
    }
    CHECK(prev < 5e-4);
    // zero modes -> 0
    const KGSolution z = ts::zeroed(s);
    CHECK(evaluate_X_derivative(z, p) == 0.0);
}

TEST_CASE("sigma_bulk antisymmetry and mode-space identity") {
    const KGSolution& a = ts::solution_a(1.0);
    const KGSolution& b = ts::solution_b(1.0);
    const DiscGrid grid = ts::small_discgrid();
    const double sab = sigma_bulk(a, b, grid);
    const double sba = sigma_bulk(b, a, grid);
    CHECK(std::abs(sab + sba) < 1e-12 * std::abs(sab));
    CHECK(std::abs(sigma_bulk(a, a, grid)) < 1e-12);

    // sigma = -2 Im <phi1, phi2>
    const double s_modes = -2.0 * vacuum_product(a, b).imag();
    CHECK(sab == doctest::Approx(s_modes).epsilon(5e-6));

    CHECK_THROWS_AS(sigma_bulk(ts::solution_a(0.0), b, grid), std::invalid_argument);
}

TEST_CASE("mu_vacuum positivity and Cauchy-Schwarz") {
    const DiscGrid grid = ts::small_discgrid();
    Rng rng(57);
    std::vector<KGSolution> pool;
    for (int i = 0; i < 5; ++i) {
        const Vec3 c = rng.uniform(0.0, 0.25) * rng.unit_vector();
        pool.push_back(ts::make_solution(1.0, c, rng.uniform(0.28, 0.4),
                                         rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)));
    }
    for (const KGSolution& s : pool) CHECK(mu_vacuum(s, s) > 0.0);
    const KGSolution z = ts::zeroed(pool[0]);
    CHECK(mu_vacuum(pool[0], z) == 0.0);

    int pairs = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            const double sig = -2.0 * vacuum_product(pool[i], pool[j]).imag();
            CHECK(sig * sig <=
                  4.0 * mu_vacuum(pool[i], pool[i]) * mu_vacuum(pool[j], pool[j]) *
                      (1.0 + 1e-12));
            ++pairs;
        }
    CHECK(pairs == 10);
}

TEST_CASE("propagator_complex") {
    // spacelike separation: the eps -> 0 limit vanishes (equal branches)
    const SpacetimePoint q{0.2, {0.9, 0.0, 0.0}};
    const Vec3 x{0.0, 0.0, 0.0};
    for (double m : {0.0, 1.0}) {
        const std::complex<double> v = propagator_complex(m, {0.2, -1e-7}, x, q);
        CHECK(std::abs(v) < 1e-5);
    }
    // conjugation symmetry conj(D(tc)) = -D(conj(tc))
    Rng rng(61);
    for (int i = 0; i < 20; ++i) {
        const std::complex<double> tc(rng.uniform(0.3, 1.6), rng.uniform(-0.3, -0.01));
        const Vec3 xx = rng.uniform(0.0, 0.4) * rng.unit_vector();
        const SpacetimePoint qq{rng.uniform(0.1, 0.9), rng.uniform(0.0, 0.8) * rng.unit_vector()};
        for (double m : {0.0, 0.7}) {
            const std::complex<double> a = std::conj(propagator_complex(m, tc, xx, qq));
            const std::complex<double> b = -propagator_complex(m, std::conj(tc), xx, qq);
            CHECK(std::abs(a - b) < 1e-12 * (std::abs(a) + 1e-30));
        }
    }
    // m -> 0 continuity against the massless closed form
    for (int i = 0; i < 10; ++i) {
        const std::complex<double> tc(rng.uniform(0.3, 1.6), -0.05);
        const Vec3 xx = rng.uniform(0.0, 0.3) * rng.unit_vector();
        const SpacetimePoint qq{rng.uniform(0.2, 0.8), rng.uniform(0.0, 0.7) * rng.unit_vector()};
        const std::complex<double> small = propagator_complex(1e-3, tc, xx, qq);
        const std::complex<double> zero = propagator_complex(0.0, tc, xx, qq);
        CHECK(std::abs(small - zero) < 1e-6 * (std::abs(zero) + 1.0));
    }
    CHECK_THROWS_AS(propagator_complex(1.0, {0.5, 0.0}, x, q), std::domain_error);
}

TEST_CASE("Klein-Gordon residual converges at second order") {
    const KGSolution& s = ts::solution_a(1.0);
    const SpacetimePoint p{1.05, {0.12, 0.0, 0.08}};
    auto box_residual = [&](double h) {
        auto f = [&](double t, Vec3 x) { return evaluate_solution(s, {t, x}); };
        const double ddt = (f(p.t + h, p.x) - 2.0 * f(p.t, p.x) + f(p.t - h, p.x)) / (h * h);
        double lap = 0.0;
        for (int d = 0; d < 3; ++d) {
            Vec3 e{};
            (d == 0 ? e.x : d == 1 ? e.y : e.z) = h;
            lap += (f(p.t, p.x + e) - 2.0 * f(p.t, p.x) + f(p.t, p.x - e)) / (h * h);
        }
        // signature -+++: -d_t^2 + lap - m^2 = 0 on solutions
        return std::abs(-ddt + lap - 1.0 * f(p.t, p.x));
    };
    const double r1 = box_residual(0.08);
    const double r2 = box_residual(0.04);
    const double r3 = box_residual(0.02);
    const double order1 = std::log2(r1 / r2);
    const double order2 = std::log2(r2 / r3);
    CHECK(order1 > 1.8);
    CHECK(order2 > 1.8);
}
