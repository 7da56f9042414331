#include "doctest.h"

#include <cmath>

#include "dcmod/goursat.hpp"
#include "test_support.hpp"

using namespace dcmod;
namespace ts = dcmod::testsupport;

namespace {
const std::vector<SpacetimePoint>& probes() {
    static const std::vector<SpacetimePoint> pts = {
        {1.0, {0.0, 0.0, 0.0}},  {0.8, {0.2, 0.0, 0.1}},  {1.3, {0.0, 0.1, 0.0}},
        {0.6, {0.05, -0.1, 0.0}}, {1.5, {0.0, 0.0, 0.25}},
    };
    return pts;
}
}  // namespace

TEST_CASE("zero data reconstructs to zero") {
    const BoundaryOps& ops = ts::small_ops();
    GoursatSpec spec;
    spec.mass = 1.0;
    const std::vector<double> v = goursat_solve(ops.zero_data(), spec, probes(), ops);
    for (double x : v) CHECK(std::abs(x) < 1e-12);
}

TEST_CASE("roundtrip through the boundary") {
    const BoundaryOps& ops = ts::small_ops();
    for (double m : {0.0, 1.0}) {
        GoursatSpec spec;
        spec.mass = m;
        const double res = roundtrip_residual(ts::solution_a(m), spec, probes(), ops);
        CAPTURE(m);
        CHECK(res < 1e-3);
    }
}

TEST_CASE("linearity in the boundary data") {
    const BoundaryOps& ops = ts::small_ops();
    const BoundaryData pa = ops.restrict_to_V(ts::solution_a(1.0));
    const BoundaryData pb = ops.restrict_to_V(ts::solution_b(1.0));
    BoundaryData comb = pa;
    for (std::size_t i = 0; i < comb.values.size(); ++i)
        comb.values[i] = 0.7 * pa.values[i] - 1.3 * pb.values[i];
    comb.support_cap = std::max(pa.support_cap, pb.support_cap);
    GoursatSpec spec;
    spec.mass = 1.0;
    const std::vector<double> va = goursat_solve(pa, spec, probes(), ops);
    const std::vector<double> vb = goursat_solve(pb, spec, probes(), ops);
    const std::vector<double> vc = goursat_solve(comb, spec, probes(), ops);
    double scale = 0.0;
    for (double x : vc) scale = std::max(scale, std::abs(x));
    for (std::size_t i = 0; i < probes().size(); ++i)
        CHECK(std::abs(vc[i] - (0.7 * va[i] - 1.3 * vb[i])) < 1e-8 * scale);
}

TEST_CASE("the same data is valid input for every mass") {
    const BoundaryOps& ops = ts::small_ops();
    const BoundaryData pa = ops.restrict_to_V(ts::solution_a(0.0));
    for (double m : {0.0, 0.7, 1.3}) {
        GoursatSpec spec;
        spec.mass = m;
        const std::vector<double> v = goursat_solve(pa, spec, probes(), ops);
        for (double x : v) CHECK(std::isfinite(x));
    }
}

TEST_CASE("points outside D are rejected") {
    const BoundaryOps& ops = ts::small_ops();
    GoursatSpec spec;
    CHECK_THROWS_AS(
        goursat_solve(ops.zero_data(), spec, {{2.5, {0.0, 0.0, 0.0}}}, ops),
        std::domain_error);
}
