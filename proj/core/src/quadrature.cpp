#include "dcmod/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace dcmod {

Quadrature1D gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");

    Quadrature1D q;
    q.nodes.resize(n);
    q.weights.resize(n);

    // Newton iteration on P_n, symmetric nodes computed once per pair.
    const int mid = (n + 1) / 2;
    for (int i = 0; i < mid; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            if (n == 1) { p1 = x; }
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            // p1 = P_n(x), p0 = P_{n-1}(x)
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        // map from [-1,1] to [a,b]; nodes stored in increasing order
        q.nodes[i] = 0.5 * (b - a) * (-x) + 0.5 * (a + b);
        q.nodes[n - 1 - i] = 0.5 * (b - a) * x + 0.5 * (a + b);
        q.weights[i] = 0.5 * (b - a) * w;
        q.weights[n - 1 - i] = 0.5 * (b - a) * w;
    }
    return q;
}

SphereGrid sphere_grid(int n_theta, int n_phi) {
    if (n_theta < 1 || n_phi < 2)
        throw std::invalid_argument("sphere_grid: need n_theta >= 1, n_phi >= 2");

    SphereGrid g;
    g.n_theta = n_theta;
    g.n_phi = n_phi;
    const Quadrature1D ct = gauss_legendre(n_theta, -1.0, 1.0);
    const double wphi = 2.0 * std::numbers::pi / n_phi;
    g.directions.reserve(static_cast<std::size_t>(n_theta) * n_phi);
    g.weights.reserve(static_cast<std::size_t>(n_theta) * n_phi);
    for (int i = 0; i < n_theta; ++i) {
        const double c = ct.nodes[i];
        const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        for (int j = 0; j < n_phi; ++j) {
            const double phi = wphi * j;
            g.directions.push_back({s * std::cos(phi), s * std::sin(phi), c});
            g.weights.push_back(ct.weights[i] * wphi);
        }
    }
    return g;
}

Quadrature1D refined_quadrature(double a, double b, double z, double floor,
                                int n_per_panel, double shrink) {
    if (!(a < b)) throw std::invalid_argument("refined_quadrature: need a < b");
    std::set<double> cuts{a, b};
    if (z > a && z < b && floor > 0.0) {
        cuts.insert(z);
        for (double w = (z - a) * shrink; w > floor; w *= shrink) cuts.insert(z - w);
        for (double w = (b - z) * shrink; w > floor; w *= shrink) cuts.insert(z + w);
        cuts.insert(std::max(a, z - floor));
        cuts.insert(std::min(b, z + floor));
    }
    Quadrature1D out;
    auto it = cuts.begin();
    double lo = *it++;
    for (; it != cuts.end(); ++it) {
        const double hi = *it;
        if (hi - lo < 1e-300) { lo = hi; continue; }
        const Quadrature1D panel = gauss_legendre(n_per_panel, lo, hi);
        out.nodes.insert(out.nodes.end(), panel.nodes.begin(), panel.nodes.end());
        out.weights.insert(out.weights.end(), panel.weights.begin(), panel.weights.end());
        lo = hi;
    }
    return out;
}

}  // namespace dcmod
