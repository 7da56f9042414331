#pragma once

// Gauss-Legendre rules, product sphere grids, and composite panels refined
// toward an interior singularity.  Shared by every integral in the library.

#include <cstddef>
#include <vector>

#include "dcmod/geometry.hpp"

namespace dcmod {

struct Quadrature1D {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

/// Gauss-Legendre rule with n nodes on [a, b].  Exact for polynomials of
/// degree <= 2n-1.  Throws std::invalid_argument for n < 1 or a >= b.
Quadrature1D gauss_legendre(int n, double a, double b);

/// Product grid on the unit sphere: Gauss-Legendre in cos(theta) times a
/// uniform periodic rule in phi.  Sum of weights = 4 pi.
struct SphereGrid {
    std::vector<Vec3> directions;
    std::vector<double> weights;
    int n_theta = 0;
    int n_phi = 0;

    std::size_t size() const { return directions.size(); }
};

SphereGrid sphere_grid(int n_theta, int n_phi);

/// Composite Gauss panels on [a, b], refined geometrically toward the
/// interior point z down to panel width `floor`.  `n_per_panel` Gauss nodes
/// per panel.  Used for kernels that concentrate at z as a regulator -> 0.
Quadrature1D refined_quadrature(double a, double b, double z, double floor,
                                int n_per_panel = 10, double shrink = 0.5);

}  // namespace dcmod
