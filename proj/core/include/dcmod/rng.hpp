#pragma once

// Deterministic random test data.  mt19937_64 with explicit double
// conversion, so streams are identical across platforms and standard
// libraries (std::uniform_real_distribution is not portable).

#include <cstdint>
#include <random>

#include "dcmod/geometry.hpp"

namespace dcmod {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1): 53 mantissa bits of the raw 64-bit draw.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Deterministic Box-Muller (always consumes two draws).
    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
        return r * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    Vec3 unit_vector() {
        const double c = uniform(-1.0, 1.0);
        const double phi = uniform(0.0, 2.0 * 3.14159265358979323846);
        const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        return {s * std::cos(phi), s * std::sin(phi), c};
    }

    /// Uniform point in the open double cone (rejection from the bounding box).
    SpacetimePoint point_in_double_cone(double margin = 0.02) {
        for (;;) {
            SpacetimePoint p{uniform(margin, 2.0 - margin),
                             {uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)}};
            if (std::abs(p.t - 1.0) + norm(p.x) < 1.0 - margin) return p;
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace dcmod
