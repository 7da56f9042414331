#pragma once

// Barycentric interpolation and spectral differentiation on arbitrary node
// sets (Gauss-Legendre grids in practice).

#include <span>
#include <vector>

namespace dcmod {

class BarycentricGrid {
public:
    explicit BarycentricGrid(std::vector<double> nodes);

    const std::vector<double>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }

    /// Interpolate samples (on the grid nodes) at query point x.
    double interpolate(std::span<const double> samples, double x) const;

    /// Row of interpolation coefficients at x: p(x) = sum_j c_j f_j.
    void weights_at(double x, std::span<double> out) const;

    /// Dense spectral differentiation matrix (row-major, n x n).
    const std::vector<double>& diff_matrix() const;

    /// Apply the differentiation matrix to samples.
    std::vector<double> derivative(std::span<const double> samples) const;

private:
    std::vector<double> nodes_;
    std::vector<double> bary_;             // barycentric weights (normalized)
    mutable std::vector<double> diff_;     // lazily built
};

}  // namespace dcmod
