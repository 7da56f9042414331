#include "dcmod/interpolation.hpp"

#include <cmath>
#include <stdexcept>

namespace dcmod {

BarycentricGrid::BarycentricGrid(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    const std::size_t n = nodes_.size();
    if (n < 2) throw std::invalid_argument("BarycentricGrid: need >= 2 nodes");
    // log-scaled products to avoid under/overflow for large n
    std::vector<double> logw(n, 0.0);
    std::vector<int> sign(n, 1);
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        int s = 1;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            const double d = nodes_[j] - nodes_[k];
            acc += std::log(std::abs(d));
            if (d < 0.0) s = -s;
        }
        logw[j] = -acc;
        sign[j] = s;
    }
    double maxlog = logw[0];
    for (double v : logw) maxlog = std::max(maxlog, v);
    bary_.resize(n);
    for (std::size_t j = 0; j < n; ++j) bary_[j] = sign[j] * std::exp(logw[j] - maxlog);
}

double BarycentricGrid::interpolate(std::span<const double> samples, double x) const {
    const std::size_t n = nodes_.size();
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double d = x - nodes_[j];
        if (std::abs(d) < 1e-14) return samples[j];
        const double t = bary_[j] / d;
        num += t * samples[j];
        den += t;
    }
    return num / den;
}

void BarycentricGrid::weights_at(double x, std::span<double> out) const {
    const std::size_t n = nodes_.size();
    double den = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double d = x - nodes_[j];
        if (std::abs(d) < 1e-14) {
            for (std::size_t k = 0; k < n; ++k) out[k] = (k == j) ? 1.0 : 0.0;
            return;
        }
        out[j] = bary_[j] / d;
        den += out[j];
    }
    for (std::size_t j = 0; j < n; ++j) out[j] /= den;
}

const std::vector<double>& BarycentricGrid::diff_matrix() const {
    const std::size_t n = nodes_.size();
    if (diff_.size() == n * n) return diff_;
    diff_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double rowsum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double d = (bary_[j] / bary_[i]) / (nodes_[i] - nodes_[j]);
            diff_[i * n + j] = d;
            rowsum += d;
        }
        diff_[i * n + i] = -rowsum;
    }
    return diff_;
}

std::vector<double> BarycentricGrid::derivative(std::span<const double> samples) const {
    const std::size_t n = nodes_.size();
    const std::vector<double>& D = diff_matrix();
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += D[i * n + j] * samples[j];
        out[i] = acc;
    }
    return out;
}

}  // namespace dcmod
