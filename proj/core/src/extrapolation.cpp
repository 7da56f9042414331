#include "dcmod/extrapolation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dcmod {

namespace {

using cd = std::complex<double>;

// Least-squares solve of the (small, dense) normal equations A^T A c = A^T v
// with real design matrix and complex data.
std::vector<cd> lstsq(const std::vector<std::vector<double>>& cols,
                      const std::vector<cd>& v) {
    const std::size_t m = cols.size();
    const std::size_t n = v.size();
    std::vector<double> G(m * m, 0.0);
    std::vector<cd> rhs(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += cols[i][k] * cols[j][k];
            G[i * m + j] = s;
        }
        cd s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += cols[i][k] * v[k];
        rhs[i] = s;
    }
    // Gaussian elimination with partial pivoting
    std::vector<std::size_t> piv(m);
    for (std::size_t i = 0; i < m; ++i) piv[i] = i;
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t best = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if (std::abs(G[r * m + col]) > std::abs(G[best * m + col])) best = r;
        if (best != col) {
            for (std::size_t c = 0; c < m; ++c) std::swap(G[col * m + c], G[best * m + c]);
            std::swap(rhs[col], rhs[best]);
        }
        const double p = G[col * m + col];
        if (std::abs(p) < 1e-300) throw std::runtime_error("eps fit: singular normal equations");
        for (std::size_t r = col + 1; r < m; ++r) {
            const double f = G[r * m + col] / p;
            if (f == 0.0) continue;
            for (std::size_t c = col; c < m; ++c) G[r * m + c] -= f * G[col * m + c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<cd> c(m, 0.0);
    for (std::size_t i = m; i-- > 0;) {
        cd acc = rhs[i];
        for (std::size_t j = i + 1; j < m; ++j) acc -= G[i * m + j] * c[j];
        c[i] = acc / G[i * m + i];
    }
    return c;
}

cd logfit_limit(const std::vector<EpsSample>& samples, int order) {
    const std::size_t n = samples.size();
    std::vector<std::vector<double>> cols;
    cols.emplace_back(n, 1.0);
    for (int j = 1; j <= order; ++j) {
        std::vector<double> ej(n), ejl(n);
        for (std::size_t k = 0; k < n; ++k) {
            ej[k] = std::pow(samples[k].eps, j);
            ejl[k] = ej[k] * std::log(samples[k].eps);
        }
        cols.push_back(std::move(ej));
        cols.push_back(std::move(ejl));
    }
    std::vector<cd> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = samples[k].value;
    return lstsq(cols, v)[0];
}

cd neville_limit(const std::vector<EpsSample>& samples, cd* prev_diag) {
    const std::size_t n = samples.size();
    std::vector<cd> T(n);
    std::vector<double> X(n);
    for (std::size_t i = 0; i < n; ++i) {
        T[i] = samples[i].value;
        X[i] = samples[i].eps;
    }
    cd diag_prev = T[0];
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i + j < n; ++i) {
            T[i] = ((0.0 - X[i + j]) * T[i] - (0.0 - X[i]) * T[i + 1]) / (X[i] - X[i + j]);
        }
        if (j == n - 2) diag_prev = T[0];
    }
    if (prev_diag) *prev_diag = diag_prev;
    return T[0];
}

}  // namespace

EpsSchedule EpsSchedule::geometric(double eps0, double ratio, int count, int order,
                                   bool log_terms) {
    if (eps0 <= 0.0 || ratio <= 0.0 || ratio >= 1.0 || count < 1)
        throw std::invalid_argument("EpsSchedule::geometric: bad parameters");
    EpsSchedule s;
    s.eps_values.resize(count);
    double e = eps0;
    for (int i = 0; i < count; ++i, e *= ratio) s.eps_values[i] = e;
    s.extrapolation_order = order;
    s.log_terms = log_terms;
    return s;
}

void EpsSchedule::validate() const {
    if (eps_values.empty()) throw std::invalid_argument("EpsSchedule: empty");
    double prev = std::numeric_limits<double>::infinity();
    for (double e : eps_values) {
        if (!(e > 0.0) || !(e < prev))
            throw std::invalid_argument("EpsSchedule: values must be positive and strictly decreasing");
        prev = e;
    }
}

EpsLimit eps_extrapolate(const std::vector<EpsSample>& samples, int order, bool log_terms) {
    if (samples.size() < 3) throw std::invalid_argument("eps_extrapolate: need >= 3 samples");
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (samples[i].eps == samples[i - 1].eps)
            throw std::invalid_argument("eps_extrapolate: eps values must be distinct");

    if (log_terms) {
        const cd full = logfit_limit(samples, order);
        std::vector<EpsSample> head(samples.begin(), samples.end() - 1);
        // refit dropping the smallest eps (samples are ordered decreasing)
        const cd part = (2 * order + 1 <= static_cast<int>(head.size()))
                            ? logfit_limit(head, order)
                            : logfit_limit(head, std::max(1, order - 1));
        return {full, std::abs(full - part)};
    }
    cd prev;
    const cd lim = neville_limit(samples, &prev);
    return {lim, std::abs(lim - prev)};
}

}  // namespace dcmod
