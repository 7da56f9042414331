#include "dcmod/modular.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dcmod/fourier.hpp"
#include "dcmod/parallel.hpp"

namespace dcmod {

namespace {
using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
}  // namespace

BoundaryData beta_flow_boundary(const BoundaryData& phi, double tau,
                                const BoundaryOps& ops) {
    // In the coordinate l = ln(u/(1-u)) the flow is the exact translation
    // l -> l + tau.  Shift trigonometrically on the uniform l-grid (the data
    // vanishes at both ends, so the periodic wraparound is negligible) and
    // resample the translated trigonometric interpolant at the u-nodes.
    const ConeGrid& grid = phi.grid;
    const std::size_t nw = grid.sphere.size();
    const std::size_t nu = grid.u.size();
    const std::vector<double>& ell = ops.ell_nodes();
    const std::size_t nell = ell.size();
    const double L = ops.params().ell_L;
    const double dl = 2.0 * L / static_cast<double>(nell);

    BoundaryData out;
    out.grid = grid;
    out.values.assign(phi.values.size(), 0.0);

    // evaluation phases at the u-nodes, shared by all directions
    const int half = static_cast<int>(nell) / 2;
    std::vector<double> ell_of_u(nu);
    for (std::size_t iu = 0; iu < nu; ++iu) {
        const double u = grid.u.nodes[iu];
        ell_of_u[iu] = std::log(u / (1.0 - u));
    }

    // the spectra decay like e^{-pi |h|}; beyond the kept band they are noise
    const double dh = 2.0 * kPi / (static_cast<double>(nell) * dl);
    const int m_keep = std::min<int>(half - 1,
                                     static_cast<int>(std::ceil(1.2 * ops.params().h_keep / dh)));

    parallel_for(nw, [&](std::size_t iw) {
        std::vector<double> samples;
        ops.ell_samples(phi, iw, samples);
        std::vector<cd> buf(samples.begin(), samples.end());
        fft_pow2(buf, +1);  // Y_m = sum_j y_j e^{+2 pi i m j / n}
        // y(l + tau) = (1/n) sum_m Y_m e^{-i h_m (l + tau + L)}, Y_{-m} = conj(Y_m)
        double* o = out.values.data() + iw * nu;
        for (std::size_t iu = 0; iu < nu; ++iu) {
            const double arg0 = ell_of_u[iu] + tau + L;
            if (arg0 < 0.0 || arg0 > 2.0 * L) continue;  // beyond the window: zero
            const cd step = std::polar(1.0, -dh * arg0);
            cd ph = step;
            double acc = buf[0].real();
            for (int m = 1; m <= m_keep; ++m) {
                acc += 2.0 * (buf[static_cast<std::size_t>(m)] * ph).real();
                ph *= step;
            }
            o[iu] = acc / static_cast<double>(nell);
        }
    });
    // the flow fixes u = 1, so compact support away from 1 is preserved
    out.support_cap = std::min(1.0, flow_u(tau, phi.support_cap));
    return out;
}

HSpectrum modular_unitary_hspace(const HSpectrum& spec, double tau, int sign) {
    HSpectrum out = spec;
    const std::size_t nw = spec.sphere.size();
    const std::size_t nh = spec.nh();
    for (std::size_t iw = 0; iw < nw; ++iw)
        for (std::size_t ih = 0; ih < nh; ++ih)
            out.values[iw * nh + ih] *= std::polar(1.0, sign * tau * spec.h[ih]);
    return out;
}

std::vector<double> s_tau(const BoundaryData& phi, const FlowParams& params,
                          const std::vector<SpacetimePoint>& points,
                          const BoundaryOps& ops, const GoursatSpec* spec) {
    const BoundaryData flowed = beta_flow_boundary(phi, params.tau, ops);
    GoursatSpec gs;
    if (spec) gs = *spec;
    gs.mass = params.mass;
    return goursat_solve(flowed, gs, points, ops);
}

std::vector<double> s_tau(const KGSolution& s, double tau,
                          const std::vector<SpacetimePoint>& points,
                          const BoundaryOps& ops) {
    return s_tau(ops.restrict_to_V(s), {tau, s.modes.mass}, points, ops);
}

FlowEndpoint flow_X(const SpacetimePoint& p, double tau, double step) {
    // integrate y' = -X(y), A' = div X(y) from 0 to tau (signed step)
    const int n = std::max(1, static_cast<int>(std::ceil(std::abs(tau) / step)));
    const double h = tau / n;
    double state[5] = {p.t, p.x.x, p.x.y, p.x.z, 0.0};
    auto deriv = [](const double y[5], double out[5]) {
        const SpacetimePoint q{y[0], {y[1], y[2], y[3]}};
        const KillingSample X = killing_X(q);
        out[0] = -X.t_component;
        out[1] = -X.x_component.x;
        out[2] = -X.x_component.y;
        out[3] = -X.x_component.z;
        out[4] = X.divergence;
    };
    double k1[5], k2[5], k3[5], k4[5], tmp[5];
    for (int i = 0; i < n; ++i) {
        deriv(state, k1);
        for (int j = 0; j < 5; ++j) tmp[j] = state[j] + 0.5 * h * k1[j];
        deriv(tmp, k2);
        for (int j = 0; j < 5; ++j) tmp[j] = state[j] + 0.5 * h * k2[j];
        deriv(tmp, k3);
        for (int j = 0; j < 5; ++j) tmp[j] = state[j] + h * k3[j];
        deriv(tmp, k4);
        for (int j = 0; j < 5; ++j)
            state[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
    FlowEndpoint e;
    e.point = {state[0], {state[1], state[2], state[3]}};
    e.log_jacobian = state[4];
    // the flow preserves the closure of D
    if (std::abs(e.point.t - 1.0) + norm(e.point.x) > 1.0 + 1e-9)
        throw std::runtime_error("flow_X: trajectory left the closed double cone");
    return e;
}

double s_tau_massless_bulk(const KGSolution& s, double tau, const SpacetimePoint& p,
                           double step) {
    if (s.modes.mass != 0.0)
        throw std::invalid_argument("s_tau_massless_bulk: mass must be 0");
    const FlowEndpoint e = flow_X(p, tau, step);
    return std::exp(-0.25 * e.log_jacobian) * evaluate_solution(s, e.point);
}

double kms_reality_check(const HSpectrum& spec) {
    // || e^{-pi h-hat} K'psi + j K'psi || / || K'psi || in the w(h)-weighted
    // norm.  The pointwise residual e^{-pi h} |Phi(h) - conj(Phi(-h))| is
    // meaningless in floating point at h << 0 (the weight amplifies rounding
    // noise beyond the analytic decay); the weighted norm is stable because
    // w(h) e^{-2 pi h} stays bounded by w(-h).
    const std::size_t nw = spec.sphere.size();
    const std::size_t nh = spec.nh();
    double num = 0.0, den = 0.0;
    for (std::size_t iw = 0; iw < nw; ++iw) {
        for (std::size_t ih = 0; ih < nh; ++ih) {
            const double h = spec.h[ih];
            // the grid is symmetric: h[nh-1-ih] = -h
            const cd diff = spec.values[iw * nh + ih] -
                            std::conj(spec.values[iw * nh + (nh - 1 - ih)]);
            // w(h) e^{-2 pi h} = w(-h)
            num += spec.sphere.weights[iw] * spec.dh * thermal_weight(-h) * std::norm(diff);
            den += spec.sphere.weights[iw] * spec.dh * thermal_weight(h) *
                   std::norm(spec.values[iw * nh + ih]);
        }
    }
    if (den == 0.0) return 0.0;
    return std::sqrt(num / den);
}

std::complex<double> two_point_flowed(const HSpectrum& a, const HSpectrum& b,
                                      std::complex<double> tau) {
    if (tau.imag() < -1e-12 || tau.imag() > 2.0 * kPi + 1e-12)
        throw std::domain_error("two_point_flowed: Im tau outside [0, 2pi]");
    if (a.nh() != b.nh() || a.values.size() != b.values.size())
        throw std::invalid_argument("two_point_flowed: grid mismatch");
    const std::size_t nw = a.sphere.size();
    const std::size_t nh = a.nh();
    cd total = 0.0;
    for (std::size_t iw = 0; iw < nw; ++iw) {
        cd acc = 0.0;
        for (std::size_t ih = 0; ih < nh; ++ih) {
            const double h = a.h[ih];
            // w(h) e^{i tau h} with the magnitude assembled in log space;
            // for Im tau in [0, 2pi] the exponent is bounded above
            double logmag;
            if (h > 0.0)
                logmag = std::log(2.0 * h) - std::log(-std::expm1(-2.0 * kPi * h)) -
                         tau.imag() * h;
            else if (h < 0.0)
                logmag = std::log(-2.0 * h) + (2.0 * kPi - tau.imag()) * h -
                         std::log(-std::expm1(2.0 * kPi * h)) ;
            else
                logmag = -std::log(kPi);
            const cd weight = std::exp(logmag) * std::polar(1.0, tau.real() * h);
            acc += weight * std::conj(a.values[iw * nh + ih]) * b.values[iw * nh + ih];
        }
        total += a.sphere.weights[iw] * acc * a.dh;
    }
    return total;
}

}  // namespace dcmod
