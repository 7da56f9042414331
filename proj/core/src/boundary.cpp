#include "dcmod/boundary.hpp"

#include <algorithm>
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

double thermal_weight(double h) {
    if (h == 0.0) return 1.0 / kPi;
    if (h > 0.0) return 2.0 * h / (-std::expm1(-2.0 * kPi * h));
    return 2.0 * h * std::exp(2.0 * kPi * h) / std::expm1(2.0 * kPi * h);
}

ConeGrid ConeGrid::make(int n_theta, int n_phi, int n_u) {
    return {sphere_grid(n_theta, n_phi), gauss_legendre(n_u, 0.0, 1.0)};
}

BoundaryOps::BoundaryOps(BoundaryParams params)
    : params_(std::move(params)),
      grid_(ConeGrid::make(params_.n_theta, params_.n_phi, params_.n_u)),
      ubary_(grid_.u.nodes),
      kgrid_(gauss_legendre(params_.n_k, 0.0, params_.k_max)) {
    const std::size_t nu = grid_.u.size();
    const std::size_t nk = kgrid_.size();

    // k-transform rows Phi-hat(k_i) = sum_j M[i,j] Phi_j, assembled through a
    // fine intermediate Gauss grid: the n_u-node grid cannot quadrature
    // e^{iku} up to k_max directly, the interpolated fine rule can.  Off-grid
    // values are always taken from the interpolant of q = Phi/u (times u), so
    // every representation integrates the same continuum object and the O(u)
    // vanishing at the tip is exact.
    ktrans_.assign(nk * nu, {});
    {
        const Quadrature1D fine = gauss_legendre(params_.n_u_fine, 0.0, 1.0);
        const double scale = 1.0 / std::sqrt(2.0 * kPi);
        std::vector<std::vector<double>> R(fine.size(), std::vector<double>(nu));
        for (std::size_t a = 0; a < fine.size(); ++a) q_interp_row(fine.nodes[a], R[a]);
        parallel_for(nk, [&](std::size_t i) {
            for (std::size_t a = 0; a < fine.size(); ++a) {
                const std::complex<double> ph =
                    scale * fine.weights[a] * std::polar(1.0, kgrid_.nodes[i] * fine.nodes[a]);
                for (std::size_t j = 0; j < nu; ++j) ktrans_[i * nu + j] += ph * R[a][j];
            }
        });
    }

    // l-grid and interpolation rows for q = Phi/u (enforces the O(u) behavior
    // of S(V) data at the tip exactly)
    const int nell = params_.n_ell;
    ell_nodes_.resize(nell);
    ell_u_.resize(nell);
    ell_interp_.resize(static_cast<std::size_t>(nell) * nu);
    const double L = params_.ell_L;
    const double dl = 2.0 * L / nell;
    std::vector<double> row(nu);
    for (int il = 0; il < nell; ++il) {
        const double l = -L + il * dl;
        ell_nodes_[il] = l;
        const double uu = 1.0 / (1.0 + std::exp(-l));
        ell_u_[il] = uu;
        ubary_.weights_at(uu, row);
        for (std::size_t j = 0; j < nu; ++j)
            ell_interp_[static_cast<std::size_t>(il) * nu + j] = row[j];
    }

    build_kernel_matrices();
}

void BoundaryOps::q_interp_row(double x, std::span<double> out) const {
    // row of coefficients such that sum_j out[j] Phi_j = x * interp(Phi/u)(x)
    ubary_.weights_at(x, out);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] *= x / grid_.u.nodes[j];
}

void BoundaryOps::build_kernel_matrices() {
    params_.kernel_sched.validate();
    const std::size_t nu = grid_.u.size();
    const Quadrature1D outer = gauss_legendre(params_.kernel_outer_nodes, 0.0, 1.0);
    const std::size_t no = outer.size();

    // interpolation rows of the outer fine grid
    std::vector<double> R(no * nu);
    {
        std::vector<double> row(nu);
        for (std::size_t a = 0; a < no; ++a) {
            q_interp_row(outer.nodes[a], row);
            for (std::size_t j = 0; j < nu; ++j) R[a * nu + j] = row[j];
        }
    }

    kernel_mats_.resize(params_.kernel_sched.eps_values.size());
    parallel_for(kernel_mats_.size(), [&](std::size_t ie) {
        const double eps = params_.kernel_sched.eps_values[ie];
        std::vector<cd> K(nu * nu, cd(0.0));
        std::vector<double> srow(nu);
        std::vector<cd> T(nu);
        for (std::size_t a = 0; a < no; ++a) {
            const double ua = outer.nodes[a];
            const Quadrature1D inner =
                refined_quadrature(0.0, 1.0, ua, std::max(eps * params_.kernel_floor_frac, 1e-9));
            std::fill(T.begin(), T.end(), cd(0.0));
            for (std::size_t b = 0; b < inner.size(); ++b) {
                const cd d = cd(ua - inner.nodes[b], -eps);
                const cd kern = inner.weights[b] / (d * d);
                q_interp_row(inner.nodes[b], srow);
                for (std::size_t j = 0; j < nu; ++j) T[j] += kern * srow[j];
            }
            const double wa = outer.weights[a];
            for (std::size_t i = 0; i < nu; ++i) {
                const double f = wa * R[a * nu + i];
                if (f == 0.0) continue;
                cd* Krow = K.data() + i * nu;
                for (std::size_t j = 0; j < nu; ++j) Krow[j] += f * T[j];
            }
        }
        const double pref = -1.0 / kPi;
        for (cd& v : K) v *= pref;
        kernel_mats_[ie] = std::move(K);
    });
}

namespace {

BoundaryData assemble_restriction(const ConeGrid& grid,
                                  const std::vector<FieldSample>& vals) {
    const std::size_t nw = grid.sphere.size();
    const std::size_t nu = grid.u.size();
    BoundaryData out;
    out.grid = grid;
    out.values.resize(nw * nu);
    double vmax = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const double u = grid.u.nodes[i % nu];
        out.values[i] = u * vals[i].phi;
        vmax = std::max(vmax, std::abs(out.values[i]));
    }
    // support cap: largest u-node carrying data, padded to the next node.
    // Band-limited solutions ring at ~1e-3 of the peak outside the causal
    // shadow, so the detection threshold sits above that level.
    double cap = grid.u.nodes[0];
    for (std::size_t iu = nu; iu-- > 0 && cap == grid.u.nodes[0];) {
        for (std::size_t iw = 0; iw < nw; ++iw)
            if (std::abs(out.values[iw * nu + iu]) > 5e-3 * vmax) {
                cap = grid.u.nodes[std::min(iu + 1, nu - 1)];
                break;
            }
    }
    out.support_cap = std::min(1.0, cap);
    return out;
}

std::vector<SpacetimePoint> cone_points(const ConeGrid& grid) {
    const std::size_t nw = grid.sphere.size();
    const std::size_t nu = grid.u.size();
    std::vector<SpacetimePoint> pts;
    pts.reserve(nw * nu);
    for (std::size_t iw = 0; iw < nw; ++iw)
        for (std::size_t iu = 0; iu < nu; ++iu) {
            const double u = grid.u.nodes[iu];
            pts.push_back({u, u * grid.sphere.directions[iw]});
        }
    return pts;
}

}  // namespace

BoundaryData BoundaryOps::restrict_to_V(const KGSolution& s) const {
    return assemble_restriction(grid_, evaluate_fields_batch(s, cone_points(grid_)));
}

std::vector<BoundaryData> BoundaryOps::restrict_to_V_pool(
    const std::vector<const KGSolution*>& pool) const {
    const auto fields = evaluate_fields_pool(pool, cone_points(grid_));
    std::vector<BoundaryData> out;
    out.reserve(pool.size());
    for (const auto& f : fields) out.push_back(assemble_restriction(grid_, f));
    return out;
}

std::vector<double> BoundaryOps::u_derivative(const BoundaryData& a) const {
    // d_u Phi = q + u d_u q with q = Phi/u: the derivative of the same
    // interpolant every other representation integrates
    const std::size_t nw = grid_.sphere.size();
    const std::size_t nu = grid_.u.size();
    const std::vector<double>& D = ubary_.diff_matrix();
    std::vector<double> out(a.values.size());
    parallel_for(nw, [&](std::size_t iw) {
        const double* v = a.values.data() + iw * nu;
        double* o = out.data() + iw * nu;
        for (std::size_t i = 0; i < nu; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < nu; ++j)
                acc += D[i * nu + j] * (v[j] / grid_.u.nodes[j]);
            o[i] = v[i] / grid_.u.nodes[i] + grid_.u.nodes[i] * acc;
        }
    });
    return out;
}

double BoundaryOps::sigma_boundary(const BoundaryData& a, const BoundaryData& b) const {
    if (a.values.size() != b.values.size())
        throw std::invalid_argument("sigma_boundary: grid mismatch");
    const std::size_t nw = grid_.sphere.size();
    const std::size_t nu = grid_.u.size();
    const std::vector<double> da = u_derivative(a);
    const std::vector<double> db = u_derivative(b);
    double acc = 0.0;
    for (std::size_t iw = 0; iw < nw; ++iw) {
        double dir = 0.0;
        for (std::size_t iu = 0; iu < nu; ++iu) {
            const std::size_t i = iw * nu + iu;
            dir += grid_.u.weights[iu] * (b.values[i] * da[i] - a.values[i] * db[i]);
        }
        acc += grid_.sphere.weights[iw] * dir;
    }
    return acc;
}

BoundarySpectrum BoundaryOps::k_transform(const BoundaryData& a) const {
    const std::size_t nw = grid_.sphere.size();
    const std::size_t nu = grid_.u.size();
    const std::size_t nk = kgrid_.size();
    BoundarySpectrum out;
    out.sphere = grid_.sphere;
    out.k = kgrid_;
    out.values.resize(nw * nk);
    parallel_for(nw, [&](std::size_t iw) {
        const double* v = a.values.data() + iw * nu;
        cd* o = out.values.data() + iw * nk;
        for (std::size_t ik = 0; ik < nk; ++ik) {
            cd acc = 0.0;
            const cd* row = ktrans_.data() + ik * nu;
            for (std::size_t j = 0; j < nu; ++j) acc += row[j] * v[j];
            o[ik] = acc;
        }
    });
    return out;
}

std::complex<double> BoundaryOps::lambda_product_kspace(const BoundaryData& a,
                                                        const BoundaryData& b) const {
    const BoundarySpectrum sa = k_transform(a);
    const BoundarySpectrum sb = k_transform(b);
    const std::size_t nw = grid_.sphere.size();
    const std::size_t nk = kgrid_.size();
    std::vector<cd> per_dir(nw);
    parallel_for(nw, [&](std::size_t iw) {
        cd acc = 0.0;
        for (std::size_t ik = 0; ik < nk; ++ik) {
            const double w = kgrid_.weights[ik] * 2.0 * kgrid_.nodes[ik];
            acc += w * std::conj(sa.values[iw * nk + ik]) * sb.values[iw * nk + ik];
        }
        per_dir[iw] = acc;
    });
    cd total = 0.0;
    for (std::size_t iw = 0; iw < nw; ++iw) total += grid_.sphere.weights[iw] * per_dir[iw];
    return total;
}

double BoundaryOps::mu_lambda_kspace(const BoundaryData& a, const BoundaryData& b) const {
    return lambda_product_kspace(a, b).real();
}

double BoundaryOps::mu_lambda_kernel(const BoundaryData& a, const BoundaryData& b) const {
    return mu_lambda_kernel(a, b, params_.kernel_sched);
}

double BoundaryOps::mu_lambda_kernel(const BoundaryData& a, const BoundaryData& b,
                                     const EpsSchedule& sched) const {
    sched.validate();
    const bool cached = sched.eps_values == params_.kernel_sched.eps_values;
    const std::size_t nw = grid_.sphere.size();
    const std::size_t nu = grid_.u.size();
    const std::size_t ne = sched.eps_values.size();

    if (!cached)
        throw std::invalid_argument(
            "mu_lambda_kernel: schedule must match the one the ops were built with");

    std::vector<EpsSample> samples(ne);
    for (std::size_t ie = 0; ie < ne; ++ie) {
        const std::vector<cd>* K = &kernel_mats_[ie];
        std::vector<cd> per_dir(nw);
        parallel_for(nw, [&](std::size_t iw) {
            const double* va = a.values.data() + iw * nu;
            const double* vb = b.values.data() + iw * nu;
            cd acc = 0.0;
            for (std::size_t i = 0; i < nu; ++i) {
                if (va[i] == 0.0) continue;
                const cd* row = K->data() + i * nu;
                cd inner = 0.0;
                for (std::size_t j = 0; j < nu; ++j) inner += row[j] * vb[j];
                acc += va[i] * inner;
            }
            per_dir[iw] = acc;
        });
        cd total = 0.0;
        for (std::size_t iw = 0; iw < nw; ++iw) total += grid_.sphere.weights[iw] * per_dir[iw];
        samples[ie] = {sched.eps_values[ie], total};
    }
    const EpsLimit lim = eps_extrapolate(samples, sched);
    if (lim.error_estimate > 0.01 * std::abs(lim.limit) + 1e-8)
        throw std::runtime_error("mu_lambda_kernel: extrapolation unstable");
    return lim.limit.real();
}

void BoundaryOps::ell_samples(const BoundaryData& a, std::size_t iw,
                              std::vector<double>& out) const {
    // The interpolant beyond the data support carries only interpolation
    // wiggle, but a hard cutoff there would put a jump into the l-samples
    // (Gibbs ringing in every spectrum); taper smoothly instead.  Beyond the
    // taper the polynomial would extrapolate, so it must reach zero before
    // the last u-node.
    const std::size_t nu = grid_.u.size();
    const std::size_t nell = ell_nodes_.size();
    const double cap = a.support_cap;
    const double taper_w = std::max(1e-6, std::min(0.5 * (1.0 - cap), 0.15));
    out.resize(nell);
    std::vector<double> q(nu);
    for (std::size_t iu = 0; iu < nu; ++iu)
        q[iu] = a.values[iw * nu + iu] / grid_.u.nodes[iu];
    for (std::size_t il = 0; il < nell; ++il) {
        const double uu = ell_u_[il];
        double chi = 1.0;
        if (uu >= cap + taper_w) {
            out[il] = 0.0;
            continue;
        }
        if (uu > cap) {
            const double s = (uu - cap) / taper_w;
            chi = std::exp(-3.0 * s * s / (1.0 - s * s));
        }
        const double* row = ell_interp_.data() + il * nu;
        double acc = 0.0;
        for (std::size_t j = 0; j < nu; ++j) acc += row[j] * q[j];
        out[il] = chi * uu * acc;
    }
}

HSpectrum BoundaryOps::ell_resample(const BoundaryData& a) const {
    const std::size_t nw = grid_.sphere.size();
    const std::size_t nell = ell_nodes_.size();
    const double L = params_.ell_L;
    const double dl = 2.0 * L / static_cast<double>(nell);

    double vmax = 0.0;
    for (double v : a.values) vmax = std::max(vmax, std::abs(v));

    HSpectrum out;
    out.sphere = grid_.sphere;
    out.dh = 2.0 * kPi / (static_cast<double>(nell) * dl);
    const double hkeep = params_.h_keep;
    std::vector<int> keep;
    const int half = static_cast<int>(nell) / 2;
    for (int m = -half + 1; m < half; ++m)
        if (std::abs(m * out.dh) <= hkeep) keep.push_back(m);
    out.h.resize(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) out.h[i] = keep[i] * out.dh;
    out.values.assign(nw * keep.size(), cd(0.0));

    double trunc_max = 0.0;
    std::vector<double> trunc(nw, 0.0);
    parallel_for(nw, [&](std::size_t iw) {
        std::vector<double> samples;
        ell_samples(a, iw, samples);
        trunc[iw] = std::max(std::abs(samples.front()), std::abs(samples.back()));
        std::vector<cd> buf(samples.begin(), samples.end());
        // Phi-tilde(h_m) = (2pi)^{-1/2} dl e^{-i h_m L} sum_j e^{2 pi i m j/N} Phi_j
        fft_pow2(buf, +1);
        const double scale = dl / std::sqrt(2.0 * kPi);
        for (std::size_t i = 0; i < keep.size(); ++i) {
            const int m = keep[i];
            const std::size_t bin = (m >= 0) ? static_cast<std::size_t>(m)
                                             : nell - static_cast<std::size_t>(-m);
            out.values[iw * keep.size() + i] =
                scale * std::polar(1.0, -out.h[i] * L) * buf[bin];
        }
    });
    for (double e : trunc) trunc_max = std::max(trunc_max, e);
    if (vmax > 0.0 && trunc_max > params_.truncation_tol * vmax)
        throw std::runtime_error("ell_resample: support truncated at l = +-L");
    return out;
}

std::complex<double> BoundaryOps::lambda_product_hspace(const HSpectrum& a,
                                                        const HSpectrum& b) const {
    if (a.nh() != b.nh() || a.values.size() != b.values.size())
        throw std::invalid_argument("lambda_product_hspace: grid mismatch");
    const std::size_t nw = a.sphere.size();
    const std::size_t nh = a.nh();
    cd total = 0.0;
    for (std::size_t iw = 0; iw < nw; ++iw) {
        cd acc = 0.0;
        for (std::size_t ih = 0; ih < nh; ++ih)
            acc += thermal_weight(a.h[ih]) * std::conj(a.values[iw * nh + ih]) *
                   b.values[iw * nh + ih];
        total += a.sphere.weights[iw] * acc * a.dh;
    }
    return total;
}

double BoundaryOps::mu_lambda_hspace(const BoundaryData& a, const BoundaryData& b) const {
    return lambda_product_hspace(ell_resample(a), ell_resample(b)).real();
}

double BoundaryOps::weyl_expectation_lambda(const BoundaryData& a) const {
    return std::exp(-0.5 * mu_lambda_kspace(a, a));
}

std::pair<std::complex<double>, std::complex<double>> BoundaryOps::weyl_product_check(
    const BoundaryData& a, const BoundaryData& b) const {
    // lambda(W(Phi1) W(Phi2)) = e^{i sigma/2} lambda(W(Phi1+Phi2)); the left
    // side expands through bilinearity of mu, the right side is evaluated
    // directly on the sum.
    const double mu11 = mu_lambda_kspace(a, a);
    const double mu22 = mu_lambda_kspace(b, b);
    const double mu12 = mu_lambda_kspace(a, b);
    const double sig = sigma_boundary(a, b);
    const cd lhs = std::polar(1.0, 0.5 * sig) *
                   std::exp(-0.5 * mu11 - mu12 - 0.5 * mu22);
    BoundaryData sum;
    sum.grid = a.grid;
    sum.support_cap = std::max(a.support_cap, b.support_cap);
    sum.values.resize(a.values.size());
    for (std::size_t i = 0; i < sum.values.size(); ++i)
        sum.values[i] = a.values[i] + b.values[i];
    const cd rhs = std::polar(1.0, 0.5 * sig) * std::exp(-0.5 * mu_lambda_kspace(sum, sum));
    return {lhs, rhs};
}

BoundaryData BoundaryOps::zero_data() const {
    BoundaryData d;
    d.grid = grid_;
    d.values.assign(grid_.size(), 0.0);
    d.support_cap = grid_.u.nodes[0];
    return d;
}

SochockijResult sochockij_compare(const std::function<double(double)>& f,
                                  const std::function<double(double)>& h,
                                  const std::function<double(double)>& g,
                                  double a, double b,
                                  const std::vector<double>& f_zeros,
                                  const EpsSchedule& sched) {
    sched.validate();
    std::vector<double> zs = f_zeros;
    std::sort(zs.begin(), zs.end());
    // cut [a,b] at midpoints between consecutive zeros; each segment holds one
    std::vector<std::pair<double, double>> segs;
    std::vector<double> seg_zero;
    if (zs.empty()) {
        segs.push_back({a, b});
        seg_zero.push_back(a - 1.0);  // no interior refinement
    } else {
        double lo = a;
        for (std::size_t i = 0; i < zs.size(); ++i) {
            const double hi = (i + 1 < zs.size()) ? 0.5 * (zs[i] + zs[i + 1]) : b;
            segs.push_back({lo, hi});
            seg_zero.push_back(zs[i]);
            lo = hi;
        }
    }
    std::vector<EpsSample> s1(sched.eps_values.size()), s2(sched.eps_values.size());
    for (std::size_t ie = 0; ie < sched.eps_values.size(); ++ie) {
        const double eps = sched.eps_values[ie];
        Quadrature1D q;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            const Quadrature1D part = refined_quadrature(
                segs[i].first, segs[i].second, seg_zero[i], std::max(eps * 0.01, 1e-11));
            q.nodes.insert(q.nodes.end(), part.nodes.begin(), part.nodes.end());
            q.weights.insert(q.weights.end(), part.weights.begin(), part.weights.end());
        }
        cd i1 = 0.0, i2 = 0.0;
        for (std::size_t j = 0; j < q.size(); ++j) {
            const double x = q.nodes[j];
            const double fx = f(x), gx = g(x);
            const cd d1 = cd(fx, eps * h(x));
            const cd d2 = cd(fx, eps);
            i1 += q.weights[j] * gx / (d1 * d1);
            i2 += q.weights[j] * gx / (d2 * d2);
        }
        s1[ie] = {eps, i1};
        s2[ie] = {eps, i2};
    }
    const EpsLimit l1 = eps_extrapolate(s1, sched);
    const EpsLimit l2 = eps_extrapolate(s2, sched);
    return {l1.limit, l2.limit, std::max(l1.error_estimate, l2.error_estimate)};
}

BoundaryData smooth_boundary_data(const ConeGrid& grid, Rng& rng) {
    // single wide C^7 profile u (1-s^2)^8: a polynomial, hence exactly
    // representable on the Gauss grid, and analytic after flowing (the flow
    // map's complex singularities stay well away from [0,1]), which the
    // 1e-6..1e-8 flow tolerances require
    BoundaryData d;
    d.grid = grid;
    const std::size_t nw = grid.sphere.size();
    const std::size_t nu = grid.u.size();
    d.values.assign(nw * nu, 0.0);
    const double c = rng.uniform(0.46, 0.52);
    const double w = rng.uniform(0.34, 0.40);
    const double amp = rng.uniform(0.5, 1.5) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
    const double mod = rng.uniform(0.0, 0.6);
    const Vec3 axis = rng.unit_vector();
    for (std::size_t iw = 0; iw < nw; ++iw) {
        const double ang = 1.0 + mod * dot(grid.sphere.directions[iw], axis);
        for (std::size_t iu = 0; iu < nu; ++iu) {
            const double u = grid.u.nodes[iu];
            const double s = (u - c) / w;
            if (std::abs(s) < 1.0)
                d.values[iw * nu + iu] = amp * u * std::pow(1.0 - s * s, 8) * ang;
        }
    }
    d.support_cap = std::min(0.95, c + w);
    return d;
}

BoundaryData random_boundary_data(const ConeGrid& grid, Rng& rng, int n_bumps) {
    BoundaryData d;
    d.grid = grid;
    const std::size_t nw = grid.sphere.size();
    const std::size_t nu = grid.u.size();
    d.values.assign(nw * nu, 0.0);
    double cap = 0.0;
    struct Bump {
        double c, w, amp, mod;
        Vec3 axis;
    };
    std::vector<Bump> bumps(n_bumps);
    for (Bump& b : bumps) {
        b.c = rng.uniform(0.3, 0.55);
        b.w = rng.uniform(0.2, 0.3);
        b.amp = rng.uniform(-1.0, 1.0);
        b.mod = rng.uniform(0.0, 0.8);
        b.axis = rng.unit_vector();
        cap = std::max(cap, b.c + b.w);
    }
    for (std::size_t iw = 0; iw < nw; ++iw) {
        const Vec3& w = grid.sphere.directions[iw];
        for (std::size_t iu = 0; iu < nu; ++iu) {
            const double u = grid.u.nodes[iu];
            double val = 0.0;
            for (const Bump& b : bumps) {
                const double s = (u - b.c) / b.w;
                if (std::abs(s) < 1.0)
                    val += b.amp * std::exp(-1.0 / (1.0 - s * s)) *
                           (1.0 + b.mod * dot(w, b.axis));
            }
            d.values[iw * nu + iu] = u * val;
        }
    }
    d.support_cap = std::min(0.95, cap);
    return d;
}

}  // namespace dcmod
