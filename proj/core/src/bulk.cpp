#include "dcmod/bulk.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "dcmod/bessel.hpp"
#include "dcmod/parallel.hpp"

namespace dcmod {

namespace {
constexpr double kTwoPiPow32 = 15.749609945722419;  // (2 pi)^{3/2}
}

DiscGrid DiscGrid::make(int n_radial, int n_theta, int n_phi) {
    return {gauss_legendre(n_radial, 0.0, 1.0), sphere_grid(n_theta, n_phi)};
}

KGrid KGrid::make(int n_radial, double k_max, int n_theta, int n_phi) {
    return {gauss_legendre(n_radial, 0.0, k_max), sphere_grid(n_theta, n_phi), k_max};
}

CauchyData make_bump_cauchy(const Vec3& center, double radius, double amplitude_f,
                            double amplitude_g, const DiscGrid& grid, double steepness) {
    if (norm(center) + radius >= 1.0)
        throw std::invalid_argument("make_bump_cauchy: support leaves the Cauchy disc");
    CauchyData d;
    d.grid = grid;
    d.support_radius = norm(center) + radius;
    const std::size_t nw = grid.sphere.size();
    d.f.assign(grid.size(), 0.0);
    d.g.assign(grid.size(), 0.0);
    for (std::size_t ir = 0; ir < grid.radial.size(); ++ir) {
        for (std::size_t iw = 0; iw < nw; ++iw) {
            const Vec3 x = grid.radial.nodes[ir] * grid.sphere.directions[iw];
            const double s2 = norm2(x - center) / (radius * radius);
            if (s2 < 1.0) {
                const double b = std::exp(-steepness / (1.0 - s2));
                d.f[ir * nw + iw] = amplitude_f * b;
                d.g[ir * nw + iw] = amplitude_g * b;
            }
        }
    }
    return d;
}

ModeAmplitude modes_from_cauchy(const CauchyData& data, double m, const KGrid& kgrid) {
    if (m < 0.0) throw std::invalid_argument("modes_from_cauchy: mass must be >= 0");

    ModeAmplitude out;
    out.mass = m;
    out.grid = kgrid;
    out.values.assign(kgrid.size(), {});

    const std::size_t nxw = data.grid.sphere.size();
    const std::size_t nxr = data.grid.radial.size();
    const std::size_t nkw = kgrid.sphere.size();

    // angular dot products, shared by all radial pairs
    std::vector<double> dots(nkw * nxw);
    for (std::size_t a = 0; a < nkw; ++a)
        for (std::size_t b = 0; b < nxw; ++b)
            dots[a * nxw + b] = dot(kgrid.sphere.directions[a], data.grid.sphere.directions[b]);

    // x-space weights w_r r^2 w_omega and data combinations
    std::vector<double> wx(nxr * nxw), rr(nxr);
    for (std::size_t ir = 0; ir < nxr; ++ir) {
        rr[ir] = data.grid.radial.nodes[ir];
        for (std::size_t iw = 0; iw < nxw; ++iw)
            wx[ir * nxw + iw] =
                data.grid.radial.weights[ir] * rr[ir] * rr[ir] * data.grid.sphere.weights[iw];
    }

    parallel_for(kgrid.radial.size(), [&](std::size_t ikr) {
        const double k = kgrid.radial.nodes[ikr];
        const double E = std::sqrt(m * m + k * k);
        const double cf = 0.5 * std::sqrt(2.0 * E);
        const double cg = 0.5 * std::sqrt(2.0 / E);
        const std::complex<double> pref =
            std::polar(1.0, E) / kTwoPiPow32;  // e^{iE} (2pi)^{-3/2}
        for (std::size_t ikw = 0; ikw < nkw; ++ikw) {
            std::complex<double> acc = 0.0;
            for (std::size_t ir = 0; ir < nxr; ++ir) {
                const double kr = k * rr[ir];
                for (std::size_t iw = 0; iw < nxw; ++iw) {
                    const std::size_t ix = ir * nxw + iw;
                    const double w = wx[ix];
                    if (w == 0.0 || (data.f[ix] == 0.0 && data.g[ix] == 0.0)) continue;
                    const double phase = -kr * dots[ikw * nxw + iw];
                    const std::complex<double> e = std::polar(1.0, phase);
                    acc += w * e * std::complex<double>(cf * data.f[ix], cg * data.g[ix]);
                }
            }
            out.values[ikr * nkw + ikw] = pref * acc;
        }
    });
    return out;
}

namespace {

ModeAmplitude radial_profile_modes(const Vec3& center, double radius,
                                   double amplitude_f, double amplitude_g, double m,
                                   const KGrid& kgrid,
                                   const std::function<double(double)>& profile) {
    if (m < 0.0) throw std::invalid_argument("bump_modes: mass must be >= 0");
    if (norm(center) + radius >= 1.0)
        throw std::invalid_argument("bump_modes: support leaves the Cauchy disc");

    ModeAmplitude out;
    out.mass = m;
    out.grid = kgrid;
    out.values.assign(kgrid.size(), {});
    RadialTerm term;
    term.center = center;
    term.profile.resize(kgrid.radial.size());

    const Quadrature1D rq = gauss_legendre(400, 0.0, radius);
    std::vector<double> prof(rq.size());
    for (std::size_t ir = 0; ir < rq.size(); ++ir)
        prof[ir] = profile(rq.nodes[ir] * rq.nodes[ir] / (radius * radius));
    const std::size_t nkw = kgrid.sphere.size();
    for (std::size_t ikr = 0; ikr < kgrid.radial.size(); ++ikr) {
        const double k = kgrid.radial.nodes[ikr];
        const double E = std::sqrt(m * m + k * k);
        double B = 0.0;  // (2pi)^{-3/2} (4pi/k) Int prof(r) r sin(kr) dr
        for (std::size_t ir = 0; ir < rq.size(); ++ir)
            B += rq.weights[ir] * prof[ir] * rq.nodes[ir] * std::sin(k * rq.nodes[ir]);
        B *= 4.0 * std::numbers::pi / (k * kTwoPiPow32);
        const std::complex<double> amp =
            std::polar(1.0, E) * 0.5 *
            std::complex<double>(std::sqrt(2.0 * E) * amplitude_f * B,
                                 std::sqrt(2.0 / E) * amplitude_g * B);
        term.profile[ikr] = amp;
        for (std::size_t iw = 0; iw < nkw; ++iw)
            out.values[ikr * nkw + iw] =
                amp * std::polar(1.0, -k * dot(kgrid.sphere.directions[iw], center));
    }
    out.radial_terms.push_back(std::move(term));
    return out;
}

}  // namespace

ModeAmplitude bump_modes(const Vec3& center, double radius, double amplitude_f,
                         double amplitude_g, double steepness, double m,
                         const KGrid& kgrid) {
    return radial_profile_modes(center, radius, amplitude_f, amplitude_g, m, kgrid,
                                [steepness](double s2) {
                                    return std::exp(-steepness / (1.0 - s2));
                                });
}

ModeAmplitude poly_bump_modes(const Vec3& center, double radius, double amplitude_f,
                              double amplitude_g, int p, double m, const KGrid& kgrid) {
    return radial_profile_modes(center, radius, amplitude_f, amplitude_g, m, kgrid,
                                [p](double s2) { return std::pow(1.0 - s2, p); });
}

namespace {

// exact angular reduction for sums of centered radial amplitudes:
// Int dk-hat e^{i k k-hat . r} = 4 pi sinc(k|r|), with the gradient kernel
// d/dr_i [sinc(k rho)] = k sinc'(k rho) r_i / rho.
FieldSample evaluate_fields_radial(const ModeAmplitude& md, const SpacetimePoint& p) {
    std::complex<double> acc_phi = 0.0, acc_dt = 0.0;
    std::complex<double> acc_g[3] = {0.0, 0.0, 0.0};
    for (const RadialTerm& term : md.radial_terms) {
        const Vec3 rel = p.x - term.center;
        const double rho = norm(rel);
        for (std::size_t ikr = 0; ikr < md.grid.radial.size(); ++ikr) {
            const double k = md.grid.radial.nodes[ikr];
            const double E = md.energy(k);
            const double wk = md.grid.radial.weights[ikr] * k * k / std::sqrt(2.0 * E);
            const double x = k * rho;
            double snc, dsnc;  // sinc and its rho-derivative times 1/k
            if (x < 1e-6) {
                snc = 1.0 - x * x / 6.0;
                dsnc = -x / 3.0;
            } else {
                snc = std::sin(x) / x;
                dsnc = (std::cos(x) - snc) / x;
            }
            const std::complex<double> base =
                (4.0 * std::numbers::pi * wk) * term.profile[ikr] *
                std::polar(1.0, -p.t * E);
            acc_phi += base * snc;
            acc_dt += base * snc * std::complex<double>(0.0, -E);
            if (rho > 1e-12) {
                const std::complex<double> gmag = base * (dsnc * k / rho);
                acc_g[0] += gmag * rel.x;
                acc_g[1] += gmag * rel.y;
                acc_g[2] += gmag * rel.z;
            }
        }
    }
    FieldSample out;
    out.phi = 2.0 * acc_phi.real() / kTwoPiPow32;
    out.dphi_dt = 2.0 * acc_dt.real() / kTwoPiPow32;
    out.grad = {2.0 * acc_g[0].real() / kTwoPiPow32, 2.0 * acc_g[1].real() / kTwoPiPow32,
                2.0 * acc_g[2].real() / kTwoPiPow32};
    return out;
}

}  // namespace

FieldSample evaluate_fields(const KGSolution& s, const SpacetimePoint& p) {
    const ModeAmplitude& md = s.modes;
    if (!md.radial_terms.empty()) return evaluate_fields_radial(md, p);
    const std::size_t nkw = md.grid.sphere.size();
    std::complex<double> acc_phi = 0.0, acc_dt = 0.0;
    std::complex<double> acc_gx = 0.0, acc_gy = 0.0, acc_gz = 0.0;
    for (std::size_t ikr = 0; ikr < md.grid.radial.size(); ++ikr) {
        const double k = md.grid.radial.nodes[ikr];
        const double E = md.energy(k);
        const double wk = md.grid.radial.weights[ikr] * k * k / std::sqrt(2.0 * E);
        for (std::size_t iw = 0; iw < nkw; ++iw) {
            const Vec3& kd = md.grid.sphere.directions[iw];
            const std::complex<double> a = md.values[ikr * nkw + iw];
            if (a.real() == 0.0 && a.imag() == 0.0) continue;
            const double phase = k * dot(kd, p.x) - p.t * E;
            const std::complex<double> z =
                (wk * md.grid.sphere.weights[iw]) * a * std::polar(1.0, phase);
            acc_phi += z;
            acc_dt += std::complex<double>(0.0, -E) * z;
            acc_gx += std::complex<double>(0.0, k * kd.x) * z;
            acc_gy += std::complex<double>(0.0, k * kd.y) * z;
            acc_gz += std::complex<double>(0.0, k * kd.z) * z;
        }
    }
    FieldSample out;
    out.phi = 2.0 * acc_phi.real() / kTwoPiPow32;
    out.dphi_dt = 2.0 * acc_dt.real() / kTwoPiPow32;
    out.grad = {2.0 * acc_gx.real() / kTwoPiPow32, 2.0 * acc_gy.real() / kTwoPiPow32,
                2.0 * acc_gz.real() / kTwoPiPow32};
    out.imag_residue = 0.0;  // 2 Re formulation has no imaginary part by construction
    return out;
}

double evaluate_solution(const KGSolution& s, const SpacetimePoint& p) {
    return evaluate_fields(s, p).phi;
}

double evaluate_dt(const KGSolution& s, const SpacetimePoint& p) {
    return evaluate_fields(s, p).dphi_dt;
}

double evaluate_X_derivative(const KGSolution& s, const SpacetimePoint& p) {
    const FieldSample f = evaluate_fields(s, p);
    const KillingSample X = killing_X(p);
    return X.t_component * f.dphi_dt + dot(X.x_component, f.grad);
}

std::vector<FieldSample> evaluate_fields_batch(const KGSolution& s,
                                               const std::vector<SpacetimePoint>& pts) {
    std::vector<FieldSample> out(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) { out[i] = evaluate_fields(s, pts[i]); });
    return out;
}

std::vector<std::vector<FieldSample>> evaluate_fields_pool(
    const std::vector<const KGSolution*>& pool, const std::vector<SpacetimePoint>& pts) {
    if (pool.empty()) return {};
    const ModeAmplitude& ref = pool.front()->modes;
    for (const KGSolution* s : pool) {
        if (s->modes.mass != ref.mass || s->modes.grid.size() != ref.grid.size())
            throw std::invalid_argument("evaluate_fields_pool: mixed grids or masses");
    }
    // radial amplitudes are cheap to evaluate individually
    bool all_radial = true;
    for (const KGSolution* s : pool) all_radial = all_radial && !s->modes.radial_terms.empty();
    if (all_radial) {
        std::vector<std::vector<FieldSample>> out;
        out.reserve(pool.size());
        for (const KGSolution* s : pool) out.push_back(evaluate_fields_batch(*s, pts));
        return out;
    }
    const std::size_t ns = pool.size();
    const std::size_t nkw = ref.grid.sphere.size();
    std::vector<std::vector<FieldSample>> out(ns, std::vector<FieldSample>(pts.size()));

    parallel_for(pts.size(), [&](std::size_t ip) {
        const SpacetimePoint& p = pts[ip];
        std::vector<std::complex<double>> acc(ns * 5, 0.0);  // phi, dt, gx, gy, gz per sol
        for (std::size_t ikr = 0; ikr < ref.grid.radial.size(); ++ikr) {
            const double k = ref.grid.radial.nodes[ikr];
            const double E = ref.energy(k);
            const double wk = ref.grid.radial.weights[ikr] * k * k / std::sqrt(2.0 * E);
            for (std::size_t iw = 0; iw < nkw; ++iw) {
                const Vec3& kd = ref.grid.sphere.directions[iw];
                const double phase = k * dot(kd, p.x) - p.t * E;
                const std::complex<double> ph =
                    (wk * ref.grid.sphere.weights[iw]) * std::polar(1.0, phase);
                const std::size_t idx = ikr * nkw + iw;
                for (std::size_t is = 0; is < ns; ++is) {
                    const std::complex<double> z = pool[is]->modes.values[idx] * ph;
                    acc[is * 5 + 0] += z;
                    acc[is * 5 + 1] += std::complex<double>(0.0, -E) * z;
                    acc[is * 5 + 2] += std::complex<double>(0.0, k * kd.x) * z;
                    acc[is * 5 + 3] += std::complex<double>(0.0, k * kd.y) * z;
                    acc[is * 5 + 4] += std::complex<double>(0.0, k * kd.z) * z;
                }
            }
        }
        for (std::size_t is = 0; is < ns; ++is) {
            FieldSample& f = out[is][ip];
            f.phi = 2.0 * acc[is * 5 + 0].real() / kTwoPiPow32;
            f.dphi_dt = 2.0 * acc[is * 5 + 1].real() / kTwoPiPow32;
            f.grad = {2.0 * acc[is * 5 + 2].real() / kTwoPiPow32,
                      2.0 * acc[is * 5 + 3].real() / kTwoPiPow32,
                      2.0 * acc[is * 5 + 4].real() / kTwoPiPow32};
        }
    });
    return out;
}

std::vector<double> sigma_bulk_matrix(const std::vector<const KGSolution*>& pool,
                                      const DiscGrid& grid) {
    const std::size_t n = pool.size();
    const std::size_t nw = grid.sphere.size();
    const std::size_t nr = grid.radial.size();
    std::vector<SpacetimePoint> pts;
    pts.reserve(nr * nw);
    for (std::size_t ir = 0; ir < nr; ++ir)
        for (std::size_t iw = 0; iw < nw; ++iw)
            pts.push_back({1.0, grid.radial.nodes[ir] * grid.sphere.directions[iw]});
    const auto fields = evaluate_fields_pool(pool, pts);

    std::vector<double> out(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            double acc = 0.0;
            for (std::size_t ir = 0; ir < nr; ++ir) {
                const double r = grid.radial.nodes[ir];
                double ang = 0.0;
                for (std::size_t iw = 0; iw < nw; ++iw) {
                    const std::size_t i = ir * nw + iw;
                    ang += grid.sphere.weights[iw] *
                           (fields[b][i].phi * fields[a][i].dphi_dt -
                            fields[a][i].phi * fields[b][i].dphi_dt);
                }
                acc += grid.radial.weights[ir] * r * r * ang;
            }
            out[a * n + b] = acc;
            out[b * n + a] = -acc;
        }
    }
    return out;
}

double sigma_bulk(const KGSolution& s1, const KGSolution& s2, const DiscGrid& grid) {
    if (s1.modes.mass != s2.modes.mass)
        throw std::invalid_argument("sigma_bulk: mass mismatch");
    const std::size_t nw = grid.sphere.size();
    const std::size_t nr = grid.radial.size();
    std::vector<SpacetimePoint> pts;
    pts.reserve(nr * nw);
    for (std::size_t ir = 0; ir < nr; ++ir)
        for (std::size_t iw = 0; iw < nw; ++iw)
            pts.push_back({1.0, grid.radial.nodes[ir] * grid.sphere.directions[iw]});
    const std::vector<FieldSample> a = evaluate_fields_batch(s1, pts);
    const std::vector<FieldSample> b = evaluate_fields_batch(s2, pts);
    double acc = 0.0;
    for (std::size_t ir = 0; ir < nr; ++ir) {
        const double r = grid.radial.nodes[ir];
        double ang = 0.0;
        for (std::size_t iw = 0; iw < nw; ++iw) {
            const std::size_t i = ir * nw + iw;
            ang += grid.sphere.weights[iw] * (b[i].phi * a[i].dphi_dt - a[i].phi * b[i].dphi_dt);
        }
        acc += grid.radial.weights[ir] * r * r * ang;
    }
    return acc;
}

std::complex<double> vacuum_product(const KGSolution& s1, const KGSolution& s2) {
    const ModeAmplitude& a = s1.modes;
    const ModeAmplitude& b = s2.modes;
    if (a.mass != b.mass) throw std::invalid_argument("vacuum_product: mass mismatch");
    if (a.grid.size() != b.grid.size())
        throw std::invalid_argument("vacuum_product: grid mismatch");

    if (!a.radial_terms.empty() && !b.radial_terms.empty()) {
        // Int dk-hat e^{i k k-hat . (c1 - c2)} = 4 pi sinc(k |c1 - c2|)
        std::complex<double> acc = 0.0;
        for (const RadialTerm& ta : a.radial_terms) {
            for (const RadialTerm& tb : b.radial_terms) {
                const double sep = norm(ta.center - tb.center);
                for (std::size_t ikr = 0; ikr < a.grid.radial.size(); ++ikr) {
                    const double k = a.grid.radial.nodes[ikr];
                    const double x = k * sep;
                    const double snc = (x < 1e-8) ? 1.0 - x * x / 6.0 : std::sin(x) / x;
                    acc += a.grid.radial.weights[ikr] * k * k * 4.0 * std::numbers::pi *
                           snc * std::conj(ta.profile[ikr]) * tb.profile[ikr];
                }
            }
        }
        return acc;
    }

    const std::size_t nkw = a.grid.sphere.size();
    std::complex<double> acc = 0.0;
    for (std::size_t ikr = 0; ikr < a.grid.radial.size(); ++ikr) {
        const double k = a.grid.radial.nodes[ikr];
        const double w = a.grid.radial.weights[ikr] * k * k;
        std::complex<double> ang = 0.0;
        for (std::size_t iw = 0; iw < nkw; ++iw)
            ang += a.grid.sphere.weights[iw] *
                   std::conj(a.values[ikr * nkw + iw]) * b.values[ikr * nkw + iw];
        acc += w * ang;
    }
    return acc;
}

double mu_vacuum(const KGSolution& s1, const KGSolution& s2) {
    return vacuum_product(s1, s2).real();
}

std::complex<double> propagator_complex(double m, std::complex<double> tc, const Vec3& x,
                                        const SpacetimePoint& q) {
    if (tc.imag() == 0.0)
        throw std::domain_error("propagator_complex: unregularized call (Im tc = 0)");
    const std::complex<double> sp = sigma_complex(std::conj(tc), x, q);
    const std::complex<double> sm = sigma_complex(tc, x, q);
    const double pref = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi);
    if (m == 0.0) {
        return std::complex<double>(0.0, pref) * (1.0 / sp - 1.0 / sm);
    }
    const std::complex<double> rp = std::sqrt(sp);
    const std::complex<double> rm = std::sqrt(sm);
    return std::complex<double>(0.0, m * pref) *
           (bessel_K1_complex(m * rp) / rp - bessel_K1_complex(m * rm) / rm);
}

}  // namespace dcmod
