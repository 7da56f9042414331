#include "dcmod/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dcmod {

namespace {

std::map<std::string, std::string> read_header(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    while (in.peek() == '#') {
        std::getline(in, line);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(1, eq - 1);
        std::string val = line.substr(eq + 1);
        auto strip = [](std::string& s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t\r");
            s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
        };
        strip(key);
        strip(val);
        kv[key] = val;
    }
    return kv;
}

int geti(const std::map<std::string, std::string>& kv, const std::string& k) {
    const auto it = kv.find(k);
    if (it == kv.end()) throw std::runtime_error("csv header: missing key " + k);
    return std::stoi(it->second);
}

double getd(const std::map<std::string, std::string>& kv, const std::string& k) {
    const auto it = kv.find(k);
    if (it == kv.end()) throw std::runtime_error("csv header: missing key " + k);
    return std::stod(it->second);
}

}  // namespace

void save_cauchy_csv(const CauchyData& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out.precision(17);
    out << "# format = dcmod-cauchy-v1\n";
    out << "# n_radial = " << d.grid.radial.size() << "\n";
    out << "# n_theta = " << d.grid.sphere.n_theta << "\n";
    out << "# n_phi = " << d.grid.sphere.n_phi << "\n";
    out << "# support_radius = " << d.support_radius << "\n";
    out << "# columns = ir,iw,f,g\n";
    const std::size_t nw = d.grid.sphere.size();
    for (std::size_t ir = 0; ir < d.grid.radial.size(); ++ir)
        for (std::size_t iw = 0; iw < nw; ++iw)
            out << ir << ',' << iw << ',' << d.f[ir * nw + iw] << ',' << d.g[ir * nw + iw]
                << '\n';
}

CauchyData load_cauchy_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    const auto kv = read_header(in);
    if (kv.count("format") == 0 || kv.at("format") != "dcmod-cauchy-v1")
        throw std::runtime_error("load_cauchy_csv: bad format tag");
    CauchyData d;
    d.grid = DiscGrid::make(geti(kv, "n_radial"), geti(kv, "n_theta"), geti(kv, "n_phi"));
    d.support_radius = getd(kv, "support_radius");
    d.f.assign(d.grid.size(), 0.0);
    d.g.assign(d.grid.size(), 0.0);
    const std::size_t nw = d.grid.sphere.size();
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::size_t ir, iw;
        char c;
        double f, g;
        ss >> ir >> c >> iw >> c >> f >> c >> g;
        d.f[ir * nw + iw] = f;
        d.g[ir * nw + iw] = g;
    }
    return d;
}

void save_modes_csv(const ModeAmplitude& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out.precision(17);
    out << "# format = dcmod-modes-v1\n";
    out << "# mass = " << m.mass << "\n";
    out << "# n_radial = " << m.grid.radial.size() << "\n";
    out << "# k_max = " << m.grid.k_max << "\n";
    out << "# n_theta = " << m.grid.sphere.n_theta << "\n";
    out << "# n_phi = " << m.grid.sphere.n_phi << "\n";
    out << "# columns = ikr,iw,re,im\n";
    const std::size_t nw = m.grid.sphere.size();
    for (std::size_t ikr = 0; ikr < m.grid.radial.size(); ++ikr)
        for (std::size_t iw = 0; iw < nw; ++iw) {
            const std::complex<double> v = m.values[ikr * nw + iw];
            out << ikr << ',' << iw << ',' << v.real() << ',' << v.imag() << '\n';
        }
}

ModeAmplitude load_modes_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    const auto kv = read_header(in);
    if (kv.count("format") == 0 || kv.at("format") != "dcmod-modes-v1")
        throw std::runtime_error("load_modes_csv: bad format tag");
    ModeAmplitude m;
    m.mass = getd(kv, "mass");
    m.grid = KGrid::make(geti(kv, "n_radial"), getd(kv, "k_max"), geti(kv, "n_theta"),
                         geti(kv, "n_phi"));
    m.values.assign(m.grid.size(), {});
    const std::size_t nw = m.grid.sphere.size();
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::size_t ikr, iw;
        char c;
        double re, im;
        ss >> ikr >> c >> iw >> c >> re >> c >> im;
        m.values[ikr * nw + iw] = {re, im};
    }
    return m;
}

void save_boundary_csv(const BoundaryData& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out.precision(17);
    out << "# format = dcmod-boundary-v1\n";
    out << "# n_theta = " << d.grid.sphere.n_theta << "\n";
    out << "# n_phi = " << d.grid.sphere.n_phi << "\n";
    out << "# n_u = " << d.grid.u.size() << "\n";
    out << "# support_cap = " << d.support_cap << "\n";
    out << "# columns = iw,u,value\n";
    const std::size_t nu = d.grid.u.size();
    for (std::size_t iw = 0; iw < d.grid.sphere.size(); ++iw)
        for (std::size_t iu = 0; iu < nu; ++iu)
            out << iw << ',' << d.grid.u.nodes[iu] << ',' << d.values[iw * nu + iu] << '\n';
}

}  // namespace dcmod
