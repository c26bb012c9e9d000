#include "tdscat/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tdscat/quadrature.hpp"

namespace tdscat {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_far_field(const std::string& path, const FarFieldData& data) {
    std::ofstream f(path);
    require(static_cast<bool>(f), "cannot open '" + path + "' for writing");
    f << "# tdscat far-field data v1\n";
    f << "# fingerprint " << (data.fingerprint.empty() ? "none" : data.fingerprint) << "\n";
    f << "# medium " << format_double(data.wp.epsilon0) << " " << format_double(data.wp.mu0) << " "
      << format_double(data.wp.omega) << " " << format_double(data.wp.kappa) << "\n";
    f << "# quadrature " << data.quad.polar_order << " " << data.quad.azimuthal_count << "\n";
    f << "# warning " << (data.asymptotic_warning ? 1 : 0) << "\n";
    f << "# blocks " << data.blocks.size() << "\n";
    for (const auto& b : data.blocks) {
        f << "# block " << format_double(b.theta.x) << " " << format_double(b.theta.y) << " "
          << format_double(b.theta.z) << " " << format_double(b.theta_perp.x) << " "
          << format_double(b.theta_perp.y) << " " << format_double(b.theta_perp.z) << "\n";
        for (const auto& s : b.samples) {
            f << format_double(s.x.real()) << ',' << format_double(s.x.imag()) << ','
              << format_double(s.y.real()) << ',' << format_double(s.y.imag()) << ','
              << format_double(s.z.real()) << ',' << format_double(s.z.imag()) << "\n";
        }
    }
    require(static_cast<bool>(f), "write failed for '" + path + "'");
}

FarFieldData read_far_field(const std::string& path) {
    std::ifstream f(path);
    require(static_cast<bool>(f), "cannot open far-field file '" + path + "'");
    std::string line;
    require(std::getline(f, line) && line == "# tdscat far-field data v1",
            "'" + path + "': not a tdscat far-field file");

    auto header = [&](const std::string& tag) {
        require(std::getline(f, line), "'" + path + "': truncated header");
        require(line.rfind("# " + tag, 0) == 0, "'" + path + "': expected '# " + tag + "' header");
        return std::istringstream(line.substr(tag.size() + 3));
    };

    FarFieldData data{SphereQuadrature{}, WaveParameters::from_kappa(1.0, 1.0, 1.0), {}, false, {}};
    {
        auto is = header("fingerprint");
        std::string fp;
        is >> fp;
        data.fingerprint = fp == "none" ? "" : fp;
    }
    {
        auto is = header("medium");
        double e0, m0, om, k;
        require(static_cast<bool>(is >> e0 >> m0 >> om >> k), "'" + path + "': bad medium header");
        data.wp = WaveParameters(e0, m0, om, k);
    }
    {
        auto is = header("quadrature");
        int p, a;
        require(static_cast<bool>(is >> p >> a), "'" + path + "': bad quadrature header");
        data.quad = build_product_quadrature(p, a);
    }
    {
        auto is = header("warning");
        int w;
        require(static_cast<bool>(is >> w), "'" + path + "': bad warning header");
        data.asymptotic_warning = w != 0;
    }
    std::size_t nblocks = 0;
    {
        auto is = header("blocks");
        require(static_cast<bool>(is >> nblocks), "'" + path + "': bad blocks header");
    }
    data.blocks.reserve(nblocks);
    for (std::size_t b = 0; b < nblocks; ++b) {
        auto is = header("block");
        FarFieldBlock block;
        require(static_cast<bool>(is >> block.theta.x >> block.theta.y >> block.theta.z >>
                                  block.theta_perp.x >> block.theta_perp.y >> block.theta_perp.z),
                "'" + path + "': bad block header");
        block.samples.resize(data.quad.size());
        for (auto& s : block.samples) {
            require(std::getline(f, line), "'" + path + "': truncated block");
            double v[6];
            char c;
            std::istringstream row(line);
            require(static_cast<bool>(row >> v[0] >> c >> v[1] >> c >> v[2] >> c >> v[3] >> c >>
                                      v[4] >> c >> v[5]),
                    "'" + path + "': bad sample row");
            s = CVec3{{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}};
        }
        data.blocks.push_back(std::move(block));
    }
    return data;
}

void write_map_csv(const std::string& path, const IndicatorMap& map) {
    std::ofstream f(path);
    require(static_cast<bool>(f), "cannot open '" + path + "' for writing");
    for (const auto& [k, v] : map.meta) f << "# " << k << "=" << v << "\n";
    f << "# columns=x,y,z,value\n";
    for (std::size_t i = 0; i < map.values.size(); ++i) {
        const Vec3 p = map.grid.point(i);
        f << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(p.z) << ','
          << format_double(map.values[i]) << "\n";
    }
    require(static_cast<bool>(f), "write failed for '" + path + "'");
}

void write_map_pgm(const std::string& path, const IndicatorMap& map) {
    require(map.grid.counts.size() == 2, "PGM export needs a 2-axis grid");
    const int rows = map.grid.counts[0], cols = map.grid.counts[1];
    double lo = map.values[0], hi = map.values[0];
    for (double v : map.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = hi > lo ? hi - lo : 1.0;
    std::ofstream f(path, std::ios::binary);
    require(static_cast<bool>(f), "cannot open '" + path + "' for writing");
    f << "P5\n" << cols << " " << rows << "\n255\n";
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const double v = map.values[static_cast<std::size_t>(r) * cols + c];
            const int g = static_cast<int>(255.0 * (v - lo) / span + 0.5);
            f.put(static_cast<char>(g < 0 ? 0 : (g > 255 ? 255 : g)));
        }
    require(static_cast<bool>(f), "write failed for '" + path + "'");
}

}  // namespace tdscat
