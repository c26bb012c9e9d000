#include "tdscat/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tdscat/directions.hpp"

namespace tdscat {

namespace {

const char* kKnownKeys[] = {
    "medium.epsilon0", "medium.mu0", "medium.kappa", "medium.omega",
    "inclusion.center", "inclusion.rho", "inclusion.volume_factor", "inclusion.epsilon1",
    "inclusion.mu1", "inclusion.m_eps", "inclusion.m_mu",
    "trial.volume_factor", "trial.epsilon2", "trial.mu2", "trial.m_eps", "trial.m_mu",
    "incident.theta", "incident.theta_perp",
    "directions.polar_count", "directions.azimuthal_count",
    "grid.origin", "grid.axis1", "grid.axis2", "grid.axis3", "grid.count1", "grid.count2",
    "grid.count3", "grid.spacing",
    "quadrature.polar", "quadrature.azimuthal",
    "noise.mode", "noise.sigma", "noise.percent", "noise.seed",
    "stats.check", "stats.trials", "stats.seed", "stats.sigma", "stats.separations",
    "stats.trials_alt",
    "fluct.kind", "fluct.box_origin", "fluct.box_extent", "fluct.count", "fluct.sigma",
    "fluct.corr_length",
    "output.pgm",
};

bool known_key(const std::string& k) {
    for (const char* s : kKnownKeys)
        if (k == s) return true;
    return false;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<double> parse_numbers(const std::string& key, const std::string& value,
                                  std::size_t expect) {
    std::istringstream is(value);
    std::vector<double> out;
    double v;
    while (is >> v) out.push_back(v);
    if (!is.eof() || (expect != 0 && out.size() != expect))
        throw ConfigError("config key '" + key + "': expected " + std::to_string(expect) +
                          " numbers, got '" + value + "'");
    return out;
}

Mat3 parse_mat3(const std::string& key, const std::string& value) {
    const auto v = parse_numbers(key, value, 9);
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = v[i * 3 + j];
    return m;
}

}  // namespace

void Config::insert(const std::string& key, const std::string& value, const std::string& origin,
                    int line) {
    if (!known_key(key))
        throw ConfigError(origin + ":" + std::to_string(line) + ": unknown config key '" + key + "'");
    if (kv_.count(key))
        throw ConfigError(origin + ":" + std::to_string(line) + ": duplicate config key '" + key + "'");
    kv_[key] = value;
}

Config Config::parse_text(const std::string& text, const std::string& origin) {
    Config c;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key or value");
        c.insert(key, value, origin, lineno);
    }
    return c;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_text(ss.str(), path);
}

std::string Config::get_string(const std::string& key) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError("missing config key '" + key + "'");
    return it->second;
}

std::string Config::get_string_or(const std::string& key, const std::string& fallback) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key) const {
    return parse_numbers(key, get_string(key), 1)[0];
}

double Config::get_double_or(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

int Config::get_int(const std::string& key) const {
    const double v = get_double(key);
    if (v != std::floor(v)) throw ConfigError("config key '" + key + "' must be an integer");
    return static_cast<int>(v);
}

int Config::get_int_or(const std::string& key, int fallback) const {
    return has(key) ? get_int(key) : fallback;
}

std::uint64_t Config::get_u64_or(const std::string& key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    return static_cast<std::uint64_t>(std::stoull(get_string(key)));
}

Vec3 Config::get_vec3(const std::string& key) const {
    const auto v = parse_numbers(key, get_string(key), 3);
    return {v[0], v[1], v[2]};
}

Vec3 Config::get_vec3_or(const std::string& key, const Vec3& fallback) const {
    return has(key) ? get_vec3(key) : fallback;
}

std::string Config::canonical_text() const {
    std::ostringstream os;
    for (const auto& [k, v] : kv_) os << k << " = " << v << "\n";
    return os.str();
}

std::string Config::fingerprint() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char ch : canonical_text()) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

WaveParameters Config::medium() const {
    const double eps0 = get_double_or("medium.epsilon0", 1.0);
    const double mu0 = get_double_or("medium.mu0", 1.0);
    if (has("medium.kappa") && has("medium.omega"))
        throw ConfigError("specify either medium.kappa or medium.omega, not both");
    if (has("medium.kappa")) return WaveParameters::from_kappa(eps0, mu0, get_double("medium.kappa"));
    if (has("medium.omega")) return WaveParameters::from_omega(eps0, mu0, get_double("medium.omega"));
    throw ConfigError("missing medium.kappa or medium.omega");
}

Inclusion Config::inclusion() const {
    const WaveParameters wp = medium();
    const Vec3 center = get_vec3_or("inclusion.center", {});
    const double rho = get_double("inclusion.rho");
    const double vol = get_double_or("inclusion.volume_factor", 4.0 * pi / 3.0);
    const double e1 = get_double_or("inclusion.epsilon1", wp.epsilon0);
    const double m1 = get_double_or("inclusion.mu1", wp.mu0);
    if (has("inclusion.m_eps") != has("inclusion.m_mu"))
        throw ConfigError("inclusion.m_eps and inclusion.m_mu must be given together");
    if (has("inclusion.m_eps"))
        return Inclusion(center, rho, vol, e1, m1, parse_mat3("inclusion.m_eps", get_string("inclusion.m_eps")),
                         parse_mat3("inclusion.m_mu", get_string("inclusion.m_mu")));
    return Inclusion(center, rho, vol, e1, m1, wp.epsilon0, wp.mu0);
}

TrialInclusion Config::trial() const {
    const WaveParameters wp = medium();
    const double vol = get_double_or("trial.volume_factor", 4.0 * pi / 3.0);
    const double e2 = get_double_or("trial.epsilon2", get_double_or("inclusion.epsilon1", wp.epsilon0));
    const double m2 = get_double_or("trial.mu2", get_double_or("inclusion.mu1", wp.mu0));
    if (has("trial.m_eps") != has("trial.m_mu"))
        throw ConfigError("trial.m_eps and trial.m_mu must be given together");
    if (has("trial.m_eps"))
        return TrialInclusion(vol, e2, m2, parse_mat3("trial.m_eps", get_string("trial.m_eps")),
                              parse_mat3("trial.m_mu", get_string("trial.m_mu")));
    return TrialInclusion(vol, e2, m2, wp.epsilon0, wp.mu0);
}

bool Config::has_direction_set() const { return has("directions.polar_count"); }

DirectionSet Config::direction_set() const {
    return build_direction_set(get_int("directions.polar_count"),
                               get_int("directions.azimuthal_count"));
}

IncidentPlaneWave Config::single_wave() const {
    return IncidentPlaneWave(get_vec3("incident.theta"), get_vec3("incident.theta_perp"), medium());
}

SearchGrid Config::grid() const {
    std::vector<Vec3> axes{get_vec3_or("grid.axis1", {1.0, 0.0, 0.0}),
                           get_vec3_or("grid.axis2", {0.0, 1.0, 0.0})};
    std::vector<int> counts{get_int("grid.count1"), get_int("grid.count2")};
    if (has("grid.axis3") || has("grid.count3")) {
        axes.push_back(get_vec3("grid.axis3"));
        counts.push_back(get_int("grid.count3"));
    }
    return SearchGrid(get_vec3("grid.origin"), std::move(axes), std::move(counts),
                      get_double("grid.spacing"));
}

SphereQuadrature Config::quadrature() const {
    return build_product_quadrature(get_int_or("quadrature.polar", 32),
                                    get_int_or("quadrature.azimuthal", 64));
}

std::optional<MeasurementNoiseSpec> Config::noise() const {
    const std::string mode = get_string_or("noise.mode", "off");
    if (mode == "off") return std::nullopt;
    const std::uint64_t seed = get_u64_or("noise.seed", 0);
    if (mode == "random") return MeasurementNoiseSpec::random(get_double("noise.sigma"), seed);
    if (mode == "relative")
        return MeasurementNoiseSpec::deterministic_relative(get_double("noise.percent"), seed);
    throw ConfigError("noise.mode must be off, random or relative");
}

}  // namespace tdscat
