#ifndef TDSCAT_CONFIG_HPP
#define TDSCAT_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tdscat/forward.hpp"
#include "tdscat/grid.hpp"
#include "tdscat/noise.hpp"

namespace tdscat {

// Raised for malformed or inconsistent configs; carries file/line context.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat key = value experiment configuration. Keys are dotted paths
// (medium.kappa, inclusion.rho, ...); '#' starts a comment. Unknown keys are
// rejected at parse time so typos surface with a line diagnostic.
class Config {
  public:
    static Config parse_file(const std::string& path);
    static Config parse_text(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& key) const { return kv_.count(key) != 0; }
    std::string get_string(const std::string& key) const;
    std::string get_string_or(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double_or(const std::string& key, double fallback) const;
    int get_int(const std::string& key) const;
    int get_int_or(const std::string& key, int fallback) const;
    std::uint64_t get_u64_or(const std::string& key, std::uint64_t fallback) const;
    Vec3 get_vec3(const std::string& key) const;
    Vec3 get_vec3_or(const std::string& key, const Vec3& fallback) const;

    // FNV-1a 64 over the canonicalized (sorted) key=value lines.
    std::string fingerprint() const;

    // Lossless canonical text (sorted key = value lines).
    std::string canonical_text() const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

    // --- typed experiment views -------------------------------------------
    WaveParameters medium() const;
    Inclusion inclusion() const;
    TrialInclusion trial() const;
    bool has_direction_set() const;
    DirectionSet direction_set() const;
    IncidentPlaneWave single_wave() const;
    SearchGrid grid() const;
    SphereQuadrature quadrature() const;
    std::optional<MeasurementNoiseSpec> noise() const;

  private:
    void insert(const std::string& key, const std::string& value, const std::string& origin,
                int line);
    std::map<std::string, std::string> kv_;
};

}  // namespace tdscat

#endif
