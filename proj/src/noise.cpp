#include "tdscat/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "tdscat/green.hpp"
#include "tdscat/rng.hpp"

namespace tdscat {

namespace {

// Unit-amplitude tangential circular Gaussian block: component variance
// 4 pi / w_k, then projected onto the tangent plane at each node.
std::vector<CVec3> unit_noise_block(const SphereQuadrature& quad, std::uint64_t stream_seed) {
    NormalSampler g(stream_seed);
    std::vector<CVec3> block(quad.size());
    for (std::size_t k = 0; k < quad.size(); ++k) {
        const double s = std::sqrt(2.0 * pi / quad.weights[k]);  // per real part
        CVec3 v(cplx(s * g(), s * g()), cplx(s * g(), s * g()), cplx(s * g(), s * g()));
        const CVec3 n(quad.nodes[k]);
        block[k] = v - dot(n, v) * n;  // tangential projection
    }
    return block;
}

double block_l2_norm(const SphereQuadrature& quad, const std::vector<CVec3>& samples) {
    double s = 0.0;
    for (std::size_t k = 0; k < quad.size(); ++k) {
        const auto& v = samples[k];
        s += quad.weights[k] * (std::norm(v.x) + std::norm(v.y) + std::norm(v.z));
    }
    return std::sqrt(s);
}

}  // namespace

std::vector<CVec3> sample_measurement_noise(const SphereQuadrature& quad,
                                            const MeasurementNoiseSpec& spec,
                                            std::uint64_t stream) {
    if (spec.mode == MeasurementNoiseSpec::Mode::DeterministicRelative)
        throw std::invalid_argument(
            "sample_measurement_noise: deterministic-relative mode requires data; use add_measurement_noise");
    if (spec.sigma_xi < 0.0) throw std::invalid_argument("sample_measurement_noise: sigma_xi < 0");
    if (spec.sigma_xi == 0.0) return std::vector<CVec3>(quad.size());
    auto block = unit_noise_block(quad, derive_stream(spec.seed, stream));
    for (auto& v : block) v = spec.sigma_xi * v;
    return block;
}

void add_measurement_noise(FarFieldData& data, const MeasurementNoiseSpec& spec) {
    if (spec.mode == MeasurementNoiseSpec::Mode::Random) {
        if (spec.sigma_xi == 0.0) return;
        for (std::size_t b = 0; b < data.blocks.size(); ++b) {
            const auto noise = sample_measurement_noise(data.quad, spec, b);
            auto& samples = data.blocks[b].samples;
            for (std::size_t k = 0; k < samples.size(); ++k) samples[k] += noise[k];
        }
        return;
    }
    if (!(spec.percent > 0.0) || spec.percent > 100.0)
        throw std::invalid_argument("add_measurement_noise: percent must be in (0, 100]");
    for (std::size_t b = 0; b < data.blocks.size(); ++b) {
        auto draw = unit_noise_block(data.quad, derive_stream(spec.seed, b));
        auto& samples = data.blocks[b].samples;
        const double target = spec.percent / 100.0 * block_l2_norm(data.quad, samples);
        const double got = block_l2_norm(data.quad, draw);
        if (got == 0.0) throw std::runtime_error("add_measurement_noise: degenerate noise draw");
        const double scale = target / got;
        for (std::size_t k = 0; k < samples.size(); ++k) samples[k] += scale * draw[k];
    }
}

CMat3 cov_herglotz_noise(const Vec3& z, const Vec3& z2, const WaveParameters& wp, double sigma_xi) {
    const double c = -4.0 * pi * sigma_xi * sigma_xi / (wp.kappa * wp.epsilon0);
    return CMat3(im_dyadic_green(z, z2, wp) * c);
}

double cov_indicator_measurement(const Vec3& z, const Vec3& z2, const TrialInclusion& trial,
                                 const WaveParameters& wp, double sigma_xi, int n,
                                 ContrastMode mode) {
    if (n < 1) throw std::invalid_argument("cov_indicator_measurement: n must be >= 1");
    double a2;
    Mat3 ms;
    if (mode == ContrastMode::Permittivity) {
        if (trial.mu2 != wp.mu0)
            throw std::invalid_argument("cov_indicator_measurement: permittivity-only trial required");
        a2 = contrast(wp.epsilon0, trial.epsilon2);
        ms = trial.m_eps;
    } else {
        if (trial.epsilon2 != wp.epsilon0)
            throw std::invalid_argument("cov_indicator_measurement: permeability-only trial required");
        a2 = contrast(wp.mu0, trial.mu2);
        ms = trial.m_mu;
    }
    const Mat3 g = im_dyadic_green(z, z2, wp);
    const double k4 = wp.kappa * wp.kappa * wp.kappa * wp.kappa;
    return sigma_xi * sigma_xi * k4 * a2 * a2 / (2.0 * n * wp.epsilon0 * wp.epsilon0) *
           contract(ms * g, g * ms);
}

namespace {

bool is_spherical_tensor(const Mat3& m, double expected) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double want = i == j ? expected : 0.0;
            if (std::abs(m(i, j) - want) > 1e-12 * std::abs(expected)) return false;
        }
    return true;
}

}  // namespace

double snr_closed_form(const Inclusion& inc, const WaveParameters& wp, double sigma_xi, int n,
                       ContrastMode mode) {
    if (!(sigma_xi > 0.0)) throw std::invalid_argument("snr: sigma_xi must be positive");
    if (n < 1) throw std::invalid_argument("snr: n must be >= 1");
    double g0, g1;
    const Mat3& m = mode == ContrastMode::Permittivity ? inc.m_eps : inc.m_mu;
    if (mode == ContrastMode::Permittivity) {
        if (inc.mu1 != wp.mu0) throw std::invalid_argument("snr: permittivity-only contrast required");
        g0 = wp.epsilon0;
        g1 = inc.epsilon1;
    } else {
        if (inc.epsilon1 != wp.epsilon0)
            throw std::invalid_argument("snr: permeability-only contrast required");
        g0 = wp.mu0;
        g1 = inc.mu1;
    }
    if (!is_spherical_tensor(m, 3.0 * g1 / (2.0 * g0 + g1) * inc.volume_factor))
        throw std::invalid_argument("snr: spherical inclusion required");
    const double rho3 = inc.scale * inc.scale * inc.scale;
    const double k3 = wp.kappa * wp.kappa * wp.kappa;
    return std::sqrt(6.0) / (2.0 * pi * (2.0 * g0 + g1)) * rho3 * inc.volume_factor *
           std::abs(g0 - g1) * k3 * std::sqrt(static_cast<double>(n)) / sigma_xi;
}

}  // namespace tdscat
