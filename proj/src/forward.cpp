#include "tdscat/forward.hpp"

#include <cmath>
#include <stdexcept>

namespace tdscat {

double contrast(double gamma0, double gamma_l) {
    if (!(gamma0 > 0.0) || !(gamma_l > 0.0))
        throw std::invalid_argument("contrast: material constants must be positive");
    return gamma0 / gamma_l - 1.0;
}

Mat3 polarization_tensor_sphere(double gamma0, double gamma_l, double volume) {
    if (!(gamma0 > 0.0) || !(gamma_l > 0.0) || !(volume > 0.0))
        throw std::invalid_argument("polarization_tensor_sphere: inputs must be positive");
    return Mat3::identity() * (3.0 * gamma_l / (2.0 * gamma0 + gamma_l) * volume);
}

namespace {

void check_inclusion_common(double scale, double volume_factor, double eps, double mu,
                            const Mat3& m_eps, const Mat3& m_mu, bool has_scale) {
    if (has_scale && !(scale > 0.0)) throw std::invalid_argument("inclusion: scale must be positive");
    if (!(volume_factor > 0.0))
        throw std::invalid_argument("inclusion: volume factor must be positive");
    if (!(eps > 0.0) || !(mu > 0.0))
        throw std::invalid_argument("inclusion: material constants must be positive");
    if (!is_symmetric_positive_definite(m_eps) || !is_symmetric_positive_definite(m_mu))
        throw std::invalid_argument("inclusion: polarization tensors must be symmetric positive definite");
}

}  // namespace

Inclusion::Inclusion(Vec3 center_, double scale_, double volume_factor_, double eps1, double mu1_,
                     double eps0, double mu0)
    : Inclusion(center_, scale_, volume_factor_, eps1, mu1_,
                polarization_tensor_sphere(eps0, eps1, volume_factor_),
                polarization_tensor_sphere(mu0, mu1_, volume_factor_)) {}

Inclusion::Inclusion(Vec3 center_, double scale_, double volume_factor_, double eps1, double mu1_,
                     Mat3 m_eps_, Mat3 m_mu_)
    : center(center_), scale(scale_), volume_factor(volume_factor_), epsilon1(eps1), mu1(mu1_),
      m_eps(m_eps_), m_mu(m_mu_) {
    check_inclusion_common(scale, volume_factor, epsilon1, mu1, m_eps, m_mu, true);
}

TrialInclusion::TrialInclusion(double volume_factor_, double eps2, double mu2_, double eps0,
                               double mu0)
    : TrialInclusion(volume_factor_, eps2, mu2_,
                     polarization_tensor_sphere(eps0, eps2, volume_factor_),
                     polarization_tensor_sphere(mu0, mu2_, volume_factor_)) {}

TrialInclusion::TrialInclusion(double volume_factor_, double eps2, double mu2_, Mat3 m_eps_,
                               Mat3 m_mu_)
    : volume_factor(volume_factor_), epsilon2(eps2), mu2(mu2_), m_eps(m_eps_), m_mu(m_mu_) {
    check_inclusion_common(1.0, volume_factor, epsilon2, mu2, m_eps, m_mu, false);
}

IncidentPlaneWave::IncidentPlaneWave(Vec3 theta_, Vec3 theta_perp_, WaveParameters wp_)
    : theta(theta_), theta_perp(theta_perp_), wp(wp_) {
    if (std::abs(norm(theta) - 1.0) > 1e-12 || std::abs(norm(theta_perp) - 1.0) > 1e-12 ||
        std::abs(dot(theta, theta_perp)) > 1e-12)
        throw std::invalid_argument("IncidentPlaneWave: theta, theta_perp must be orthonormal");
}

CVec3 incident_field(const IncidentPlaneWave& wave, const Vec3& x) {
    const double k = wave.wp.kappa;
    const cplx phase = std::polar(1.0, k * dot(wave.theta, x));
    return (cplx(0.0, k) * phase) * CVec3(cross(wave.theta, wave.theta_perp));
}

CVec3 incident_curl(const IncidentPlaneWave& wave, const Vec3& x) {
    const double k = wave.wp.kappa;
    const cplx phase = std::polar(1.0, k * dot(wave.theta, x));
    return (k * k * phase) * CVec3(wave.theta_perp);
}

CVec3 far_field_asymptotic(const Inclusion& inc, const IncidentPlaneWave& wave, const Vec3& xhat) {
    if (std::abs(norm(xhat) - 1.0) > 1e-12)
        throw std::invalid_argument("far_field_asymptotic: observation direction must be unit");
    const auto& wp = wave.wp;
    const double a1_mu = contrast(wp.mu0, inc.mu1);
    const double a1_eps = contrast(wp.epsilon0, inc.epsilon1);
    const Vec3 q = cross(wave.theta, wave.theta_perp);
    const Vec3 tq = cross(wave.theta, q);

    Vec3 term;  // both contributions are real apart from the common phase
    if (a1_mu != 0.0) term += cross(inc.m_mu * tq, xhat) * a1_mu;
    if (a1_eps != 0.0) {
        const Vec3 me = inc.m_eps * q;
        term += (me - xhat * dot(xhat, me)) * a1_eps;
    }
    const double k = wp.kappa;
    const cplx amp = cplx(0.0, -k * k * k * inc.scale * inc.scale * inc.scale / (4.0 * pi));
    const cplx phase = std::polar(1.0, k * dot(wave.theta - xhat, inc.center));
    return (amp * phase) * CVec3(term);
}

FarFieldData synthesize_far_field(const Inclusion& inc, const std::vector<IncidentPlaneWave>& waves,
                                  const SphereQuadrature& quad) {
    if (waves.empty()) throw std::invalid_argument("synthesize_far_field: no incident fields");
    if (quad.size() == 0) throw std::invalid_argument("synthesize_far_field: empty quadrature");
    for (const auto& w : waves)
        if (w.wp.kappa != waves.front().wp.kappa || w.wp.epsilon0 != waves.front().wp.epsilon0 ||
            w.wp.mu0 != waves.front().wp.mu0)
            throw std::invalid_argument("synthesize_far_field: inconsistent wave parameters");

    FarFieldData data{quad, waves.front().wp, {}, !inc.asymptotic_valid(waves.front().wp.kappa), {}};
    data.blocks.reserve(waves.size());
    for (const auto& w : waves) {
        FarFieldBlock block{w.theta, w.theta_perp, {}};
        block.samples.reserve(quad.size());
        for (const auto& xhat : quad.nodes) block.samples.push_back(far_field_asymptotic(inc, w, xhat));
        data.blocks.push_back(std::move(block));
    }
    return data;
}

}  // namespace tdscat
