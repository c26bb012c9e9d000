#ifndef TDSCAT_FORWARD_HPP
#define TDSCAT_FORWARD_HPP

#include <string>
#include <vector>

#include "tdscat/linalg.hpp"
#include "tdscat/quadrature.hpp"
#include "tdscat/wave.hpp"

namespace tdscat {

// Material contrast a^gamma = gamma0/gamma_l - 1.
double contrast(double gamma0, double gamma_l);

// Spherical polarization tensor 3 gamma1 / (2 gamma0 + gamma1) * |B| * I3.
Mat3 polarization_tensor_sphere(double gamma0, double gamma_l, double volume);

// Below this value of rho*kappa the leading-order model is considered valid;
// larger products only raise a warning flag so model breakdown can be probed.
inline constexpr double kAsymptoticValidityThreshold = 0.1;

// True scatterer: D = rho * B_D + z_D with materials (epsilon1, mu1) and
// polarization tensors for both contrasts. Tensors default to the spherical
// closed form; arbitrary SPD tensors may be supplied for non-spherical shapes.
struct Inclusion {
    Vec3 center;
    double scale = 0.0;          // rho
    double volume_factor = 0.0;  // |B_D|
    double epsilon1 = 1.0;
    double mu1 = 1.0;
    Mat3 m_eps;
    Mat3 m_mu;

    Inclusion(Vec3 center_, double scale_, double volume_factor_, double eps1, double mu1_,
              double eps0, double mu0);  // spherical tensors
    Inclusion(Vec3 center_, double scale_, double volume_factor_, double eps1, double mu1_,
              Mat3 m_eps_, Mat3 m_mu_);  // user-supplied tensors

    bool asymptotic_valid(double kappa) const { return scale * kappa < kAsymptoticValidityThreshold; }
};

// Search probe. No center or scale: the trial scale is taken to zero
// analytically inside the indicator.
struct TrialInclusion {
    double volume_factor = 0.0;  // |B_S|
    double epsilon2 = 1.0;
    double mu2 = 1.0;
    Mat3 m_eps;
    Mat3 m_mu;

    TrialInclusion(double volume_factor_, double eps2, double mu2_, double eps0, double mu0);
    TrialInclusion(double volume_factor_, double eps2, double mu2_, Mat3 m_eps_, Mat3 m_mu_);
};

// Incident plane wave E0(x) = i k (theta x theta_perp) e^{i k theta.x}.
struct IncidentPlaneWave {
    Vec3 theta;
    Vec3 theta_perp;
    WaveParameters wp;

    IncidentPlaneWave(Vec3 theta_, Vec3 theta_perp_, WaveParameters wp_);
};

CVec3 incident_field(const IncidentPlaneWave& wave, const Vec3& x);

// curl E0 = kappa^2 theta_perp e^{i kappa theta.x}.
CVec3 incident_curl(const IncidentPlaneWave& wave, const Vec3& x);

// Leading O(rho^3) far-field term of the scattered electric field:
//   -(i k^3 rho^3 / 4pi) [ a1_mu {M_mu (theta x (theta x perp))} x xhat
//                        + a1_eps (I - xhat xhat^T) M_eps (theta x perp) ]
//   * e^{i k (theta - xhat) . z_D}.
// Tangential by construction. Throws on a non-unit observation direction.
CVec3 far_field_asymptotic(const Inclusion& inc, const IncidentPlaneWave& wave, const Vec3& xhat);

// Tangential far-field samples on a quadrature, one block per incident field.
struct FarFieldBlock {
    Vec3 theta;
    Vec3 theta_perp;
    std::vector<CVec3> samples;  // one per quadrature node
};

struct FarFieldData {
    SphereQuadrature quad;
    WaveParameters wp;
    std::vector<FarFieldBlock> blocks;
    bool asymptotic_warning = false;  // rho*kappa exceeded the validity threshold
    std::string fingerprint;          // originating config hash, empty if none
};

FarFieldData synthesize_far_field(const Inclusion& inc, const std::vector<IncidentPlaneWave>& waves,
                                  const SphereQuadrature& quad);

}  // namespace tdscat

#endif
