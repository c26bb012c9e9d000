#ifndef TDSCAT_NOISE_HPP
#define TDSCAT_NOISE_HPP

#include <cstdint>
#include <vector>

#include "tdscat/forward.hpp"
#include "tdscat/imaging.hpp"

// Additive measurement noise on the far-field data and the closed-form
// statistics of its propagation through the Herglotz back-propagator and
// the multi-measurement indicator.

namespace tdscat {

struct MeasurementNoiseSpec {
    enum class Mode { Random, DeterministicRelative };
    Mode mode = Mode::Random;
    double sigma_xi = 0.0;  // noise covariance amplitude (random mode)
    double percent = 0.0;   // relative L2 level in (0, 100] (deterministic mode)
    std::uint64_t seed = 0;

    static MeasurementNoiseSpec random(double sigma, std::uint64_t seed_) {
        return {Mode::Random, sigma, 0.0, seed_};
    }
    static MeasurementNoiseSpec deterministic_relative(double percent_, std::uint64_t seed_) {
        return {Mode::DeterministicRelative, 0.0, percent_, seed_};
    }
};

// One tangential circular-Gaussian noise block. Per node the complex
// components are iid with variance 4 pi sigma^2 / w_k before tangential
// projection; this is the discretization of the delta-correlated model
// E[xi xi*^T] = sigma^2 delta I3 that reproduces the Herglotz noise
// covariance -(4 pi sigma^2 / kappa eps0) ImGamma in the discrete limit.
// `stream` selects an independent substream of the spec seed (one per
// (j, l) measurement block).
std::vector<CVec3> sample_measurement_noise(const SphereQuadrature& quad,
                                            const MeasurementNoiseSpec& spec,
                                            std::uint64_t stream = 0);

// Corrupts every block in place. Random mode adds an independent draw per
// block; deterministic-relative mode rescales the fixed-seed draw so the
// block's quadrature L2 norm is percent/100 of the data block's.
void add_measurement_noise(FarFieldData& data, const MeasurementNoiseSpec& spec);

// Covariance of the Herglotz-propagated noise, Cov(H[xi](z), H[xi](z')):
// -(4 pi sigma^2 / kappa eps0) ImGamma(z, z'). Real-valued; returned as a
// complex dyad.
CMat3 cov_herglotz_noise(const Vec3& z, const Vec3& z2, const WaveParameters& wp, double sigma_xi);

// Covariance of the noise-induced perturbation of the multi-measurement
// indicator between search points z and z':
//   (sigma^2 kappa^4 a2^2 / 2 n eps0^2) M_S ImGamma : ImGamma M_S.
double cov_indicator_measurement(const Vec3& z, const Vec3& z2, const TrialInclusion& trial,
                                 const WaveParameters& wp, double sigma_xi, int n,
                                 ContrastMode mode);

// Closed-form signal-to-noise ratio for a spherical inclusion probed with its
// own contrast: sqrt(6)/(2 pi (2 g0 + g1)) rho^3 |B_D| |g0 - g1| kappa^3 sqrt(n) / sigma.
double snr_closed_form(const Inclusion& inc, const WaveParameters& wp, double sigma_xi, int n,
                       ContrastMode mode);

}  // namespace tdscat

#endif
