#ifndef TDSCAT_MEDIUM_HPP
#define TDSCAT_MEDIUM_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "tdscat/forward.hpp"
#include "tdscat/imaging.hpp"

// Weak random medium fluctuations under the Born approximation: voxelized
// stationary Gaussian fields, the clutter error operators they induce on the
// Herglotz field, and the analytic speckle covariances of the perturbed
// indicator.

namespace tdscat {

enum class FluctuationKind { Permeability, Permittivity };

struct VoxelBox {
    Vec3 origin;                  // corner
    Vec3 extent;                  // edge lengths, all > 0
    std::array<int, 3> counts{};  // voxels per axis, all >= 1

    std::size_t voxel_count() const {
        return static_cast<std::size_t>(counts[0]) * counts[1] * counts[2];
    }
    Vec3 voxel_size() const {
        return {extent.x / counts[0], extent.y / counts[1], extent.z / counts[2]};
    }
    double voxel_volume() const {
        const Vec3 h = voxel_size();
        return h.x * h.y * h.z;
    }
    Vec3 voxel_center(std::size_t flat) const;
    bool contains(const Vec3& p) const;
};

// One realization of a compactly supported fluctuation field (values live on
// the voxel grid and are zero outside the box).
struct MediumFluctuation {
    FluctuationKind kind = FluctuationKind::Permeability;
    VoxelBox box;
    std::vector<double> values;  // voxel-center samples
    double sigma = 0.0;
    double correlation_length = 0.0;
    double sample_std = 0.0;
    bool sample_std_ok = true;  // within 20% of sigma (statistical check)
};

// Stationary Gaussian field with squared-exponential covariance
// C(x,y) = sigma^2 exp(-|x-y|^2 / ell^2), sampled at voxel centers via a
// cached Cholesky factor so repeated draws are cheap.
class FluctuationModel {
  public:
    FluctuationModel(VoxelBox box, double sigma, double correlation_length);

    MediumFluctuation draw(FluctuationKind kind, std::uint64_t seed) const;

    double covariance(const Vec3& x, const Vec3& y) const;
    const VoxelBox& box() const { return box_; }

  private:
    VoxelBox box_;
    double sigma_;
    double ell_;
    std::shared_ptr<const std::vector<double>> chol_;  // lower triangle, row-packed
};

MediumFluctuation generate_medium_fluctuation(FluctuationKind kind, const VoxelBox& box,
                                              double sigma, double correlation_length,
                                              std::uint64_t seed);

// Clutter error operator for permeability fluctuations eta:
//   H_eta[E](z) = -(kappa/eps0) Int ImGamma(z,y) E(y) eta(y) dy
// (midpoint voxel rule, E the reference incident field).
CVec3 clutter_herglotz_mu(const MediumFluctuation& fluct, const IncidentPlaneWave& wave,
                          const Vec3& z, const WaveParameters& wp);

// Curl of the permeability clutter field (the permeability-contrast indicator
// needs curl H).
CVec3 clutter_herglotz_mu_curl(const MediumFluctuation& fluct, const IncidentPlaneWave& wave,
                               const Vec3& z, const WaveParameters& wp);

// Clutter error operator for permittivity fluctuations phi:
//   H_phi[E](z) = -(1/kappa eps0) Int ImGamma(z,y) curl(phi curl E)(y) dy,
// evaluated in the integration-by-parts form (curl moved onto the kernel), so
// only phi and curl E are sampled:
//   H_phi[E](z) = -(1/kappa eps0) Int [curl_y ImGamma(z,y)]^T phi(y) curlE(y) dy.
CVec3 clutter_herglotz_eps(const MediumFluctuation& fluct, const IncidentPlaneWave& wave,
                           const Vec3& z, const WaveParameters& wp);

enum class SpeckleKernelKind { QEta, QTildeEta, QPhi, QTildePhi };

// Real-valued smoothing kernels of the speckle covariances. A must be
// symmetric.
//   QEta[A]      = ImGamma : A ImGamma
//   QTildeEta[A] = curl_y ImGamma : A curl_y ImGamma
//   QPhi[A]      = (curl_x ImGamma) A : curl_x ImGamma
//   QTildePhi[A] = ImGamma A : ImGamma
double speckle_kernel(SpeckleKernelKind kind, const Mat3& a, const Vec3& x, const Vec3& y,
                      const WaveParameters& wp);

using CorrelationFn = std::function<double(const Vec3&, const Vec3&)>;

// Analytic speckle covariance of the clutter-perturbed multi-measurement
// indicator: prefactor * IntInt C(x,y) K(x,z) K(y,z') dx dy over the voxel
// box (midpoint rule), with kernel and prefactor per fluctuation/contrast
// pairing:
//   (eta, eps contrast): kappa^8 a2eps^2/eps0^4, K = QEta[M_S^eps]
//   (eta, mu  contrast): kappa^4 a2mu^2 /eps0^4, K = QTildeEta[M_S^mu]
//   (phi, eps contrast): kappa^4 a2eps^2/eps0^4, K = QPhi[M_S^eps]
//   (phi, mu  contrast): kappa^8 a2mu^2 /eps0^4, K = QTildePhi[M_S^mu]
double speckle_covariance_analytic(FluctuationKind fluct_kind, ContrastMode mode,
                                   const TrialInclusion& trial, const WaveParameters& wp,
                                   const CorrelationFn& corr, const VoxelBox& box, const Vec3& z,
                                   const Vec3& z2);

}  // namespace tdscat

#endif
