#ifndef TDSCAT_EXPERIMENTS_HPP
#define TDSCAT_EXPERIMENTS_HPP

#include <cstdint>

#include "tdscat/medium.hpp"
#include "tdscat/montecarlo.hpp"
#include "tdscat/noise.hpp"

// Monte Carlo drivers that validate the closed-form noise statistics.
// Shared by the `stats` CLI subcommand and the acceptance suite.

namespace tdscat {

// Trials of the multi-measurement indicator at z on noise-corrupted copies of
// the clean data (independent streams per trial and per block).
TrialSummary mc_noisy_indicator(const FarFieldData& clean, const DirectionSet& dirs,
                                const TrialInclusion& trial, double sigma_xi, const Vec3& z,
                                long trials, std::uint64_t seed, int threads = 0);

// Sample covariance E[H[xi](z) conj(H[xi](z'))^T] of the Herglotz-propagated
// noise over `draws` independent draws.
CMat3 mc_herglotz_noise_covariance(const SphereQuadrature& quad, const WaveParameters& wp,
                                   double sigma_xi, const Vec3& z, const Vec3& z2, long draws,
                                   std::uint64_t seed, int threads = 0);

// Clutter-perturbed indicator at a fixed search point under a weak random
// medium (Born regime). The perturbation is linear in the fluctuation field,
// so the per-voxel sensitivity is precomputed once and each realization costs
// one dot product. `perturbation_direct` evaluates the same quantity through
// the clutter operators; the two agree to roundoff (tested).
class SpeckleExperiment {
  public:
    SpeckleExperiment(FluctuationKind kind, ContrastMode mode, const TrialInclusion& trial,
                      const WaveParameters& wp, const DirectionSet& dirs, const VoxelBox& box,
                      double sigma, double corr_length, const Vec3& z);

    double perturbation(std::uint64_t seed) const;  // Delta I^n(z), one realization
    double perturbation_direct(const MediumFluctuation& fluct) const;
    MediumFluctuation draw(std::uint64_t seed) const { return model_.draw(kind_, seed); }

    // Eqs. ApproxCov / Cov6 / Cov7 family at z = z'.
    double analytic_variance() const;

    TrialSummary variance_trials(long trials, std::uint64_t seed, int threads = 0) const;

  private:
    FluctuationKind kind_;
    ContrastMode mode_;
    TrialInclusion trial_;
    WaveParameters wp_;
    DirectionSet dirs_;
    FluctuationModel model_;
    Vec3 z_;
    std::vector<double> weight_;  // dI/d(field value) per voxel
};

}  // namespace tdscat

#endif
