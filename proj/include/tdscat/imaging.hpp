#ifndef TDSCAT_IMAGING_HPP
#define TDSCAT_IMAGING_HPP

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tdscat/directions.hpp"
#include "tdscat/forward.hpp"
#include "tdscat/grid.hpp"

namespace tdscat {

// Electric Herglotz back-propagator, evaluated as the quadrature-weighted
// spherical mean (1/4pi) sum_k w_k Phi_k e^{i kappa xhat_k . z}. With this
// normalization the closed-form identity
//   H[(I - xhat xhat^T) p e^{-i kappa xhat.y}](z) = -(4pi / kappa eps0) ImGamma(z, y) p
// holds exactly, as do all the indicator predictors and noise statistics
// built on it.
CVec3 herglotz(const SphereQuadrature& quad, std::span<const CVec3> samples, double kappa,
               const Vec3& z);

// Curl of the Herglotz field, via the analytic integrand i kappa xhat x Phi.
CVec3 herglotz_curl(const SphereQuadrature& quad, std::span<const CVec3> samples, double kappa,
                    const Vec3& z);

// Topological-derivative location indicator for one incident field:
//   I(z) = -(1/4pi) Re{ a2_mu M_mu curlE0(z) . conj(curlH(z))
//                     + kappa^2 a2_eps conj(H(z)) . M_eps E0(z) },
// H the Herglotz field of the data block. Both contrast terms are always
// evaluated; either vanishes with its contrast. The block's wave tag must
// match the supplied incident wave.
double indicator_single(const FarFieldData& data, std::size_t block_index,
                        const IncidentPlaneWave& wave, const TrialInclusion& trial, const Vec3& z);

// (1/n) sum over polarization pairs and directions of indicator_single.
// Requires one block per (direction, polarization) pair, ordered direction-
// major as produced by incident_waves_for.
double indicator_multi(const FarFieldData& data, const DirectionSet& dirs,
                       const TrialInclusion& trial, const Vec3& z);

// The 2n incident fields of a direction set, direction-major.
std::vector<IncidentPlaneWave> incident_waves_for(const DirectionSet& dirs,
                                                  const WaveParameters& wp);

enum class ContrastMode { Permittivity, Permeability };

// Closed-form asymptotic indicator values (the O(rho^3) leading terms, exact
// for data synthesized from the leading-order far field).
double predictor_single_eps(const Inclusion& inc, const TrialInclusion& trial,
                            const IncidentPlaneWave& wave, const Vec3& z);
double predictor_single_mu(const Inclusion& inc, const TrialInclusion& trial,
                           const IncidentPlaneWave& wave, const Vec3& z);

// Multi-measurement limit: (rho^3 kappa^4 a1 a2 / eps0^2) ImGamma M_D : M_S ImGamma.
double predictor_multi(const Inclusion& inc, const TrialInclusion& trial, const WaveParameters& wp,
                       const Vec3& z, ContrastMode mode);

struct IndicatorMap {
    SearchGrid grid;
    std::vector<double> values;
    std::map<std::string, std::string> meta;
};

// Sweeps eval over the grid (parallel over points, deterministic ordering).
IndicatorMap compute_map(const std::function<double(const Vec3&)>& eval, const SearchGrid& grid,
                         std::map<std::string, std::string> meta = {}, int threads = 0);

struct PeakAnalysis {
    std::size_t argmax_index = 0;
    Vec3 argmax;
    double peak = 0.0;
    std::vector<double> fwhm;        // per grid axis; NaN when undefined
    std::vector<bool> fwhm_defined;  // false when no half-max crossing exists
};

// Argmax over the map plus the full width at half maximum along each grid
// axis through the argmax (linear interpolation of the half-max crossings).
PeakAnalysis peak_analysis(const IndicatorMap& map);

}  // namespace tdscat

#endif
