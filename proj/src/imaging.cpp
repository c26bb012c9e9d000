#include "tdscat/imaging.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tdscat/green.hpp"
#include "tdscat/parallel.hpp"

namespace tdscat {

namespace {

bool same_direction(const Vec3& a, const Vec3& b) { return norm(a - b) < 1e-12; }

void check_block(const FarFieldData& data, std::size_t block_index) {
    if (block_index >= data.blocks.size())
        throw std::invalid_argument("indicator: block index out of range");
    if (data.blocks[block_index].samples.size() != data.quad.size())
        throw std::invalid_argument("indicator: block length does not match quadrature");
}

}  // namespace

CVec3 herglotz(const SphereQuadrature& quad, std::span<const CVec3> samples, double kappa,
               const Vec3& z) {
    if (samples.size() != quad.size())
        throw std::invalid_argument("herglotz: sample/node count mismatch");
    CVec3 acc;
    for (std::size_t k = 0; k < quad.size(); ++k) {
        const cplx w = std::polar(quad.weights[k], kappa * dot(quad.nodes[k], z));
        acc += w * samples[k];
    }
    return (1.0 / (4.0 * pi)) * acc;
}

CVec3 herglotz_curl(const SphereQuadrature& quad, std::span<const CVec3> samples, double kappa,
                    const Vec3& z) {
    if (samples.size() != quad.size())
        throw std::invalid_argument("herglotz_curl: sample/node count mismatch");
    CVec3 acc;
    for (std::size_t k = 0; k < quad.size(); ++k) {
        const cplx w = cplx(0.0, kappa) * std::polar(quad.weights[k], kappa * dot(quad.nodes[k], z));
        acc += w * cross(CVec3(quad.nodes[k]), samples[k]);
    }
    return (1.0 / (4.0 * pi)) * acc;
}

double indicator_single(const FarFieldData& data, std::size_t block_index,
                        const IncidentPlaneWave& wave, const TrialInclusion& trial, const Vec3& z) {
    check_block(data, block_index);
    const auto& block = data.blocks[block_index];
    if (!same_direction(block.theta, wave.theta) || !same_direction(block.theta_perp, wave.theta_perp))
        throw std::invalid_argument("indicator_single: wave does not match block tag");

    const double k = data.wp.kappa;
    const double a2_mu = contrast(data.wp.mu0, trial.mu2);
    const double a2_eps = contrast(data.wp.epsilon0, trial.epsilon2);

    cplx sum = 0.0;
    if (a2_mu != 0.0) {
        const CVec3 curl_h = herglotz_curl(data.quad, block.samples, k, z);
        sum += a2_mu * dot(trial.m_mu * incident_curl(wave, z), conj(curl_h));
    }
    if (a2_eps != 0.0) {
        const CVec3 h = herglotz(data.quad, block.samples, k, z);
        sum += (k * k * a2_eps) * dot(conj(h), trial.m_eps * incident_field(wave, z));
    }
    return -sum.real() / (4.0 * pi);
}

std::vector<IncidentPlaneWave> incident_waves_for(const DirectionSet& dirs,
                                                  const WaveParameters& wp) {
    std::vector<IncidentPlaneWave> waves;
    waves.reserve(dirs.incident_field_count());
    for (const auto& t : dirs.triplets) {
        waves.emplace_back(t.theta, t.perp1, wp);
        waves.emplace_back(t.theta, t.perp2, wp);
    }
    return waves;
}

double indicator_multi(const FarFieldData& data, const DirectionSet& dirs,
                       const TrialInclusion& trial, const Vec3& z) {
    const std::size_t n = dirs.size();
    if (data.blocks.size() != 2 * n)
        throw std::invalid_argument("indicator_multi: data does not cover all (j,l) pairs");
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& t = dirs.triplets[j];
        const IncidentPlaneWave w1(t.theta, t.perp1, data.wp);
        const IncidentPlaneWave w2(t.theta, t.perp2, data.wp);
        acc += indicator_single(data, 2 * j, w1, trial, z);
        acc += indicator_single(data, 2 * j + 1, w2, trial, z);
    }
    return acc / static_cast<double>(n);
}

double predictor_single_eps(const Inclusion& inc, const TrialInclusion& trial,
                            const IncidentPlaneWave& wave, const Vec3& z) {
    const auto& wp = wave.wp;
    if (inc.mu1 != wp.mu0 || trial.mu2 != wp.mu0)
        throw std::invalid_argument("predictor_single_eps: permittivity-only contrast required");
    const double a1 = contrast(wp.epsilon0, inc.epsilon1);
    const double a2 = contrast(wp.epsilon0, trial.epsilon2);
    if (a1 == 0.0 || a2 == 0.0) return 0.0;
    const Mat3 g = im_dyadic_green(z, inc.center, wp);
    const CVec3 lhs = g * (inc.m_eps * conj(incident_field(wave, inc.center)));
    const CVec3 rhs = trial.m_eps * incident_field(wave, z);
    const double rho3 = inc.scale * inc.scale * inc.scale;
    const double k = wp.kappa;
    return -(rho3 * k * k * k * a1 * a2 / (4.0 * pi * wp.epsilon0)) * dot(lhs, rhs).real();
}

double predictor_single_mu(const Inclusion& inc, const TrialInclusion& trial,
                           const IncidentPlaneWave& wave, const Vec3& z) {
    const auto& wp = wave.wp;
    if (inc.epsilon1 != wp.epsilon0 || trial.epsilon2 != wp.epsilon0)
        throw std::invalid_argument("predictor_single_mu: permeability-only contrast required");
    const double a1 = contrast(wp.mu0, inc.mu1);
    const double a2 = contrast(wp.mu0, trial.mu2);
    if (a1 == 0.0 || a2 == 0.0) return 0.0;
    const Mat3 g = im_dyadic_green(z, inc.center, wp);
    const CVec3 lhs = g * (inc.m_mu * conj(incident_curl(wave, inc.center)));
    const CVec3 rhs = trial.m_mu * incident_curl(wave, z);
    const double rho3 = inc.scale * inc.scale * inc.scale;
    return -(rho3 * wp.kappa * a1 * a2 / (4.0 * pi * wp.epsilon0)) * dot(lhs, rhs).real();
}

double predictor_multi(const Inclusion& inc, const TrialInclusion& trial, const WaveParameters& wp,
                       const Vec3& z, ContrastMode mode) {
    double a1, a2;
    Mat3 md, ms;
    if (mode == ContrastMode::Permittivity) {
        if (inc.mu1 != wp.mu0 || trial.mu2 != wp.mu0)
            throw std::invalid_argument("predictor_multi: permittivity-only contrast required");
        a1 = contrast(wp.epsilon0, inc.epsilon1);
        a2 = contrast(wp.epsilon0, trial.epsilon2);
        md = inc.m_eps;
        ms = trial.m_eps;
    } else {
        if (inc.epsilon1 != wp.epsilon0 || trial.epsilon2 != wp.epsilon0)
            throw std::invalid_argument("predictor_multi: permeability-only contrast required");
        a1 = contrast(wp.mu0, inc.mu1);
        a2 = contrast(wp.mu0, trial.mu2);
        md = inc.m_mu;
        ms = trial.m_mu;
    }
    const Mat3 g = im_dyadic_green(z, inc.center, wp);
    const double rho3 = inc.scale * inc.scale * inc.scale;
    const double k4 = wp.kappa * wp.kappa * wp.kappa * wp.kappa;
    return rho3 * k4 * a1 * a2 / (wp.epsilon0 * wp.epsilon0) * contract(g * md, ms * g);
}

IndicatorMap compute_map(const std::function<double(const Vec3&)>& eval, const SearchGrid& grid,
                         std::map<std::string, std::string> meta, int threads) {
    IndicatorMap map{grid, std::vector<double>(grid.point_count()), std::move(meta)};
    if (threads <= 0) threads = default_thread_count();
    parallel_for(map.values.size(), threads,
                 [&](std::size_t i) { map.values[i] = eval(grid.point(i)); });
    for (double v : map.values)
        if (!std::isfinite(v)) throw std::runtime_error("compute_map: non-finite indicator value");
    return map;
}

PeakAnalysis peak_analysis(const IndicatorMap& map) {
    if (map.values.empty()) throw std::invalid_argument("peak_analysis: empty map");
    std::size_t best = 0;
    for (std::size_t i = 1; i < map.values.size(); ++i)
        if (map.values[i] > map.values[best]) best = i;

    PeakAnalysis out;
    out.argmax_index = best;
    out.argmax = map.grid.point(best);
    out.peak = map.values[best];

    // Decompose the flat argmax index into per-axis indices (last axis fastest).
    const auto& counts = map.grid.counts;
    const std::size_t naxes = counts.size();
    std::vector<std::size_t> idx(naxes), stride(naxes);
    {
        std::size_t s = 1, rem = best;
        for (std::size_t a = naxes; a-- > 0;) {
            stride[a] = s;
            idx[a] = rem % counts[a];
            rem /= counts[a];
            s *= counts[a];
        }
    }

    const double half = out.peak / 2.0;
    out.fwhm.assign(naxes, std::numeric_limits<double>::quiet_NaN());
    out.fwhm_defined.assign(naxes, false);
    for (std::size_t a = 0; a < naxes; ++a) {
        auto value_at = [&](long j) {
            return map.values[best + (j - static_cast<long>(idx[a])) * stride[a]];
        };
        auto crossing = [&](int step) -> double {
            long j = static_cast<long>(idx[a]);
            double prev = value_at(j);
            while (true) {
                const long next = j + step;
                if (next < 0 || next >= counts[a]) return std::numeric_limits<double>::quiet_NaN();
                const double cur = value_at(next);
                if (cur < half) {
                    const double frac = (prev - half) / (prev - cur);
                    return (static_cast<double>(j) + step * frac) * map.grid.spacing;
                }
                prev = cur;
                j = next;
            }
        };
        const double lo = crossing(-1), hi = crossing(+1);
        if (std::isfinite(lo) && std::isfinite(hi)) {
            out.fwhm[a] = hi - lo;
            out.fwhm_defined[a] = true;
        }
    }
    return out;
}

}  // namespace tdscat
