#include "tdscat/medium.hpp"

#include <cmath>
#include <stdexcept>

#include "tdscat/green.hpp"
#include "tdscat/rng.hpp"

namespace tdscat {

Vec3 VoxelBox::voxel_center(std::size_t flat) const {
    const std::size_t nz = counts[2], ny = counts[1];
    const std::size_t iz = flat % nz;
    const std::size_t iy = (flat / nz) % ny;
    const std::size_t ix = flat / (nz * ny);
    const Vec3 h = voxel_size();
    return {origin.x + (ix + 0.5) * h.x, origin.y + (iy + 0.5) * h.y, origin.z + (iz + 0.5) * h.z};
}

bool VoxelBox::contains(const Vec3& p) const {
    return p.x >= origin.x && p.x <= origin.x + extent.x && p.y >= origin.y &&
           p.y <= origin.y + extent.y && p.z >= origin.z && p.z <= origin.z + extent.z;
}

FluctuationModel::FluctuationModel(VoxelBox box, double sigma, double correlation_length)
    : box_(box), sigma_(sigma), ell_(correlation_length) {
    if (!(box.extent.x > 0.0) || !(box.extent.y > 0.0) || !(box.extent.z > 0.0))
        throw std::invalid_argument("FluctuationModel: box extent must be positive");
    for (int c : box.counts)
        if (c < 1) throw std::invalid_argument("FluctuationModel: voxel counts must be >= 1");
    if (sigma < 0.0 || !(correlation_length > 0.0))
        throw std::invalid_argument("FluctuationModel: sigma >= 0 and correlation length > 0 required");
    if (sigma == 0.0) return;  // no factor needed

    const std::size_t n = box.voxel_count();
    std::vector<Vec3> centers(n);
    for (std::size_t i = 0; i < n; ++i) centers[i] = box.voxel_center(i);

    // Cholesky of the (positive definite) squared-exponential covariance with
    // a small diagonal nugget for conditioning.
    auto chol = std::make_shared<std::vector<double>>(n * (n + 1) / 2, 0.0);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return (*chol)[i * (i + 1) / 2 + j]; };
    const double nugget = 1e-10 * sigma_ * sigma_;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = covariance(centers[i], centers[j]) + (i == j ? nugget : 0.0);
            for (std::size_t k = 0; k < j; ++k) s -= at(i, k) * at(j, k);
            if (i == j) {
                if (s <= 0.0) throw std::runtime_error("FluctuationModel: covariance not positive definite");
                at(i, j) = std::sqrt(s);
            } else {
                at(i, j) = s / at(j, j);
            }
        }
    }
    chol_ = std::move(chol);
}

double FluctuationModel::covariance(const Vec3& x, const Vec3& y) const {
    const Vec3 d = x - y;
    return sigma_ * sigma_ * std::exp(-dot(d, d) / (ell_ * ell_));
}

MediumFluctuation FluctuationModel::draw(FluctuationKind kind, std::uint64_t seed) const {
    const std::size_t n = box_.voxel_count();
    MediumFluctuation out{kind, box_, std::vector<double>(n, 0.0), sigma_, ell_, 0.0, true};
    if (sigma_ == 0.0) return out;

    NormalSampler g(seed);
    std::vector<double> white(n);
    for (auto& w : white) w = g();
    const auto& L = *chol_;
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        const double* row = L.data() + i * (i + 1) / 2;
        for (std::size_t k = 0; k <= i; ++k) s += row[k] * white[k];
        out.values[i] = s;
    }

    double mean = 0.0;
    for (double v : out.values) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : out.values) var += (v - mean) * (v - mean);
    out.sample_std = std::sqrt(var / static_cast<double>(n));
    out.sample_std_ok = std::abs(out.sample_std - sigma_) <= 0.2 * sigma_;
    return out;
}

MediumFluctuation generate_medium_fluctuation(FluctuationKind kind, const VoxelBox& box,
                                              double sigma, double correlation_length,
                                              std::uint64_t seed) {
    return FluctuationModel(box, sigma, correlation_length).draw(kind, seed);
}

CVec3 clutter_herglotz_mu(const MediumFluctuation& fluct, const IncidentPlaneWave& wave,
                          const Vec3& z, const WaveParameters& wp) {
    if (fluct.kind != FluctuationKind::Permeability)
        throw std::invalid_argument("clutter_herglotz_mu: permeability fluctuation required");
    const double c = -wp.kappa / wp.epsilon0 * fluct.box.voxel_volume();
    CVec3 acc;
    for (std::size_t v = 0; v < fluct.values.size(); ++v) {
        if (fluct.values[v] == 0.0) continue;
        const Vec3 y = fluct.box.voxel_center(v);
        acc += fluct.values[v] * (im_dyadic_green(z, y, wp) * incident_field(wave, y));
    }
    return c * acc;
}

CVec3 clutter_herglotz_mu_curl(const MediumFluctuation& fluct, const IncidentPlaneWave& wave,
                               const Vec3& z, const WaveParameters& wp) {
    if (fluct.kind != FluctuationKind::Permeability)
        throw std::invalid_argument("clutter_herglotz_mu_curl: permeability fluctuation required");
    const double c = -wp.kappa / wp.epsilon0 * fluct.box.voxel_volume();
    CVec3 acc;
    for (std::size_t v = 0; v < fluct.values.size(); ++v) {
        if (fluct.values[v] == 0.0) continue;
        const Vec3 y = fluct.box.voxel_center(v);
        acc += fluct.values[v] *
               (curl_im_dyadic_green(z, y, wp, CurlArgument::First) * incident_field(wave, y));
    }
    return c * acc;
}

CVec3 clutter_herglotz_eps(const MediumFluctuation& fluct, const IncidentPlaneWave& wave,
                           const Vec3& z, const WaveParameters& wp) {
    if (fluct.kind != FluctuationKind::Permittivity)
        throw std::invalid_argument("clutter_herglotz_eps: permittivity fluctuation required");
    const double c = -1.0 / (wp.kappa * wp.epsilon0) * fluct.box.voxel_volume();
    CVec3 acc;
    for (std::size_t v = 0; v < fluct.values.size(); ++v) {
        if (fluct.values[v] == 0.0) continue;
        const Vec3 y = fluct.box.voxel_center(v);
        const Mat3 ct = curl_im_dyadic_green(z, y, wp, CurlArgument::Second).transpose();
        acc += fluct.values[v] * (ct * incident_curl(wave, y));
    }
    return c * acc;
}

double speckle_kernel(SpeckleKernelKind kind, const Mat3& a, const Vec3& x, const Vec3& y,
                      const WaveParameters& wp) {
    const double scale = std::max(frobenius_norm(a), 1e-300);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(a(i, j) - a(j, i)) > 1e-10 * scale)
                throw std::invalid_argument("speckle_kernel: A must be symmetric");
    switch (kind) {
        case SpeckleKernelKind::QEta: {
            const Mat3 g = im_dyadic_green(x, y, wp);
            return contract(g, a * g);
        }
        case SpeckleKernelKind::QTildeEta: {
            const Mat3 g = curl_im_dyadic_green(x, y, wp, CurlArgument::Second);
            return contract(g, a * g);
        }
        case SpeckleKernelKind::QPhi: {
            const Mat3 g = curl_im_dyadic_green(x, y, wp, CurlArgument::First);
            return contract(g * a, g);
        }
        default: {
            const Mat3 g = im_dyadic_green(x, y, wp);
            return contract(g * a, g);
        }
    }
}

double speckle_covariance_analytic(FluctuationKind fluct_kind, ContrastMode mode,
                                   const TrialInclusion& trial, const WaveParameters& wp,
                                   const CorrelationFn& corr, const VoxelBox& box, const Vec3& z,
                                   const Vec3& z2) {
    SpeckleKernelKind kernel;
    double a2;
    Mat3 ms;
    double kpow;
    const double k2 = wp.kappa * wp.kappa;
    if (fluct_kind == FluctuationKind::Permeability) {
        if (mode == ContrastMode::Permittivity) {
            if (trial.mu2 != wp.mu0)
                throw std::invalid_argument("speckle_covariance: permittivity-only trial required");
            kernel = SpeckleKernelKind::QEta;
            a2 = contrast(wp.epsilon0, trial.epsilon2);
            ms = trial.m_eps;
            kpow = k2 * k2 * k2 * k2;  // kappa^8
        } else {
            if (trial.epsilon2 != wp.epsilon0)
                throw std::invalid_argument("speckle_covariance: permeability-only trial required");
            kernel = SpeckleKernelKind::QTildeEta;
            a2 = contrast(wp.mu0, trial.mu2);
            ms = trial.m_mu;
            kpow = k2 * k2;  // kappa^4
        }
    } else {
        if (mode == ContrastMode::Permittivity) {
            if (trial.mu2 != wp.mu0)
                throw std::invalid_argument("speckle_covariance: permittivity-only trial required");
            kernel = SpeckleKernelKind::QPhi;
            a2 = contrast(wp.epsilon0, trial.epsilon2);
            ms = trial.m_eps;
            kpow = k2 * k2;  // kappa^4
        } else {
            if (trial.epsilon2 != wp.epsilon0)
                throw std::invalid_argument("speckle_covariance: permeability-only trial required");
            kernel = SpeckleKernelKind::QTildePhi;
            a2 = contrast(wp.mu0, trial.mu2);
            ms = trial.m_mu;
            kpow = k2 * k2 * k2 * k2;  // kappa^8
        }
    }
    const double e0 = wp.epsilon0;
    const double prefactor = kpow * a2 * a2 / (e0 * e0 * e0 * e0);

    const std::size_t n = box.voxel_count();
    std::vector<Vec3> centers(n);
    std::vector<double> kz(n), kz2(n);
    const bool same_point = norm(z - z2) < kCoincidentTol;
    for (std::size_t v = 0; v < n; ++v) {
        centers[v] = box.voxel_center(v);
        kz[v] = speckle_kernel(kernel, ms, centers[v], z, wp);
        kz2[v] = same_point ? kz[v] : speckle_kernel(kernel, ms, centers[v], z2, wp);
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc += corr(centers[i], centers[j]) * kz[i] * kz2[j];
    const double vol = box.voxel_volume();
    return prefactor * acc * vol * vol;
}

}  // namespace tdscat
