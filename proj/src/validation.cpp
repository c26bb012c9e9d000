#include "tdscat/validation.hpp"

#include <cmath>

#include "tdscat/bessel.hpp"
#include "tdscat/directions.hpp"
#include "tdscat/green.hpp"
#include "tdscat/imaging.hpp"
#include "tdscat/quadrature.hpp"
#include "tdscat/rng.hpp"

namespace tdscat {

namespace {

Vec3 random_unit(NormalSampler& g) {
    Vec3 v{g(), g(), g()};
    return v / norm(v);
}

Vec3 random_point(NormalSampler& g, double scale) { return Vec3{g(), g(), g()} * scale; }

// Central-difference column-wise curl of the matrix field p -> m(p).
template <typename MatFn>
Mat3 fd_curl(const MatFn& m, const Vec3& p, double h) {
    Mat3 out;
    Mat3 dm[3];  // dm[j] = d m / d p_j
    for (int j = 0; j < 3; ++j) {
        Vec3 e;
        e[j] = 1.0;
        dm[j] = (m(p + e * h) - m(p - e * h)) * (1.0 / (2.0 * h));
    }
    for (int col = 0; col < 3; ++col) {
        out(0, col) = dm[1](2, col) - dm[2](1, col);
        out(1, col) = dm[2](0, col) - dm[0](2, col);
        out(2, col) = dm[0](1, col) - dm[1](0, col);
    }
    return out;
}

template <typename VecFn>
CVec3 fd_curl_vec(const VecFn& f, const Vec3& p, double h) {
    CVec3 d[3];
    for (int j = 0; j < 3; ++j) {
        Vec3 e;
        e[j] = 1.0;
        d[j] = (1.0 / (2.0 * h)) * (f(p + e * h) - f(p - e * h));
    }
    return {d[1].z - d[2].y, d[2].x - d[0].z, d[0].y - d[1].x};
}

}  // namespace

std::vector<ValidationCheck> run_validation_suite(const ValidationOptions& opts) {
    std::vector<ValidationCheck> checks;
    auto push = [&](std::string name, double measured, double threshold) {
        checks.push_back({std::move(name), measured, threshold, measured < threshold});
    };
    NormalSampler g(opts.seed);
    const WaveParameters wp = WaveParameters::from_kappa(1.0, 1.0, opts.kappa);

    // Plane-wave identity sum_k w_k e^{ik xhat.(z-z')} = 4 pi j0(k|z-z'|).
    {
        const auto quad = build_product_quadrature(opts.polar_order, opts.azimuthal_count);
        double worst = 0.0;
        for (int rep = 0; rep < 4; ++rep) {
            const Vec3 d = random_unit(g) * (6.0 / wp.kappa);
            cplx acc = 0.0;
            for (std::size_t k = 0; k < quad.size(); ++k)
                acc += std::polar(quad.weights[k], wp.kappa * dot(quad.nodes[k], d));
            worst = std::max(worst,
                             std::abs(acc - cplx(4.0 * pi * spherical_bessel_j(0, 6.0))));
        }
        push("plane_wave_identity(kd=6)", worst, 1e-8);
    }

    // Gamma symmetry and reciprocity, entrywise relative.
    {
        double worst = 0.0;
        for (int rep = 0; rep < 100; ++rep) {
            const Vec3 x = random_point(g, 0.5), y = random_point(g, 0.5);
            if (norm(x - y) < 1e-3) continue;
            const CMat3 a = dyadic_green(x, y, wp);
            const CMat3 b = dyadic_green(y, x, wp);
            const double scale = frobenius_norm(a);
            worst = std::max(worst, frobenius_norm(a - a.transpose()) / scale);
            worst = std::max(worst, frobenius_norm(a - b) / scale);
        }
        push("gamma_reciprocity", worst, 1e-12);
    }

    // Im(dyadic_green) against the Bessel closed form.
    {
        double worst = 0.0;
        for (int rep = 0; rep < 100; ++rep) {
            const Vec3 x = random_point(g, 0.5), y = random_point(g, 0.5);
            if (norm(x - y) < 1e-3) continue;
            const Mat3 a = dyadic_green(x, y, wp).imag();
            const Mat3 b = im_dyadic_green(x, y, wp);
            worst = std::max(worst, frobenius_norm(a - b) / frobenius_norm(b));
        }
        push("im_gamma_consistency", worst, 1e-10);
    }

    // Bessel recurrence j0(x) + j2(x) = 3 j1(x)/x on [0.1, 50].
    {
        double worst = 0.0;
        for (int i = 0; i <= 500; ++i) {
            const double x = 0.1 + (50.0 - 0.1) * i / 500.0;
            const double lhs = spherical_bessel_j(0, x) + spherical_bessel_j(2, x);
            const double rhs = 3.0 * spherical_bessel_j(1, x) / x;
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-3));
        }
        push("bessel_recurrence", worst, 1e-12);
    }

    // theta1/theta2: equal-weight direction averages against
    // -(4pi/kappa eps0) ImGamma, Frobenius error relative to the identity's
    // coincidence scale ||(2/3)I|| = 2/sqrt(3), for kappa |x-y| <= 8.
    {
        const auto dirs = build_direction_set(opts.direction_polar, opts.direction_azimuthal);
        const double n = static_cast<double>(dirs.size());
        const double scale = 2.0 / std::sqrt(3.0);
        double worst1 = 0.0, worst2 = 0.0;
        for (int ik = 0; ik <= 8; ++ik) {
            const double kd = ik == 0 ? 0.25 : static_cast<double>(ik);
            for (int rep = 0; rep < 4; ++rep) {
                const Vec3 d = random_unit(g) * (kd / wp.kappa);
                CMat3 s1, s2;
                for (const auto& t : dirs.triplets) {
                    const cplx ph = std::polar(1.0 / n, wp.kappa * dot(t.theta, d));
                    for (const Vec3& p : {t.perp1, t.perp2}) {
                        const Vec3 q = cross(t.theta, p);
                        s1 = s1 + CMat3(Mat3::outer(p, p)) * ph;
                        s2 = s2 + CMat3(Mat3::outer(q, q)) * ph;
                    }
                }
                const CMat3 target(im_dyadic_green(d, Vec3{}, wp) *
                                   (-4.0 * pi / (wp.kappa * wp.epsilon0)));
                worst1 = std::max(worst1, frobenius_norm(s1 - target) / scale);
                worst2 = std::max(worst2, frobenius_norm(s2 - target) / scale);
            }
        }
        push("theta1_convergence(M=N=10,kd<=8)", worst1, 0.05);
        push("theta2_convergence(M=N=10,kd<=8)", worst2, 0.05);
    }

    // Analytic curl of ImGamma against central differences.
    {
        const double h = 1e-5 * wp.wavelength();
        double worst = 0.0;
        for (int rep = 0; rep < 50; ++rep) {
            const Vec3 x = random_point(g, 0.4), y = random_point(g, 0.4);
            if (norm(x - y) < 0.05) continue;
            const Mat3 a = curl_im_dyadic_green(x, y, wp, CurlArgument::First);
            const Mat3 fd = fd_curl([&](const Vec3& p) { return im_dyadic_green(p, y, wp); }, x, h);
            worst = std::max(worst, frobenius_norm(a - fd));
            const Mat3 a2 = curl_im_dyadic_green(x, y, wp, CurlArgument::Second);
            const Mat3 fd2 = fd_curl([&](const Vec3& p) { return im_dyadic_green(x, p, wp); }, y, h);
            worst = std::max(worst, frobenius_norm(a2 - fd2));
        }
        push("curl_im_gamma_fd_oracle", worst, 1e-6);
    }

    // Curl reciprocity: curl_x ImGamma(x,y) = [curl first arg at (y,x)]^T.
    {
        double worst = 0.0;
        for (int rep = 0; rep < 50; ++rep) {
            const Vec3 x = random_point(g, 0.4), y = random_point(g, 0.4);
            if (norm(x - y) < 0.05) continue;
            const Mat3 a = curl_im_dyadic_green(x, y, wp, CurlArgument::First);
            const Mat3 b = curl_im_dyadic_green(y, x, wp, CurlArgument::First).transpose();
            worst = std::max(worst, frobenius_norm(a - b) / std::max(frobenius_norm(a), 1e-12));
        }
        push("curl_gamma_reciprocity", worst, 1e-12);
    }

    // Incident field: analytic curl against finite differences.
    {
        const double h = 1e-5 * wp.wavelength();
        const IncidentPlaneWave wave({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, wp);
        double worst = 0.0;
        for (int rep = 0; rep < 20; ++rep) {
            const Vec3 x = random_point(g, 0.5);
            const CVec3 a = incident_curl(wave, x);
            const CVec3 fd = fd_curl_vec([&](const Vec3& p) { return incident_field(wave, p); }, x, h);
            worst = std::max(worst, norm(a - fd) / norm(a));
        }
        push("incident_curl_fd_oracle", worst, 1e-6);
    }

    // Herglotz curl against finite differences on random tangential data.
    {
        const auto quad = build_product_quadrature(12, 24);
        std::vector<CVec3> samples(quad.size());
        for (std::size_t k = 0; k < quad.size(); ++k) {
            CVec3 v(cplx(g(), g()), cplx(g(), g()), cplx(g(), g()));
            const CVec3 nrm(quad.nodes[k]);
            samples[k] = v - dot(nrm, v) * nrm;
        }
        const double h = 1e-5 * wp.wavelength();
        double worst = 0.0;
        for (int rep = 0; rep < 10; ++rep) {
            const Vec3 z = random_point(g, 0.3);
            const CVec3 a = herglotz_curl(quad, samples, wp.kappa, z);
            const CVec3 fd = fd_curl_vec(
                [&](const Vec3& p) { return herglotz(quad, samples, wp.kappa, p); }, z, h);
            worst = std::max(worst, norm(a - fd) / norm(a));
        }
        push("herglotz_curl_fd_oracle", worst, 1e-6);
    }

    return checks;
}

}  // namespace tdscat
