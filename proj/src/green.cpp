#include "tdscat/green.hpp"

#include <stdexcept>

#include "tdscat/bessel.hpp"

namespace tdscat {

cplx scalar_green(const Vec3& x, const Vec3& y, const WaveParameters& wp) {
    const double r = norm(x - y);
    if (r < kCoincidentTol) throw std::invalid_argument("scalar_green: coincident points");
    return std::polar(1.0 / (4.0 * pi * r), wp.kappa * r);
}

CMat3 dyadic_green(const Vec3& x, const Vec3& y, const WaveParameters& wp) {
    const Vec3 d = x - y;
    const double r = norm(d);
    if (r < kCoincidentTol) throw std::invalid_argument("dyadic_green: coincident points");
    const Vec3 rh = d / r;
    const double kr = wp.kappa * r;
    const cplx ikr_inv(0.0, 1.0 / kr);
    const double kr2_inv = 1.0 / (kr * kr);
    // Gamma = -eps0 g(r) [ (1 + i/kr - 1/kr^2) I - (1 + 3i/kr - 3/kr^2) rr^T ]
    const cplx g = std::polar(1.0 / (4.0 * pi * r), kr);
    const cplx a = cplx(1.0 - kr2_inv, 0.0) + ikr_inv;
    const cplx b = cplx(1.0 - 3.0 * kr2_inv, 0.0) + 3.0 * ikr_inv;
    const cplx ca = -wp.epsilon0 * g * a;
    const cplx cb = wp.epsilon0 * g * b;
    CMat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out(i, j) = (i == j ? ca : cplx(0.0)) + cb * (rh[i] * rh[j]);
    return out;
}

Mat3 im_dyadic_green(const Vec3& x, const Vec3& y, const WaveParameters& wp) {
    const Vec3 d = x - y;
    const double r = norm(d);
    const double scale = -wp.epsilon0 * wp.kappa / (4.0 * pi);
    if (r < kCoincidentTol)
        return Mat3::identity() * (scale * 2.0 / 3.0);  // j0(0)=1, j2(0)=0
    const double kr = wp.kappa * r;
    const Vec3 rh = d / r;
    const double j0 = spherical_bessel_j(0, kr);
    const double j2 = spherical_bessel_j(2, kr);
    return scale * (Mat3::identity() * (2.0 / 3.0 * j0 - j2 / 3.0) + Mat3::outer(rh, rh) * j2);
}

Mat3 curl_im_dyadic_green(const Vec3& x, const Vec3& y, const WaveParameters& wp,
                          CurlArgument wrt) {
    const Vec3 d = x - y;
    const double r = norm(d);
    if (r < kCoincidentTol) return Mat3{};  // j1(kr) rhat -> 0
    const double kr = wp.kappa * r;
    double c = wp.epsilon0 * wp.kappa * wp.kappa / (4.0 * pi) * spherical_bessel_j(1, kr);
    if (wrt == CurlArgument::Second) c = -c;
    return c * Mat3::skew(d / r);
}

}  // namespace tdscat
