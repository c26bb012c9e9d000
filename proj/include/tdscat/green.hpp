#ifndef TDSCAT_GREEN_HPP
#define TDSCAT_GREEN_HPP

#include "tdscat/linalg.hpp"
#include "tdscat/wave.hpp"

// Outgoing fundamental solutions of the background medium:
//   g(x,y)     = e^{ik|x-y|} / (4 pi |x-y|)
//   Gamma(x,y) = -eps0 [I3 + (1/k^2) grad grad^T] g(x,y)
// with the imaginary part of Gamma in its Bessel closed form
//   Im Gamma = -(eps0 k / 4pi) [ (2/3) j0(kr) I3 + j2(kr) (rr^T - I3/3) ],
// which is analytic through r = 0.

namespace tdscat {

// Points closer than this are treated as coincident.
inline constexpr double kCoincidentTol = 1e-14;

cplx scalar_green(const Vec3& x, const Vec3& y, const WaveParameters& wp);

CMat3 dyadic_green(const Vec3& x, const Vec3& y, const WaveParameters& wp);

Mat3 im_dyadic_green(const Vec3& x, const Vec3& y, const WaveParameters& wp);

enum class CurlArgument { First, Second };

// Column-wise curl of Im Gamma with respect to the flagged argument.
// Closed form: the Hessian part of Gamma is curl-free, so
//   curl_x Im Gamma(x,y) = (eps0 k^2 / 4pi) j1(kr) [rhat]x,   r = x - y,
// and the curl w.r.t. the second argument is its negative. Vanishes at x = y.
Mat3 curl_im_dyadic_green(const Vec3& x, const Vec3& y, const WaveParameters& wp,
                          CurlArgument wrt);

}  // namespace tdscat

#endif
