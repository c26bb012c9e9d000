#include "tdscat/linalg.hpp"

#include <algorithm>

namespace tdscat {

// Analytic eigenvalues of a symmetric 3x3 matrix (Smith's trigonometric method).
std::array<double, 3> symmetric_eigenvalues(const Mat3& a) {
    const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    const double tr = a(0, 0) + a(1, 1) + a(2, 2);
    if (p1 == 0.0) {
        std::array<double, 3> ev{a(0, 0), a(1, 1), a(2, 2)};
        std::sort(ev.begin(), ev.end());
        return ev;
    }
    const double q = tr / 3.0;
    const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                      (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    Mat3 b = (a - Mat3::identity() * q) * (1.0 / p);
    const double detb =
        b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
        b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
        b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
    double rr = std::clamp(detb / 2.0, -1.0, 1.0);
    const double phi = std::acos(rr) / 3.0;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * pi / 3.0);
    const double e2 = tr - e1 - e3;
    std::array<double, 3> ev{e1, e2, e3};
    std::sort(ev.begin(), ev.end());
    return ev;
}

bool is_symmetric_positive_definite(const Mat3& a, double sym_tol) {
    const double scale = std::max(frobenius_norm(a), 1e-300);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(a(i, j) - a(j, i)) > sym_tol * scale) return false;
    const auto ev = symmetric_eigenvalues(a);
    return ev[0] > 0.0;
}

}  // namespace tdscat
