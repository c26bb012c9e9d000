#include "tdscat/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace tdscat {

namespace {

constexpr double kSeriesThreshold = 1e-2;

// j_n(x) = sum_k (-1)^k x^{n+2k} / (2^k k! (2n+2k+1)!!), truncated after 6 terms.
double series(int n, double x) {
    const double x2 = x * x;
    double term = 1.0;
    for (int i = 0; i < n; ++i) term *= x;         // x^n
    double dfac = 1.0;
    for (int i = 2 * n + 1; i > 0; i -= 2) dfac *= i;
    term /= dfac;                                  // x^n / (2n+1)!!
    double sum = term;
    for (int k = 1; k < 6; ++k) {
        term *= -x2 / (2.0 * k * (2.0 * (n + k) + 1.0));
        sum += term;
    }
    return sum;
}

}  // namespace

double spherical_bessel_j(int n, double x) {
    if (n < 0 || n > 2) throw std::invalid_argument("spherical_bessel_j: order must be 0, 1 or 2");
    if (x < 0.0) throw std::invalid_argument("spherical_bessel_j: x must be nonnegative");
    if (x < kSeriesThreshold) return series(n, x);
    const double s = std::sin(x), c = std::cos(x);
    switch (n) {
        case 0: return s / x;
        case 1: return s / (x * x) - c / x;
        default: return (3.0 / (x * x * x) - 1.0 / x) * s - 3.0 * c / (x * x);
    }
}

}  // namespace tdscat
