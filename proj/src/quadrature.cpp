#include "tdscat/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace tdscat {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton on P_n with the Tricomi initial guess.
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

SphereQuadrature build_product_quadrature(int polar_order, int azimuthal_count) {
    if (polar_order < 2)
        throw std::invalid_argument("build_product_quadrature: polar_order must be >= 2");
    if (azimuthal_count < 4)
        throw std::invalid_argument("build_product_quadrature: azimuthal_count must be >= 4");
    std::vector<double> t, u;
    gauss_legendre(polar_order, t, u);
    SphereQuadrature q;
    q.polar_order = polar_order;
    q.azimuthal_count = azimuthal_count;
    q.nodes.reserve(static_cast<std::size_t>(polar_order) * azimuthal_count);
    q.weights.reserve(q.nodes.capacity());
    const double wpsi = 2.0 * pi / azimuthal_count;
    for (int i = 0; i < polar_order; ++i) {
        const double ct = t[i];
        const double st = std::sqrt(1.0 - ct * ct);
        for (int a = 0; a < azimuthal_count; ++a) {
            const double psi = wpsi * a;
            q.nodes.push_back({st * std::cos(psi), st * std::sin(psi), ct});
            q.weights.push_back(u[i] * wpsi);
        }
    }
    return q;
}

}  // namespace tdscat
