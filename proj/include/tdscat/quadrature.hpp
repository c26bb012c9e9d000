#ifndef TDSCAT_QUADRATURE_HPP
#define TDSCAT_QUADRATURE_HPP

#include <cstddef>
#include <vector>

#include "tdscat/linalg.hpp"

namespace tdscat {

// Unit-sphere quadrature: |node| = 1, weights > 0, sum of weights = 4 pi.
struct SphereQuadrature {
    std::vector<Vec3> nodes;
    std::vector<double> weights;
    int polar_order = 0;
    int azimuthal_count = 0;

    std::size_t size() const { return nodes.size(); }
};

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Gauss-Legendre in cos(polar angle) x uniform azimuth. polar_order >= 2,
// azimuthal_count >= 4.
SphereQuadrature build_product_quadrature(int polar_order, int azimuthal_count);

}  // namespace tdscat

#endif
