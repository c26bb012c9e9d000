#include "tdscat/directions.hpp"

#include <cmath>
#include <stdexcept>

namespace tdscat {

namespace {

// Quarter-turn about e1; its only real eigdirections are +-e1.
const Mat3 kAxisRotation = [] {
    Mat3 r;
    r(0, 0) = 1.0;
    r(1, 2) = 1.0;
    r(2, 1) = -1.0;
    return r;
}();

}  // namespace

DirectionTriplet orthonormal_triplet(const Vec3& theta) {
    Vec3 c = cross(theta, kAxisRotation * theta);
    if (norm(c) < 1e-8) c = cross(theta, Vec3{0.0, 1.0, 0.0});
    const Vec3 p1 = normalized(c);
    return {theta, p1, cross(p1, theta)};
}

DirectionSet build_direction_set(int polar_count, int azimuthal_count) {
    if (polar_count < 1 || azimuthal_count < 1)
        throw std::invalid_argument("build_direction_set: counts must be >= 1");
    const int n = polar_count * azimuthal_count;
    DirectionSet set;
    set.polar_count = polar_count;
    set.azimuthal_count = azimuthal_count;
    set.triplets.reserve(n);
    const double golden_angle = pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < n; ++k) {
        const double t = -1.0 + (2.0 * k + 1.0) / n;
        const double st = std::sqrt(1.0 - t * t);
        const double psi = golden_angle * k;
        const Vec3 theta{st * std::cos(psi), st * std::sin(psi), t};
        // Guard against duplicates; the lattice never produces any.
        bool dup = false;
        for (const auto& tr : set.triplets)
            if (norm(tr.theta - theta) < 1e-12) { dup = true; break; }
        if (!dup) set.triplets.push_back(orthonormal_triplet(theta));
    }
    return set;
}

}  // namespace tdscat
