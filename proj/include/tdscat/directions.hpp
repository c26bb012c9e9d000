#ifndef TDSCAT_DIRECTIONS_HPP
#define TDSCAT_DIRECTIONS_HPP

#include <cstddef>
#include <vector>

#include "tdscat/linalg.hpp"

namespace tdscat {

// Incident direction with its orthonormal polarization pair.
struct DirectionTriplet {
    Vec3 theta;
    Vec3 perp1;
    Vec3 perp2;
};

// Set of n quasi-uniform incident directions. Each direction carries two
// polarizations, so the set drives 2n incident fields; an (M, N) request
// yields n = M*N directions (M=N=5 -> 50 fields, M=N=10 -> 200).
struct DirectionSet {
    std::vector<DirectionTriplet> triplets;
    int polar_count = 0;
    int azimuthal_count = 0;

    std::size_t size() const { return triplets.size(); }
    std::size_t incident_field_count() const { return 2 * triplets.size(); }
};

// perp1 = (theta x R theta)/|theta x R theta| with R the quarter-turn about
// e1; falls back to the e2 axis when theta is within 1e-8 of the rotation
// axis. perp2 = perp1 x theta.
DirectionTriplet orthonormal_triplet(const Vec3& theta);

// Spherical Fibonacci lattice of M*N directions. Quasi-uniform placement is
// what makes the equal-weight direction averages converge to spherical means
// (the multi-measurement identities require it); a latitude-longitude grid
// does not converge, regardless of M and N.
DirectionSet build_direction_set(int polar_count, int azimuthal_count);

}  // namespace tdscat

#endif
