#ifndef TDSCAT_GRID_HPP
#define TDSCAT_GRID_HPP

#include <cstddef>
#include <vector>

#include "tdscat/linalg.hpp"

namespace tdscat {

// Cartesian search grid: plane (2 axes) or box (3 axes) of sample points
// point(i...) = origin + sum_a index_a * spacing * axis_a.
// Enumeration is row-major with the last axis fastest; this ordering is the
// CSV export order.
struct SearchGrid {
    Vec3 origin;
    std::vector<Vec3> axes;   // 2 or 3 orthogonal unit vectors
    std::vector<int> counts;  // per-axis point counts, >= 2
    double spacing = 0.0;

    SearchGrid(Vec3 origin_, std::vector<Vec3> axes_, std::vector<int> counts_, double spacing_);

    std::size_t point_count() const;
    Vec3 point(std::size_t flat_index) const;

    // Convenience: centered plane [-half, half]^2 in the z = z0 plane.
    static SearchGrid centered_plane(double half_extent, int count_per_axis, double z0 = 0.0);
};

std::vector<Vec3> enumerate_grid(const SearchGrid& grid);

}  // namespace tdscat

#endif
