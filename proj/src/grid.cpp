#include "tdscat/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace tdscat {

SearchGrid::SearchGrid(Vec3 origin_, std::vector<Vec3> axes_, std::vector<int> counts_,
                       double spacing_)
    : origin(origin_), axes(std::move(axes_)), counts(std::move(counts_)), spacing(spacing_) {
    if (axes.size() != 2 && axes.size() != 3)
        throw std::invalid_argument("SearchGrid: need 2 or 3 axes");
    if (counts.size() != axes.size())
        throw std::invalid_argument("SearchGrid: counts/axes size mismatch");
    if (!(spacing > 0.0)) throw std::invalid_argument("SearchGrid: spacing must be positive");
    for (int c : counts)
        if (c < 2) throw std::invalid_argument("SearchGrid: counts must be >= 2");
    for (std::size_t a = 0; a < axes.size(); ++a) {
        if (std::abs(norm(axes[a]) - 1.0) > 1e-12)
            throw std::invalid_argument("SearchGrid: axes must be unit vectors");
        for (std::size_t b = a + 1; b < axes.size(); ++b)
            if (std::abs(dot(axes[a], axes[b])) > 1e-12)
                throw std::invalid_argument("SearchGrid: axes must be orthogonal");
    }
}

std::size_t SearchGrid::point_count() const {
    std::size_t n = 1;
    for (int c : counts) n *= static_cast<std::size_t>(c);
    return n;
}

Vec3 SearchGrid::point(std::size_t flat_index) const {
    Vec3 p = origin;
    for (std::size_t a = axes.size(); a-- > 0;) {
        const std::size_t c = static_cast<std::size_t>(counts[a]);
        p += axes[a] * (spacing * static_cast<double>(flat_index % c));
        flat_index /= c;
    }
    return p;
}

SearchGrid SearchGrid::centered_plane(double half_extent, int count_per_axis, double z0) {
    return SearchGrid({-half_extent, -half_extent, z0},
                      {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}, {count_per_axis, count_per_axis},
                      2.0 * half_extent / (count_per_axis - 1));
}

std::vector<Vec3> enumerate_grid(const SearchGrid& grid) {
    std::vector<Vec3> pts;
    const std::size_t n = grid.point_count();
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.push_back(grid.point(i));
    return pts;
}

}  // namespace tdscat
