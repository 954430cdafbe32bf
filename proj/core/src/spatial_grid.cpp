#include "bpcm/spatial_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bpcm {

namespace {
constexpr std::size_t kBruteForceLimit = 1000;
}

SpatialGrid::SpatialGrid(std::span<const Point> points, double cell_size) {
    if (!(cell_size > 0.0)) throw std::domain_error("SpatialGrid: cell size must be > 0");
    cell_ = cell_size;
    if (points.empty()) {
        nx_ = ny_ = 1;
        starts_.assign(2, 0);
        return;
    }

    double max_x = points[0].x, max_y = points[0].y;
    min_x_ = points[0].x;
    min_y_ = points[0].y;
    for (const Point& p : points) {
        min_x_ = std::min(min_x_, p.x);
        min_y_ = std::min(min_y_, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    // Keep the table proportional to the point count; growing cells beyond
    // the query radius never breaks the 3x3 neighborhood search.
    auto refresh_dims = [&] {
        nx_ = static_cast<int>((max_x - min_x_) / cell_) + 1;
        ny_ = static_cast<int>((max_y - min_y_) / cell_) + 1;
    };
    refresh_dims();
    while (static_cast<std::size_t>(nx_) * ny_ > 4 * points.size() + 64) {
        cell_ *= 2.0;
        refresh_dims();
    }

    auto cell_of = [this](const Point& p) {
        const int cx = std::min(nx_ - 1, static_cast<int>((p.x - min_x_) / cell_));
        const int cy = std::min(ny_ - 1, static_cast<int>((p.y - min_y_) / cell_));
        return static_cast<std::size_t>(cy) * nx_ + cx;
    };

    starts_.assign(static_cast<std::size_t>(nx_) * ny_ + 1, 0);
    for (const Point& p : points) ++starts_[cell_of(p) + 1];
    for (std::size_t i = 1; i < starts_.size(); ++i) starts_[i] += starts_[i - 1];

    points_.resize(points.size());
    std::vector<std::uint32_t> cursor(starts_.begin(), starts_.end() - 1);
    for (const Point& p : points) points_[cursor[cell_of(p)]++] = p;
}

bool SpatialGrid::any_within(const Point& p, double radius) const {
    const double r2 = radius * radius;
    const int cx = static_cast<int>(std::floor((p.x - min_x_) / cell_));
    const int cy = static_cast<int>(std::floor((p.y - min_y_) / cell_));
    for (int gy = std::max(0, cy - 1); gy <= std::min(ny_ - 1, cy + 1); ++gy) {
        for (int gx = std::max(0, cx - 1); gx <= std::min(nx_ - 1, cx + 1); ++gx) {
            const std::size_t cell = static_cast<std::size_t>(gy) * nx_ + gx;
            for (std::uint32_t i = starts_[cell]; i < starts_[cell + 1]; ++i) {
                if (squared_distance(points_[i], p) <= r2) return true;
            }
        }
    }
    return false;
}

CoverageTester::CoverageTester(std::span<const Point> points, double radius)
    : points_(points), radius_(radius) {
    if (!(radius > 0.0)) throw std::domain_error("CoverageTester: radius must be > 0");
    if (points.size() >= kBruteForceLimit) grid_.emplace_back(points, radius);
}

bool CoverageTester::covered(const Point& p) const {
    if (!grid_.empty()) return grid_[0].any_within(p, radius_);
    const double r2 = radius_ * radius_;
    for (const Point& g : points_) {
        if (squared_distance(g, p) <= r2) return true;
    }
    return false;
}

}  // namespace bpcm
