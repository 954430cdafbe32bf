#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bpcm/sampling.hpp"

namespace bpcm {

/// Uniform hash grid over planar points for fixed-radius membership tests.
/// Cell size equals the query radius, so any point within radius of a probe
/// lies in the probe's 3x3 cell neighborhood.
class SpatialGrid {
public:
    SpatialGrid(std::span<const Point> points, double cell_size);

    /// True iff some indexed point lies within `radius` of p. Requires
    /// radius <= cell size.
    bool any_within(const Point& p, double radius) const;

private:
    std::vector<Point> points_;          // grouped by cell (CSR layout)
    std::vector<std::uint32_t> starts_;  // nx*ny+1 offsets into points_
    double cell_ = 1.0;
    double min_x_ = 0.0, min_y_ = 0.0;
    int nx_ = 0, ny_ = 0;
};

/// Membership tester that picks the grid for large point sets and a linear
/// scan below 1000 points, where the scan wins.
class CoverageTester {
public:
    CoverageTester(std::span<const Point> points, double radius);
    bool covered(const Point& p) const;

private:
    std::span<const Point> points_;
    std::vector<SpatialGrid> grid_;  // empty or one element
    double radius_ = 0.0;
};

}  // namespace bpcm
