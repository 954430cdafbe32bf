#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "bpcm/process.hpp"
#include "bpcm/rng.hpp"

namespace bpcm {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double squared_distance(const Point& p, const Point& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return dx * dx + dy * dy;
}

/// One sampled point pattern: sensor locations plus their cluster heads.
/// Germs may lie outside the observation window (they are generated on a
/// dilated window so that coverage statistics inside the window are free of
/// edge effects).
struct Realization {
    std::vector<Point> germs;
    std::vector<std::uint32_t> parent_of;  // germ index -> index into heads
    std::vector<Point> heads;

    const Point& head_of(std::size_t germ) const { return heads[parent_of[germ]]; }
};

/// Raised when a request would generate an unreasonable number of points.
class resource_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultPointCap = 1e7;

/// Draws one realization on the window dilated by `margin` on every side.
/// MCP/TCP: parents are a PPP of density lambda_p on the dilated window and
/// daughters are scattered around them. PPP: germs are a PPP of density
/// lambda_p*m on the dilated window; heads come from an independent PPP of
/// density lambda_p on the window dilated by margin plus a 5/sqrt(lambda_p)
/// search pad, and each germ is assigned its nearest head.
///
/// The Rng overload consumes draws from the given stream (callers that need
/// more variates tied to the same realization keep using the stream).
Realization sample(const ProcessSpec& spec, const Window& window, double margin, Rng& rng,
                   double expected_point_cap = kDefaultPointCap);
Realization sample(const ProcessSpec& spec, const Window& window, double margin, Seed seed,
                   double expected_point_cap = kDefaultPointCap);

/// CSV dump, one row per germ: germ_x,germ_y,head_x,head_y (meters).
void write_realization_csv(std::ostream& out, const Realization& realization);

}  // namespace bpcm
