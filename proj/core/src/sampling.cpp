#include "bpcm/sampling.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace bpcm {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

struct Rect {
    double x0, y0, x1, y1;
    double area() const { return (x1 - x0) * (y1 - y0); }
};

Rect dilate(const Window& w, double pad) {
    return {-pad, -pad, w.width + pad, w.height + pad};
}

Point uniform_in(Rng& rng, const Rect& r) {
    return {rng.uniform(r.x0, r.x1), rng.uniform(r.y0, r.y1)};
}

std::uint32_t nearest_head(const Point& p, const std::vector<Point>& heads) {
    std::uint32_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::uint32_t i = 0; i < heads.size(); ++i) {
        const double d2 = squared_distance(p, heads[i]);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return best;
}

}  // namespace

Realization sample(const ProcessSpec& spec, const Window& window, double margin, Rng& rng,
                   double expected_point_cap) {
    spec.validate();
    window.validate();
    if (margin < 0.0) throw std::domain_error("sample: margin must be >= 0");

    const Rect germ_rect = dilate(window, margin);

    Realization out;
    if (spec.kind == ProcessKind::ppp) {
        // Heads get an extra search pad so nearest-head queries are unbiased
        // for germs near the boundary: a head closer than the pad exists with
        // probability 1 - exp(-25 pi) when the pad is 5/sqrt(lambda_p).
        const double head_pad =
            margin + (spec.lambda_p > 0.0 ? 5.0 / std::sqrt(spec.lambda_p) : 0.0);
        const Rect head_rect = dilate(window, head_pad);
        const double expected =
            spec.total_density() * germ_rect.area() + spec.lambda_p * head_rect.area();
        if (expected > expected_point_cap) {
            throw resource_error("sample: expected point count exceeds the cap");
        }

        const std::uint64_t n_germs = rng.poisson(spec.total_density() * germ_rect.area());
        out.germs.reserve(n_germs);
        for (std::uint64_t i = 0; i < n_germs; ++i) out.germs.push_back(uniform_in(rng, germ_rect));

        const std::uint64_t n_heads = rng.poisson(spec.lambda_p * head_rect.area());
        out.heads.reserve(n_heads);
        for (std::uint64_t i = 0; i < n_heads; ++i) out.heads.push_back(uniform_in(rng, head_rect));

        if (out.heads.empty() && !out.germs.empty()) {
            // Probability ~exp(-lambda_p * |head window|); not worth a code path.
            throw resource_error("sample: no cluster heads drawn for a nonempty PPP deployment");
        }
        out.parent_of.reserve(out.germs.size());
        for (const Point& g : out.germs) out.parent_of.push_back(nearest_head(g, out.heads));
        return out;
    }

    const double expected = spec.lambda_p * germ_rect.area() * (1.0 + spec.m);
    if (expected > expected_point_cap) {
        throw resource_error("sample: expected point count exceeds the cap");
    }

    const std::uint64_t n_parents = rng.poisson(spec.lambda_p * germ_rect.area());
    out.heads.reserve(n_parents);
    for (std::uint64_t i = 0; i < n_parents; ++i) {
        const Point head = uniform_in(rng, germ_rect);
        out.heads.push_back(head);
        const std::uint64_t daughters = rng.poisson(spec.m);
        for (std::uint64_t j = 0; j < daughters; ++j) {
            Point offset;
            if (spec.kind == ProcessKind::mcp) {
                // radius r_d * sqrt(U) makes the point uniform on the disk
                const double radius = spec.r_d * std::sqrt(rng.uniform());
                const double angle = kTwoPi * rng.uniform();
                offset = {radius * std::cos(angle), radius * std::sin(angle)};
            } else {
                const auto [dx, dy] = rng.gaussian_pair(spec.sigma);
                offset = {dx, dy};
            }
            out.germs.push_back({head.x + offset.x, head.y + offset.y});
            out.parent_of.push_back(static_cast<std::uint32_t>(i));
        }
    }
    return out;
}

Realization sample(const ProcessSpec& spec, const Window& window, double margin, Seed seed,
                   double expected_point_cap) {
    Rng rng(seed);
    return sample(spec, window, margin, rng, expected_point_cap);
}

void write_realization_csv(std::ostream& out, const Realization& realization) {
    out << "germ_x,germ_y,head_x,head_y\n";
    char line[160];
    for (std::size_t i = 0; i < realization.germs.size(); ++i) {
        const Point& g = realization.germs[i];
        const Point& h = realization.head_of(i);
        std::snprintf(line, sizeof(line), "%.9g,%.9g,%.9g,%.9g\n", g.x, g.y, h.x, h.y);
        out << line;
    }
}

}  // namespace bpcm
