#include "bpcm/disk_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bpcm/special.hpp"

namespace bpcm {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_disks(double d, double r1, double r2) {
    if (d < 0.0 || r1 <= 0.0 || r2 <= 0.0) {
        throw std::domain_error("lens area: requires d >= 0, r1 > 0, r2 > 0");
    }
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

double lens_area(double d, double r1, double r2) {
    check_disks(d, r1, r2);
    if (r2 < r1) std::swap(r1, r2);  // canonical order makes the symmetry exact
    const double rmin = r1;
    if (d <= r2 - r1) return kPi * rmin * rmin;
    if (d >= r1 + r2) return 0.0;

    const double d2 = d * d;
    // Clamp the cosine arguments: near the containment boundary they drift
    // just past +-1 in floating point.
    const double cos1 = clamp_unit((d2 + r1 * r1 - r2 * r2) / (2.0 * d * r1));
    const double cos2 = clamp_unit((d2 + r2 * r2 - r1 * r1) / (2.0 * d * r2));
    const double tri2 = (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2);
    const double triangle = 0.5 * std::sqrt(std::max(0.0, tri2));
    return r1 * r1 * std::acos(cos1) + r2 * r2 * std::acos(cos2) - triangle;
}

double lens_area_lower_circle(double d, double r1, double r2) {
    check_disks(d, r1, r2);
    const double rmin = std::min(r1, r2);
    if (d <= std::abs(r1 - r2)) return kPi * rmin * rmin;
    if (d >= r1 + r2) return 0.0;
    const double radius = 0.5 * (r1 + r2 - d);
    return kPi * radius * radius;
}

double lens_area_upper_rect(double d, double r1, double r2) {
    check_disks(d, r1, r2);
    if (d >= r1 + r2) return 0.0;
    const double rmin = std::min(r1, r2);
    return std::min((r1 + r2 - d) * 2.0 * rmin, kPi * rmin * rmin);
}

double gaussian_disk_mass(double x, double r, double sigma, const QuadratureSettings& q) {
    if (!(sigma > 0.0)) throw std::domain_error("gaussian_disk_mass: sigma must be > 0");
    if (x < 0.0 || r < 0.0) throw std::domain_error("gaussian_disk_mass: x and r must be >= 0");
    if (r == 0.0) return 0.0;

    // Normalize to sigma = 1; the mass is scale invariant.
    const double a = x / sigma;
    const double b = r / sigma;

    // exp(-(a^2+u^2)/2) I0(a u) == exp(-(u-a)^2/2) i0_scaled(a u): the
    // integrand peaks near u = min(a, b) with O(1) width, so restrict to a
    // +-40 neighborhood (the remainder is < exp(-800)) and pre-split around
    // the peak so the first panels cannot straddle it unsampled.
    const double lo = std::max(0.0, a - 40.0);
    const double hi = std::min(b, a + 40.0);
    if (hi <= lo) return 0.0;

    auto integrand = [a](double u) {
        const double dev = u - a;
        return u * std::exp(-0.5 * dev * dev) * special::i0_scaled(a * u);
    };

    double cuts[4] = {lo, std::max(lo, std::min(hi, a - 8.0)), std::min(hi, std::max(lo, a + 8.0)), hi};
    std::sort(cuts, cuts + 4);
    double mass = 0.0;
    for (int i = 0; i < 3; ++i) {
        if (cuts[i + 1] > cuts[i]) mass += integrate_adaptive(integrand, cuts[i], cuts[i + 1], q);
    }
    return std::clamp(mass, 0.0, 1.0);
}

}  // namespace bpcm
