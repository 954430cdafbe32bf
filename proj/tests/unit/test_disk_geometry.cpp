#include <cmath>

#include <doctest.h>

#include "bpcm/disk_geometry.hpp"
#include "bpcm/rng.hpp"
#include "bpcm/special.hpp"
#include "support/oracles.hpp"

using bpcm::gaussian_disk_mass;
using bpcm::lens_area;
using bpcm::lens_area_lower_circle;
using bpcm::lens_area_upper_rect;
using oracle::kPi;

TEST_CASE("lens area: containment, tangency, and the half-overlap case") {
    CHECK(lens_area(0.0, 5.0, 5.0) == doctest::Approx(25.0 * kPi).epsilon(1e-14));
    CHECK(lens_area(10.0, 5.0, 5.0) == 0.0);

    // Equal radii admit the independent circular-segment formula
    // 2 r^2 acos(d / 2r) - (d/2) sqrt(4 r^2 - d^2).
    const double segment = 2.0 * 25.0 * std::acos(0.5) - 2.5 * std::sqrt(75.0);
    CHECK(lens_area(5.0, 5.0, 5.0) == doctest::Approx(segment).epsilon(1e-14));
    CHECK(lens_area(5.0, 5.0, 5.0) == doctest::Approx(30.7092424652).epsilon(1e-10));
}

TEST_CASE("lens area agrees with a 10^7-sample hit-count oracle") {
    const double mc = oracle::lens_area_mc(5.0, 5.0, 5.0, 10'000'000, 99);
    // binomial std error ~0.012 at this sample count; allow 4 sigma
    CHECK(std::abs(mc - lens_area(5.0, 5.0, 5.0)) < 0.05);
}

TEST_CASE("lens bounds: closed-form examples") {
    CHECK(lens_area_lower_circle(0.0, 5.0, 5.0) == doctest::Approx(25.0 * kPi));
    CHECK(lens_area_lower_circle(5.0, 5.0, 5.0) == doctest::Approx(kPi * 2.5 * 2.5));
    CHECK(lens_area_lower_circle(5.0, 5.0, 5.0) < 30.7092424652);
    CHECK(lens_area_lower_circle(10.0, 5.0, 5.0) == 0.0);

    CHECK(lens_area_upper_rect(10.0, 5.0, 5.0) == 0.0);
    CHECK(lens_area_upper_rect(5.0, 5.0, 5.0) == doctest::Approx(50.0));
    CHECK(lens_area_upper_rect(5.0, 5.0, 5.0) > 30.7092424652);
    CHECK(lens_area_upper_rect(0.0, 3.0, 5.0) == doctest::Approx(9.0 * kPi));
}

TEST_CASE("lens sandwich and exact symmetry on a randomized grid") {
    bpcm::Rng rng(bpcm::Seed{11});
    for (int i = 0; i < 500; ++i) {
        const double r1 = rng.uniform(0.05, 20.0);
        const double r2 = rng.uniform(0.05, 20.0);
        const double d = rng.uniform(0.0, 1.2 * (r1 + r2));
        CAPTURE(d);
        CAPTURE(r1);
        CAPTURE(r2);
        const double area = lens_area(d, r1, r2);
        CHECK(lens_area_lower_circle(d, r1, r2) <= area + 1e-12);
        CHECK(lens_area_upper_rect(d, r1, r2) >= area - 1e-12);
        CHECK(lens_area(d, r1, r2) == lens_area(d, r2, r1));
    }
}

TEST_CASE("lens area decreases in d on the overlap range") {
    double prev = lens_area(1.0 + 1e-9, 4.0, 5.0);
    for (double d = 1.1; d < 9.0; d += 0.1) {
        const double cur = lens_area(d, 4.0, 5.0);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("lens area rejects bad arguments") {
    CHECK_THROWS_AS(lens_area(-1.0, 5.0, 5.0), std::domain_error);
    CHECK_THROWS_AS(lens_area(1.0, 0.0, 5.0), std::domain_error);
    CHECK_THROWS_AS(lens_area_lower_circle(1.0, 5.0, -5.0), std::domain_error);
    CHECK_THROWS_AS(lens_area_upper_rect(-0.5, 5.0, 5.0), std::domain_error);
}

TEST_CASE("gaussian disk mass: closed-form cases") {
    // Centered disk: the Rayleigh CDF.
    CHECK(gaussian_disk_mass(0.0, 60.0, 60.0) == doctest::Approx(1.0 - std::exp(-0.5)).epsilon(1e-10));
    // Total mass.
    CHECK(gaussian_disk_mass(0.0, 20.0 * 7.0, 7.0) == doctest::Approx(1.0).epsilon(1e-12));
    // Empty disk.
    CHECK(gaussian_disk_mass(3.0, 0.0, 1.0) == 0.0);
}

TEST_CASE("gaussian disk mass matches the raw double-integral oracle") {
    const double raw = oracle::gaussian_disk_mass_raw(60.0, 80.0, 60.0);
    CHECK(raw == doctest::Approx(0.42973907039172361).epsilon(1e-10));  // mpmath, 40 digits
    CHECK(gaussian_disk_mass(60.0, 80.0, 60.0) == doctest::Approx(raw).epsilon(1e-8));

    for (const auto& [x, r, s] : {std::tuple{10.0, 25.0, 20.0}, {100.0, 30.0, 15.0}, {0.5, 2.0, 1.0}}) {
        CAPTURE(x);
        CHECK(gaussian_disk_mass(x, r, s) ==
              doctest::Approx(oracle::gaussian_disk_mass_raw(x, r, s)).epsilon(1e-8));
    }
}

TEST_CASE("gaussian disk mass: derivative in r matches the radial density") {
    for (const auto& [x, r, s] : {std::tuple{30.0, 50.0, 40.0}, {80.0, 60.0, 25.0}, {0.0, 1.5, 1.0}}) {
        const double h = 1e-4 * s;
        const double fd =
            (gaussian_disk_mass(x, r + h, s) - gaussian_disk_mass(x, r - h, s)) / (2.0 * h);
        const double dev = (x - r) / s;
        const double analytic =
            (r / (s * s)) * std::exp(-0.5 * dev * dev) * bpcm::special::i0_scaled(x * r / (s * s));
        CAPTURE(x);
        CHECK(fd == doctest::Approx(analytic).epsilon(1e-5));
    }
}

TEST_CASE("gaussian disk mass: bounds, monotonicity, scale invariance") {
    bpcm::Rng rng(bpcm::Seed{5});
    for (int i = 0; i < 50; ++i) {
        const double s = rng.uniform(0.5, 50.0);
        const double x = rng.uniform(0.0, 5.0 * s);
        const double r = rng.uniform(0.0, 5.0 * s);
        const double g = gaussian_disk_mass(x, r, s);
        CHECK(g >= 0.0);
        CHECK(g <= 1.0);
        const double c = rng.uniform(0.1, 10.0);
        CHECK(gaussian_disk_mass(c * x, c * r, c * s) == doctest::Approx(g).epsilon(1e-9));
        CHECK(gaussian_disk_mass(x + 0.5 * s, r, s) <= g + 1e-12);           // decreasing in x
        CHECK(gaussian_disk_mass(x, r + 0.5 * s, s) >= g - 1e-12);           // increasing in r
    }
    CHECK_THROWS_AS(gaussian_disk_mass(1.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(gaussian_disk_mass(-1.0, 1.0, 1.0), std::domain_error);
}
