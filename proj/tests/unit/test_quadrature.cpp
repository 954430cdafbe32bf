#include <cmath>

#include <doctest.h>

#include "bpcm/quadrature.hpp"
#include "support/oracles.hpp"

using bpcm::QuadratureSettings;
using bpcm::integrate_adaptive;
using bpcm::integrate_semi_infinite;

TEST_CASE("integrate_adaptive handles simple integrands") {
    CHECK(integrate_adaptive([](double x) { return x; }, 0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(integrate_adaptive([](double) { return 0.0; }, -3.0, 7.0) == 0.0);
    CHECK(integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
}

TEST_CASE("gaussian integral matches the erf reference") {
    const double value = integrate_adaptive([](double x) { return std::exp(-x * x); }, 0.0, 6.0);
    const double reference = std::sqrt(oracle::kPi) / 2.0 * oracle::erf_ref(6.0);
    CHECK(value == doctest::Approx(reference).epsilon(1e-10));
    CHECK(value == doctest::Approx(0.88622692545275799).epsilon(1e-10));
}

TEST_CASE("polynomials are integrated to near machine accuracy") {
    bpcm::Rng rng(bpcm::Seed{2024});
    for (int trial = 0; trial < 20; ++trial) {
        double coeff[13];
        for (double& c : coeff) c = rng.uniform(-2.0, 2.0);
        auto poly = [&](double x) {
            double acc = 0.0;
            for (int k = 12; k >= 0; --k) acc = acc * x + coeff[k];
            return acc;
        };
        const double a = rng.uniform(-3.0, 0.0);
        const double b = rng.uniform(0.0, 3.0);
        double exact = 0.0;
        for (int k = 0; k <= 12; ++k) {
            exact += coeff[k] * (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1);
        }
        CHECK(integrate_adaptive(poly, a, b) == doctest::Approx(exact).epsilon(1e-12));
    }
}

TEST_CASE("exhausted subdivision budget reports the partial result") {
    QuadratureSettings q;
    q.rel_tol = 1e-14;
    q.abs_tol = 0.0;
    q.max_subdivisions = 4;
    try {
        integrate_adaptive([](double x) { return std::sin(500.0 * x * x); }, 0.0, 3.0, q);
        FAIL("expected convergence_error");
    } catch (const bpcm::convergence_error& e) {
        CHECK(std::isfinite(e.estimate()));
        CHECK(e.error_bound() > 0.0);
    }
}

TEST_CASE("semi-infinite integration finds Gaussian-type tails") {
    const double value =
        integrate_semi_infinite([](double x) { return x * std::exp(-0.5 * x * x); }, 0.0, 1.0);
    CHECK(value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(integrate_semi_infinite([](double) { return 0.0; }, 0.0, 5.0) == 0.0);
}

TEST_CASE("semi-infinite integration rejects heavy tails") {
    CHECK_THROWS_AS(integrate_semi_infinite([](double x) { return 1.0 / (1.0 + x); }, 0.0, 1.0),
                    bpcm::convergence_error);
}

TEST_CASE("min_extent covers integrands with a plateau before the decay") {
    // Constant 1 until x = 30, then a sharp Gaussian falloff; without the
    // extent hint the first unit panels would see only the plateau.
    auto f = [](double x) { return x < 30.0 ? 1.0 : std::exp(-8.0 * (x - 30.0) * (x - 30.0)); };
    const double value = integrate_semi_infinite(f, 0.0, 1.0, {}, 30.0);
    CHECK(value == doctest::Approx(30.0 + 0.5 * std::sqrt(oracle::kPi / 8.0)).epsilon(1e-8));
}

TEST_CASE("settings are validated") {
    QuadratureSettings q;
    q.rel_tol = 0.0;
    CHECK_THROWS_AS(q.validate(), std::domain_error);
    q = {};
    q.tail_cutoff = 1.0;
    CHECK_THROWS_AS(q.validate(), std::domain_error);
    q = {};
    q.max_subdivisions = 0;
    CHECK_THROWS_AS(q.validate(), std::domain_error);
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, 1.0, 0.0), std::domain_error);
}
