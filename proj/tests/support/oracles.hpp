#pragma once

// Reference implementations used only by tests. They deliberately avoid the
// library's quadrature and special-function code paths so that agreement is
// evidence, not tautology.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bpcm/rng.hpp"

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

/// Composite Simpson rule with n panels (rounded up to even).
template <class F>
double simpson(F&& f, double a, double b, int n) {
    if (n % 2 != 0) ++n;
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 != 0 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

/// erf by Maclaurin series for small arguments and the Lentz continued
/// fraction for erfc above 2.
inline double erf_ref(double x) {
    const double ax = std::abs(x);
    if (ax < 2.0) {
        double term = x;
        double sum = x;
        for (int k = 1; k < 200; ++k) {
            term *= -x * x / k;
            sum += term / (2 * k + 1);
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum * 2.0 / std::sqrt(kPi);
    }
    // erfc(ax) = exp(-ax^2)/sqrt(pi) / (ax + (1/2)/(ax + 1/(ax + (3/2)/(ax + ...)))),
    // evaluated backward; 60 levels is plenty for ax >= 2.
    double cf = 0.0;
    for (int k = 60; k >= 1; --k) cf = (k / 2.0) / (ax + cf);
    const double erfc = std::exp(-ax * ax) / std::sqrt(kPi) / (ax + cf);
    const double result = 1.0 - erfc;
    return x < 0 ? -result : result;
}

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], by
/// Newton iteration on the Legendre recurrence.
inline void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

/// Gaussian disk mass straight from its definition: the (t, theta) double
/// integral on a tensor Gauss-Legendre grid. Accurate to ~1e-12 for the
/// parameter scales used in tests.
inline double gaussian_disk_mass_raw(double x, double r, double sigma, int n = 240) {
    std::vector<double> gl_nodes, gl_weights;
    gauss_legendre(n, gl_nodes, gl_weights);
    const double s2 = sigma * sigma;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = 0.5 * r * (gl_nodes[i] + 1.0);
        const double wt = 0.5 * r * gl_weights[i];
        for (int j = 0; j < n; ++j) {
            const double theta = kPi * (gl_nodes[j] + 1.0);  // over [0, 2pi]
            const double wth = kPi * gl_weights[j];
            const double expo = -(x * x + t * t + 2.0 * x * t * std::cos(theta)) / (2.0 * s2);
            sum += wt * wth * std::exp(expo) * t;
        }
    }
    return sum / (2.0 * kPi * s2);
}

/// Two-disk intersection area by hit counting: uniform samples over the
/// first disk, scored against the second.
inline double lens_area_mc(double d, double r1, double r2, long n_samples, std::uint64_t seed) {
    bpcm::Rng rng(bpcm::Seed{seed});
    long hits = 0;
    for (long i = 0; i < n_samples; ++i) {
        const double radius = r1 * std::sqrt(rng.uniform());
        const double angle = 2.0 * kPi * rng.uniform();
        const double px = radius * std::cos(angle);
        const double py = radius * std::sin(angle);
        const double dx = px - d;
        if (dx * dx + py * py <= r2 * r2) ++hits;
    }
    return kPi * r1 * r1 * static_cast<double>(hits) / static_cast<double>(n_samples);
}

}  // namespace oracle
