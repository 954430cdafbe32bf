#include "bpcm/special.hpp"

#include <cmath>

namespace bpcm::special {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kSeriesAsymptoticSplit = 20.0;

// Power series sum_k (x^2/4)^k / (k!)^2. All terms positive, so the sum is
// accurate to a few ulp; the largest term at x = 20 is ~8e6, no overflow.
double i0_series(double x) {
    const double quarter_sq = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= quarter_sq / (static_cast<double>(k) * k);
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum;
}

// Asymptotic series P(1/x) with I0(x) ~ e^x P(1/x) / sqrt(2 pi x). The
// omitted exponentially small companion series is ~e^{-2x} relative, below
// double precision for x >= 20; the terms themselves drop under 1e-18 well
// before the divergent regime at k ~ 2x.
double i0_scaled_asymptotic(double x) {
    double term = 1.0;
    double sum = 1.0;
    double prev = 1.0;
    for (int k = 1; k <= 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= odd * odd / (8.0 * k * x);
        if (term >= prev) break;  // past the optimal truncation point
        sum += term;
        if (term < 1e-18 * sum) break;
        prev = term;
    }
    return sum / std::sqrt(kTwoPi * x);
}

}  // namespace

double i0_scaled(double x) {
    x = std::abs(x);
    if (x < kSeriesAsymptoticSplit) return i0_series(x) * std::exp(-x);
    return i0_scaled_asymptotic(x);
}

double log_i0(double x) {
    x = std::abs(x);
    return x + std::log(i0_scaled(x));
}

}  // namespace bpcm::special
