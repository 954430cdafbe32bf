#include "bpcm/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace bpcm {

namespace {

constexpr double kPoissonChunk = 256.0;  // exp(-256) ~ 1e-112, far from underflow

}  // namespace

std::uint64_t Rng::poisson(double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) {
        throw std::domain_error("Rng::poisson: mean must be finite and >= 0");
    }
    std::uint64_t total = 0;
    // Poisson(a + b) = Poisson(a) + Poisson(b) for independent chunks.
    while (mean > kPoissonChunk) {
        total += poisson(kPoissonChunk);
        mean -= kPoissonChunk;
    }
    if (mean == 0.0) return total;
    const double limit = std::exp(-mean);
    double prod = 1.0;
    std::uint64_t k = 0;
    do {
        ++k;
        prod *= uniform();
    } while (prod > limit);
    return total + (k - 1);
}

std::pair<double, double> Rng::gaussian_pair(double sigma) {
    // 1 - u keeps the argument of log strictly positive.
    const double radius = sigma * std::sqrt(-2.0 * std::log(1.0 - uniform()));
    const double angle = 2.0 * 3.14159265358979323846 * uniform();
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace bpcm
