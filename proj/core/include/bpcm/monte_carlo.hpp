#pragma once

#include <cstddef>
#include <utility>

#include "bpcm/power.hpp"
#include "bpcm/process.hpp"
#include "bpcm/rng.hpp"

namespace bpcm {

/// A Monte Carlo result with a normal-theory 95% confidence interval.
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::pair<double, double> ci95{0.0, 0.0};
    std::size_t n_samples = 0;

    static Estimate from_mean(double value, double std_error, std::size_t n) {
        return {value, std_error, {value - 1.96 * std_error, value + 1.96 * std_error}, n};
    }
    bool contains(double x) const { return ci95.first <= x && x <= ci95.second; }
};

struct McConfig {
    int n_realizations = 200;
    int n_probes = 10000;  // FAC only
    Window window{1000.0, 1000.0};
    Seed seed{1};
    int parallelism = 0;  // 0: use all hardware threads

    void validate() const;
};

/// Fractional area covered. Per realization, n_probes uniform probe points
/// are tested against the germ set (spatial-hash queries at radius R); the
/// reported standard error is the between-realization one, since probes of
/// a clustered process are not independent. Sampling margin is
/// R + cluster spread, so coverage inside the window is edge-effect free.
Estimate estimate_fac(const BooleanModelSpec& model, const McConfig& cfg);

/// Probability that the covered region meets a disk event of radius r_K at
/// the window center: per realization, the event is met iff some germ lies
/// within R + r_K of the center. Requires the window half-width to exceed
/// R + r_K + cluster spread so all relevant parents are generated.
Estimate estimate_sensing_prob(const BooleanModelSpec& model, double r_K, const McConfig& cfg);

/// Per-unit-area power: per realization, sums tau * |germ - head|^alpha over
/// germs inside the window and divides by the window area.
Estimate estimate_power(const BooleanModelSpec& model, const PowerParams& p, const McConfig& cfg);

}  // namespace bpcm
