#pragma once

#include <cstdint>
#include <random>
#include <utility>

namespace bpcm {

/// Master seed for a reproducible experiment. Identical seed and inputs
/// give bit-identical results on every platform: all variate samplers are
/// implemented locally on top of std::mt19937_64, whose output sequence is
/// fixed by the standard.
struct Seed {
    std::uint64_t value = 1;
};

/// Finalizer from the SplitMix64 generator; used to decorrelate raw seeds
/// and to derive sub-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Deterministic random stream.
///
/// Sub-stream rule: stream `i` of master seed `s` is seeded with
/// splitmix64(s + (i+1)*0x9e3779b97f4a7c15), so realizations can be computed
/// on any number of threads in any order without changing their draws.
class Rng {
public:
    explicit Rng(Seed seed) : eng_(splitmix64(seed.value)) {}

    static Rng substream(Seed master, std::uint64_t index) {
        return Rng(Seed{master.value + (index + 1) * 0x9e3779b97f4a7c15ull});
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Poisson count with the given mean. Exact: Knuth's product method,
    /// with large means split into chunks so exp(-mean) stays normal.
    std::uint64_t poisson(double mean);

    /// One isotropic Gaussian pair (std-dev sigma per axis) via Box-Muller;
    /// consumes exactly two uniforms.
    std::pair<double, double> gaussian_pair(double sigma);

private:
    std::mt19937_64 eng_;
};

}  // namespace bpcm
