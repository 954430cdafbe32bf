#include "bpcm/monte_carlo.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "bpcm/sampling.hpp"
#include "bpcm/spatial_grid.hpp"

namespace bpcm {

namespace {

int effective_threads(int requested, int n_tasks) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    return std::min(n, n_tasks);
}

// Evaluates fn(i) for i in [0, n) on up to `threads` workers, storing each
// result by index. The later reduction is a sequential fold over the index
// order, so results do not depend on scheduling.
template <class Fn>
std::vector<double> map_indexed(int n, int threads, Fn&& fn) {
    std::vector<double> results(static_cast<std::size_t>(n));
    const int workers = effective_threads(threads, n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= n) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return results;
}

Estimate mean_over_realizations(const std::vector<double>& values) {
    const std::size_t n = values.size();
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double variance = n > 1 ? ss / static_cast<double>(n - 1) : 0.0;
    return Estimate::from_mean(mean, std::sqrt(variance / static_cast<double>(n)), n);
}

}  // namespace

void McConfig::validate() const {
    if (n_realizations < 1) throw std::domain_error("McConfig: n_realizations must be >= 1");
    if (n_probes < 1) throw std::domain_error("McConfig: n_probes must be >= 1");
    window.validate();
    if (parallelism < 0) throw std::domain_error("McConfig: parallelism must be >= 0");
}

Estimate estimate_fac(const BooleanModelSpec& model, const McConfig& cfg) {
    model.validate();
    cfg.validate();
    const double margin = model.R + model.process.spread();

    auto one = [&](int i) {
        Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(i));
        const Realization real = sample(model.process, cfg.window, margin, rng);
        const CoverageTester tester(real.germs, model.R);
        int covered = 0;
        for (int p = 0; p < cfg.n_probes; ++p) {
            const Point probe{rng.uniform(0.0, cfg.window.width), rng.uniform(0.0, cfg.window.height)};
            if (tester.covered(probe)) ++covered;
        }
        return static_cast<double>(covered) / cfg.n_probes;
    };
    return mean_over_realizations(map_indexed(cfg.n_realizations, cfg.parallelism, one));
}

Estimate estimate_sensing_prob(const BooleanModelSpec& model, double r_K, const McConfig& cfg) {
    model.validate();
    cfg.validate();
    if (r_K < 0.0) throw std::domain_error("estimate_sensing_prob: r_K must be >= 0");
    const double reach = model.R + r_K;
    const double spread = model.process.spread();
    const double half = 0.5 * std::min(cfg.window.width, cfg.window.height);
    if (half < reach + spread) {
        throw std::domain_error(
            "estimate_sensing_prob: window half-width must exceed R + r_K + cluster spread");
    }

    const Point center{0.5 * cfg.window.width, 0.5 * cfg.window.height};
    const double reach2 = reach * reach;
    auto one = [&](int i) {
        Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(i));
        const Realization real = sample(model.process, cfg.window, 0.0, rng);
        for (const Point& g : real.germs) {
            if (squared_distance(g, center) <= reach2) return 1.0;
        }
        return 0.0;
    };
    const std::vector<double> hits = map_indexed(cfg.n_realizations, cfg.parallelism, one);
    double k = 0.0;
    for (double h : hits) k += h;
    const double n = static_cast<double>(hits.size());
    const double p_hat = k / n;
    const double se = std::sqrt(p_hat * (1.0 - p_hat) / n);
    return Estimate::from_mean(p_hat, se, hits.size());
}

Estimate estimate_power(const BooleanModelSpec& model, const PowerParams& p, const McConfig& cfg) {
    model.validate();
    cfg.validate();
    if (p.tau < 0.0) throw std::domain_error("estimate_power: tau must be >= 0");
    if (!(p.alpha > 0.0)) throw std::domain_error("estimate_power: alpha must be > 0");
    const double margin = model.process.spread();

    auto one = [&](int i) {
        Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(i));
        const Realization real = sample(model.process, cfg.window, margin, rng);
        double total = 0.0;
        for (std::size_t g = 0; g < real.germs.size(); ++g) {
            const Point& z = real.germs[g];
            if (z.x < 0.0 || z.x > cfg.window.width || z.y < 0.0 || z.y > cfg.window.height) continue;
            total += p.tau * std::pow(std::sqrt(squared_distance(z, real.head_of(g))), p.alpha);
        }
        return total / cfg.window.area();
    };
    return mean_over_realizations(map_indexed(cfg.n_realizations, cfg.parallelism, one));
}

}  // namespace bpcm
