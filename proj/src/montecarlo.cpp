#include "wpcrs/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace wpcrs {

namespace {

constexpr long kBlockSize = 1024;

struct Sums {
    double r1 = 0.0;
    double r2 = 0.0;
    double r1_sq = 0.0;
    double r2_sq = 0.0;
    double sum_sq = 0.0;

    Sums& operator+=(const Sums& o) {
        r1 += o.r1;
        r2 += o.r2;
        r1_sq += o.r1_sq;
        r2_sq += o.r2_sq;
        sum_sq += o.sum_sq;
        return *this;
    }
};

// Tree reduction over fixed block boundaries; the combine order depends
// only on block indices, never on which thread produced which block.
Sums reduce_pairwise(const std::vector<Sums>& blocks, std::size_t lo,
                     std::size_t hi) {
    if (hi - lo == 1) return blocks[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    Sums s = reduce_pairwise(blocks, lo, mid);
    s += reduce_pairwise(blocks, mid, hi);
    return s;
}

double standard_error(double sq_sum, double mean, long n) {
    if (n < 2) return 0.0;
    const double var = (sq_sum - static_cast<double>(n) * mean * mean) /
                       static_cast<double>(n - 1);
    return std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
}

}  // namespace

RatePair trial_rate(const SystemParams& params, const PowerBudget& budget,
                    std::uint64_t seed, std::uint64_t trial) {
    RngStream rng(seed, trial);
    const ChannelDraw draw = sample_draw(params, rng);
    return instantaneous_rates(instantaneous_sinrs(params, budget, draw),
                               budget.zeta);
}

ErgodicEstimate estimate_ergodic(const SystemParams& params, long n_trials,
                                 std::uint64_t seed, int threads) {
    params.validate();
    if (n_trials < 1)
        throw std::domain_error("estimate_ergodic: n_trials must be at least 1");

    const PowerBudget budget = power_budget(params);
    const std::size_t n_blocks =
        static_cast<std::size_t>((n_trials + kBlockSize - 1) / kBlockSize);
    std::vector<Sums> blocks(n_blocks);

    auto run_block = [&](std::size_t b) {
        const long begin = static_cast<long>(b) * kBlockSize;
        const long end = std::min(begin + kBlockSize, n_trials);
        Sums s;
        for (long i = begin; i < end; ++i) {
            const RatePair r = trial_rate(params, budget, seed,
                                          static_cast<std::uint64_t>(i));
            s.r1 += r.r1;
            s.r2 += r.r2;
            s.r1_sq += r.r1 * r.r1;
            s.r2_sq += r.r2 * r.r2;
            s.sum_sq += r.sum * r.sum;
        }
        blocks[b] = s;
    };

    int n_threads = threads > 0
                        ? threads
                        : static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::max(1, std::min<int>(n_threads,
                                          static_cast<int>(n_blocks)));
    if (n_threads == 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) run_block(b);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t b = next.fetch_add(1); b < n_blocks;
                 b = next.fetch_add(1))
                run_block(b);
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    const Sums total = reduce_pairwise(blocks, 0, n_blocks);
    const double n = static_cast<double>(n_trials);

    ErgodicEstimate e;
    e.n_trials = n_trials;
    e.c1 = total.r1 / n;
    e.c2 = total.r2 / n;
    e.c_sum = e.c1 + e.c2;
    e.se1 = standard_error(total.r1_sq, e.c1, n_trials);
    e.se2 = standard_error(total.r2_sq, e.c2, n_trials);
    e.se_sum = standard_error(total.sum_sq, e.c_sum, n_trials);
    return e;
}

}  // namespace wpcrs
