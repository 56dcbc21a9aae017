#pragma once

#include <cstdint>

#include "wpcrs/rates.hpp"

namespace wpcrs {

/// Sample means of the achievable rates over fading realizations, with
/// standard errors so callers can set statistical tolerances.
struct ErgodicEstimate {
    double c1;
    double c2;
    double c_sum;
    double se1;
    double se2;
    double se_sum;
    long n_trials;
};

/// Rates of one trial: stream_index = trial index, so the value of trial i
/// never depends on how many trials surround it.
RatePair trial_rate(const SystemParams& params, const PowerBudget& budget,
                    std::uint64_t seed, std::uint64_t trial);

/// Averages instantaneous rates over n_trials independent channel draws.
/// Trials run on per-trial substreams and are reduced block-by-block in
/// trial order, so the result is bit-identical for any thread count.
/// threads <= 0 selects the hardware concurrency.
ErgodicEstimate estimate_ergodic(const SystemParams& params, long n_trials,
                                 std::uint64_t seed, int threads = 0);

}  // namespace wpcrs
