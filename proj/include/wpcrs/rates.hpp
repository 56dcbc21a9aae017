#pragma once

#include "wpcrs/channel.hpp"
#include "wpcrs/model.hpp"

namespace wpcrs {

/// Received SINRs for one channel draw. x2 is decoded first (treating x1
/// as noise) at both the relay and the destination; x1 is decoded after
/// SIC at the relay and over the R-D hop.
struct SinrSet {
    double x2_sr;
    double x2_sd;
    double x1_sr;
    double x1_rd;
};

/// Achievable rates in bits/s/Hz for one draw or one ergodic evaluation.
struct RatePair {
    double r1;
    double r2;
    double sum;
};

SinrSet instantaneous_sinrs(const SystemParams& params, const PowerBudget& budget,
                            const ChannelDraw& draw);

/// Weakest-link rates: r_i = zeta * log2(1 + min of the link SINRs).
RatePair instantaneous_rates(const SinrSet& sinrs, double zeta);

}  // namespace wpcrs
