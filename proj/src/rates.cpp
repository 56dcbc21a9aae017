#include "wpcrs/rates.hpp"

#include <algorithm>
#include <cmath>

namespace wpcrs {

SinrSet instantaneous_sinrs(const SystemParams& params, const PowerBudget& budget,
                            const ChannelDraw& draw) {
    // N0 = 1 throughout; p_source is already in units of the noise power.
    const double ps_eff = budget.p_factor * budget.p_source;  // p*Ps
    const double a = params.alpha;
    const double p_r =
        relay_power(params.protocol, budget.p_source, draw.gamma_sr, params.eta);

    SinrSet s;
    s.x2_sr = (1.0 - a) * ps_eff * draw.gamma_sr /
              (a * ps_eff * draw.gamma_sr + 1.0);
    s.x2_sd = (1.0 - a) * ps_eff * draw.gamma_sd /
              (a * ps_eff * draw.gamma_sd + 1.0);
    s.x1_sr = a * ps_eff * draw.gamma_sr;
    s.x1_rd = p_r * draw.gamma_rd;
    return s;
}

RatePair instantaneous_rates(const SinrSet& sinrs, double zeta) {
    RatePair r;
    r.r1 = zeta * std::log2(1.0 + std::min(sinrs.x1_sr, sinrs.x1_rd));
    r.r2 = zeta * std::log2(1.0 + std::min(sinrs.x2_sr, sinrs.x2_sd));
    r.sum = r.r1 + r.r2;
    return r;
}

}  // namespace wpcrs
