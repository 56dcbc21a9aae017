#include "wpcrs/analytic.hpp"

#include <algorithm>
#include <cmath>

namespace wpcrs {

namespace {

double exp_pdf(double x, double mean) {
    return std::exp(-x / mean) / mean;
}

}  // namespace

double ergodic_c2(const SystemParams& params, const PowerBudget& budget,
                  const QuadratureSpec& quad) {
    params.validate();
    quad.validate();
    const double c_full = budget.p_factor * budget.p_source;   // p*Ps/N0
    const double c_weak = params.alpha * c_full;               // alpha*p*Ps/N0
    auto log_moment = [&](double coeff) {
        return integrate_adaptive(
            [&](double y) { return std::log2(1.0 + coeff * y) * pdf_y(y, params); },
            quad);
    };
    return budget.zeta * (log_moment(c_full) - log_moment(c_weak));
}

double ergodic_c1(const SystemParams& params, const PowerBudget& budget,
                  const QuadratureSpec& quad) {
    params.validate();
    quad.validate();
    if (!budget.upsilon)
        throw UnsupportedProtocol(
            "ergodic_c1: use ergodic_c1_benchmark for the no-EH benchmark");
    const double c = budget.p_source;  // Ps/N0
    return integrate_adaptive(
        [&](double z) {
            return budget.zeta * std::log2(1.0 + c * z) *
                   pdf_z(z, params, budget, quad);
        },
        quad);
}

double ergodic_c1_benchmark(const SystemParams& params, const QuadratureSpec& quad) {
    params.validate();
    quad.validate();
    if (!params.protocol.is_benchmark())
        throw UnsupportedProtocol("ergodic_c1_benchmark: benchmark protocol only");
    // V = min{alpha*gamma_sr, gamma_rd} is exponential: the min of two
    // independent exponentials adds their rates.
    const double rate =
        1.0 / (params.alpha * params.sigma2_sr) + 1.0 / params.sigma2_rd;
    const double c = params.snr_total;  // Pt/N0
    const double zeta = 0.5;
    return integrate_adaptive(
        [&](double v) {
            return zeta * std::log2(1.0 + c * v) * rate * std::exp(-rate * v);
        },
        quad);
}

double ergodic_c1_double_quadrature(const SystemParams& params,
                                    const PowerBudget& budget,
                                    const QuadratureSpec& quad) {
    params.validate();
    quad.validate();
    if (!budget.upsilon)
        throw UnsupportedProtocol(
            "ergodic_c1_double_quadrature: EH protocols only");

    const double a_coef = params.alpha * budget.p_factor * budget.p_source;
    auto conditional_rate = [&](double g_rd) {
        return integrate_adaptive(
            [&](double g_sr) {
                const double p_r = relay_power(params.protocol, budget.p_source,
                                               g_sr, params.eta);
                const double m = std::min(a_coef * g_sr, p_r * g_rd);
                return budget.zeta * std::log2(1.0 + m) *
                       exp_pdf(g_sr, params.sigma2_sr);
            },
            quad);
    };
    auto outer = [&](double lo, double hi) {
        return integrate_adaptive(
            [&](double g_rd) {
                return conditional_rate(g_rd) * exp_pdf(g_rd, params.sigma2_rd);
            },
            lo, hi, quad.rel_tol, quad.max_panels);
    };

    // The min switches branch at gamma_rd = alpha*p/upsilon regardless of
    // gamma_sr; splitting there keeps both outer pieces smooth.
    const double knee = params.alpha * budget.p_factor / *budget.upsilon;
    if (knee > 0.0 && knee < quad.upper_bound)
        return outer(0.0, knee) + outer(knee, quad.upper_bound);
    return outer(0.0, quad.upper_bound);
}

ErgodicRates ergodic_sum(const SystemParams& params, const QuadratureSpec& quad) {
    const PowerBudget budget = power_budget(params);
    ErgodicRates r;
    r.c2 = ergodic_c2(params, budget, quad);
    r.c1 = params.protocol.is_benchmark() ? ergodic_c1_benchmark(params, quad)
                                          : ergodic_c1(params, budget, quad);
    r.c_sum = r.c1 + r.c2;
    return r;
}

}  // namespace wpcrs
