#pragma once

#include "wpcrs/channel.hpp"
#include "wpcrs/model.hpp"
#include "wpcrs/quadrature.hpp"

namespace wpcrs {

/// Ergodic rates from the analytical route.
struct ErgodicRates {
    double c1;
    double c2;
    double c_sum;
};

/// Ergodic rate of the x2 symbols: the difference of two log integrals
/// against the density of Y = min{gamma_sr, gamma_sd}. Works for every
/// protocol, the benchmark included (p = 1, Ps = Pt there).
double ergodic_c2(const SystemParams& params, const PowerBudget& budget,
                  const QuadratureSpec& quad);

/// Ergodic rate of the x1 symbols for the EH protocols, integrating
/// zeta*log2(1 + (Ps/N0) z) against the density of Z = gamma_sr * W.
double ergodic_c1(const SystemParams& params, const PowerBudget& budget,
                  const QuadratureSpec& quad);

/// Ergodic rate of the x1 symbols for the no-EH benchmark, where
/// V = min{alpha*gamma_sr, gamma_rd} is itself exponential.
double ergodic_c1_benchmark(const SystemParams& params, const QuadratureSpec& quad);

/// Debug route for C1: the raw double integral over (gamma_sr, gamma_rd)
/// with the per-draw relay power, kept as an independent cross-check of
/// the Z-density route. EH protocols only.
double ergodic_c1_double_quadrature(const SystemParams& params,
                                    const PowerBudget& budget,
                                    const QuadratureSpec& quad);

/// Dispatches per protocol and sums: c_sum = c1 + c2 exactly.
ErgodicRates ergodic_sum(const SystemParams& params, const QuadratureSpec& quad);

}  // namespace wpcrs
