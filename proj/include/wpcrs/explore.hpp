#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wpcrs/analytic.hpp"
#include "wpcrs/montecarlo.hpp"

namespace wpcrs {

enum class Method { Analytic, Mc };

std::string method_name(Method m);

/// Parameters swept by the experiment commands.
enum class SweptParam { Snr, Rho, Xi, Alpha };

std::string swept_param_name(SweptParam p);

/// Run controls for the Monte Carlo columns of a sweep.
struct McControls {
    long n_trials = 100000;
    std::uint64_t seed = 1;
    int threads = 0;
};

/// One (protocol, method) column triple of a sweep.
struct SweepSeries {
    std::string protocol_label;  // "PS(rho=0.1)", or plain "PS" when swept
    Method method;
    std::vector<ErgodicRates> points;  // one per grid value, same order

    std::string label() const;  // e.g. "PS(rho=0.1)_analytic"
};

/// Grid of (swept value -> per-protocol rates) rows behind the sweep plots.
struct SweepTable {
    std::string swept_name;
    std::vector<double> grid;  // ascending
    std::vector<SweepSeries> series;
    SystemParams base;  // snapshot of the fixed parameters
};

/// Sum-rate sweep over total SNR. Grid values are in dB, as on the plot
/// axes; conversion to linear happens per point.
SweepTable sweep_snr(const SystemParams& base,
                     const std::vector<double>& snr_db_grid,
                     const std::vector<EhProtocol>& protocols,
                     const std::vector<Method>& methods,
                     const QuadratureSpec& quad, const McControls& mc);

/// Sweep over rho, xi or alpha. For rho/xi the swept protocol is the
/// owning one (PS/TS) and `protocols` supplies fixed reference lines; for
/// alpha every protocol in `protocols` is evaluated at each grid value.
SweepTable sweep_scalar(const SystemParams& base, SweptParam which,
                        const std::vector<double>& grid,
                        const std::vector<EhProtocol>& protocols,
                        const std::vector<Method>& methods,
                        const QuadratureSpec& quad, const McControls& mc);

struct OptimizeResult {
    double arg_opt;
    double value_opt;
    bool boundary_hit;  // no interior improvement over the bracket ends
    bool unimodal;      // coarse scan showed at most one rise/fall change
};

/// Maximizes a scalar objective: 41-point coarse scan guarding against
/// local traps, then golden-section refinement around the best point.
/// Falls back to a dense scan when the coarse scan is not unimodal.
OptimizeResult maximize_scalar(const std::function<double(double)>& objective,
                               double lo, double hi, double tol,
                               int coarse_points = 41);

/// Optimum of the analytic sum rate in rho, xi or alpha (never the MC
/// estimate: sampling noise would break the unimodal search).
OptimizeResult optimize_scalar(const SystemParams& base, SweptParam which,
                               double lo, double hi, double tol,
                               const QuadratureSpec& quad);

}  // namespace wpcrs
