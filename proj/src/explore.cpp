#include "wpcrs/explore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wpcrs {

namespace {

SystemParams with_protocol(const SystemParams& base, const EhProtocol& p) {
    SystemParams out = base;
    out.protocol = p;
    return out;
}

ErgodicRates evaluate(const SystemParams& params, Method method,
                      const QuadratureSpec& quad, const McControls& mc) {
    if (method == Method::Analytic) return ergodic_sum(params, quad);
    const ErgodicEstimate e =
        estimate_ergodic(params, mc.n_trials, mc.seed, mc.threads);
    return ErgodicRates{e.c1, e.c2, e.c_sum};
}

std::vector<double> sorted_copy(const std::vector<double>& grid) {
    if (grid.empty())
        throw std::invalid_argument("sweep: grid must not be empty");
    std::vector<double> g = grid;
    std::sort(g.begin(), g.end());
    return g;
}

SystemParams apply_swept(const SystemParams& base, SweptParam which, double x) {
    SystemParams p = base;
    switch (which) {
        case SweptParam::Snr:
            p.snr_total = db_to_linear(x);
            break;
        case SweptParam::Rho:
            p.protocol = EhProtocol::power_sharing(x);
            break;
        case SweptParam::Xi:
            p.protocol = EhProtocol::time_sharing(x);
            break;
        case SweptParam::Alpha:
            p.alpha = x;
            break;
    }
    return p;
}

}  // namespace

std::string method_name(Method m) {
    return m == Method::Analytic ? "analytic" : "mc";
}

std::string swept_param_name(SweptParam p) {
    switch (p) {
        case SweptParam::Snr: return "snr_db";
        case SweptParam::Rho: return "rho";
        case SweptParam::Xi: return "xi";
        case SweptParam::Alpha: return "alpha";
    }
    return "?";
}

std::string SweepSeries::label() const {
    return protocol_label + "_" + method_name(method);
}

SweepTable sweep_snr(const SystemParams& base,
                     const std::vector<double>& snr_db_grid,
                     const std::vector<EhProtocol>& protocols,
                     const std::vector<Method>& methods,
                     const QuadratureSpec& quad, const McControls& mc) {
    SweepTable table;
    table.swept_name = swept_param_name(SweptParam::Snr);
    table.grid = sorted_copy(snr_db_grid);
    table.base = base;
    for (const EhProtocol& proto : protocols) {
        for (Method method : methods) {
            SweepSeries series{proto.label(), method, {}};
            series.points.reserve(table.grid.size());
            for (double snr_db : table.grid) {
                SystemParams p = with_protocol(base, proto);
                p.snr_total = db_to_linear(snr_db);
                series.points.push_back(evaluate(p, method, quad, mc));
            }
            table.series.push_back(std::move(series));
        }
    }
    return table;
}

SweepTable sweep_scalar(const SystemParams& base, SweptParam which,
                        const std::vector<double>& grid,
                        const std::vector<EhProtocol>& protocols,
                        const std::vector<Method>& methods,
                        const QuadratureSpec& quad, const McControls& mc) {
    if (which == SweptParam::Snr)
        throw std::invalid_argument("sweep_scalar: use sweep_snr for SNR");

    SweepTable table;
    table.swept_name = swept_param_name(which);
    table.grid = sorted_copy(grid);
    table.base = base;

    if (which == SweptParam::Alpha) {
        for (const EhProtocol& proto : protocols) {
            for (Method method : methods) {
                SweepSeries series{proto.label(), method, {}};
                for (double x : table.grid) {
                    SystemParams p = with_protocol(base, proto);
                    p.alpha = x;
                    series.points.push_back(evaluate(p, method, quad, mc));
                }
                table.series.push_back(std::move(series));
            }
        }
        return table;
    }

    // rho/xi: the owning protocol is swept; everything else is a flat
    // reference line evaluated once per method.
    for (Method method : methods) {
        SweepSeries swept{which == SweptParam::Rho ? "PS" : "TS", method, {}};
        for (double x : table.grid)
            swept.points.push_back(
                evaluate(apply_swept(base, which, x), method, quad, mc));
        table.series.push_back(std::move(swept));
    }
    for (const EhProtocol& proto : protocols) {
        for (Method method : methods) {
            const ErgodicRates flat =
                evaluate(with_protocol(base, proto), method, quad, mc);
            SweepSeries series{proto.label(), method, {}};
            series.points.assign(table.grid.size(), flat);
            table.series.push_back(std::move(series));
        }
    }
    return table;
}

OptimizeResult maximize_scalar(const std::function<double(double)>& objective,
                               double lo, double hi, double tol,
                               int coarse_points) {
    if (!(hi > lo)) throw std::invalid_argument("maximize_scalar: empty bracket");
    if (!(tol > 0.0)) throw std::invalid_argument("maximize_scalar: tol must be positive");
    coarse_points = std::max(coarse_points, 3);

    std::vector<double> xs(coarse_points), fs(coarse_points);
    for (int i = 0; i < coarse_points; ++i) {
        xs[i] = lo + (hi - lo) * static_cast<double>(i) /
                         static_cast<double>(coarse_points - 1);
        fs[i] = objective(xs[i]);
    }

    // Unimodal means the discrete differences change direction at most
    // once (rise, then fall).
    int direction_changes = 0;
    int last_sign = 0;
    for (int i = 0; i + 1 < coarse_points; ++i) {
        const double d = fs[i + 1] - fs[i];
        const int sign = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
        if (sign == 0) continue;
        if (last_sign != 0 && sign != last_sign) ++direction_changes;
        last_sign = sign;
    }
    const bool unimodal = direction_changes <= 1;

    std::size_t best = 0;
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (fs[i] > fs[best]) best = i;

    if (!unimodal) {
        // Dense fallback: grid-scan at the requested resolution.
        const int n = std::max(coarse_points,
                               static_cast<int>(std::ceil((hi - lo) / tol)) + 1);
        double arg = xs[best], val = fs[best];
        for (int i = 0; i < n; ++i) {
            const double x = lo + (hi - lo) * static_cast<double>(i) /
                                      static_cast<double>(n - 1);
            const double f = objective(x);
            if (f > val) {
                val = f;
                arg = x;
            }
        }
        const bool edge = (arg == lo || arg == hi);
        return OptimizeResult{arg, val, edge, false};
    }

    if (best == 0 || best + 1 == xs.size())
        return OptimizeResult{xs[best], fs[best], true, true};

    // Golden-section refinement inside the bracketing coarse cells.
    double a = xs[best - 1], b = xs[best + 1];
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = objective(d);
        }
    }
    double arg = 0.5 * (a + b);
    double val = objective(arg);
    // Never report worse than the coarse scan.
    if (fs[best] > val) {
        arg = xs[best];
        val = fs[best];
    }
    return OptimizeResult{arg, val, false, true};
}

OptimizeResult optimize_scalar(const SystemParams& base, SweptParam which,
                               double lo, double hi, double tol,
                               const QuadratureSpec& quad) {
    if (which == SweptParam::Snr)
        throw std::invalid_argument("optimize_scalar: SNR is not a tunable parameter");
    auto objective = [&](double x) {
        return ergodic_sum(apply_swept(base, which, x), quad).c_sum;
    };
    return maximize_scalar(objective, lo, hi, tol);
}

}  // namespace wpcrs
