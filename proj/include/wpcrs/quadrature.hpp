#pragma once

#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace wpcrs {

/// Settings for the numerical evaluation of the improper rate integrals.
/// The default truncation point of 1e3 keeps the exponentially decaying
/// integrands from feeding garbage into the tail.
struct QuadratureSpec {
    double upper_bound = 1e3;  // truncation of the infinite upper limits
    double rel_tol = 1e-7;     // target relative tolerance
    int max_panels = 4000;     // subdivision cap per integral

    void validate() const {
        if (!(upper_bound > 0.0))
            throw std::domain_error("QuadratureSpec: upper_bound must be positive");
        if (!(rel_tol > 0.0 && rel_tol < 1e-2))
            throw std::domain_error("QuadratureSpec: rel_tol must lie in (0, 1e-2)");
        if (max_panels < 1)
            throw std::domain_error("QuadratureSpec: max_panels must be at least 1");
    }
};

/// Raised when an adaptive integral fails to reach its tolerance within
/// the panel budget; carries the remaining error indicator.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double residual)
        : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
          residual_(residual) {}

    double residual() const { return residual_; }

private:
    double residual_;
};

namespace detail {

// 15-point Gauss-Legendre abscissae (positive half) and weights on [-1,1].
inline constexpr double kGlNode[8] = {
    0.0,
    0.2011940939974345,
    0.3941513470775634,
    0.5709721726085388,
    0.7244177313601701,
    0.8482065834104272,
    0.9372733924007060,
    0.9879925180204854,
};
inline constexpr double kGlWeight[8] = {
    0.2025782419255613,
    0.1984314853271116,
    0.1861610000155622,
    0.1662692058169939,
    0.1395706779261543,
    0.1071592204671719,
    0.0703660474881081,
    0.0307532419961173,
};

template <class F>
double gl15(F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = kGlWeight[0] * f(mid);
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGlNode[i];
        sum += kGlWeight[i] * (f(mid - dx) + f(mid + dx));
    }
    return sum * half;
}

}  // namespace detail

/// Globally adaptive 15-point Gauss-Legendre integration of f over [a, b].
/// Each panel's error indicator is the difference between its one-panel
/// estimate and the sum of its two half-panel estimates; the worst panel
/// is bisected until the summed indicator drops below rel_tol * |integral|
/// or the panel budget runs out (which throws QuadratureError).
template <class F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol,
                          int max_panels) {
    struct Panel {
        double a, b;
        double left, right;  // half-panel estimates, reused on split
        double value;        // left + right
        double err;
    };
    struct WorseErr {
        bool operator()(const Panel& x, const Panel& y) const {
            return x.err < y.err;
        }
    };

    auto make_panel = [&](double lo, double hi, double whole) {
        const double mid = 0.5 * (lo + hi);
        Panel p;
        p.a = lo;
        p.b = hi;
        p.left = detail::gl15(f, lo, mid);
        p.right = detail::gl15(f, mid, hi);
        p.value = p.left + p.right;
        p.err = std::abs(whole - p.value);
        if (!std::isfinite(p.value))
            throw QuadratureError("integrate_adaptive: non-finite integrand", p.err);
        return p;
    };

    if (a == b) return 0.0;

    const double min_width = 1e-14 * std::abs(b - a);

    std::priority_queue<Panel, std::vector<Panel>, WorseErr> queue;
    queue.push(make_panel(a, b, detail::gl15(f, a, b)));

    double total = queue.top().value;
    double err_active = queue.top().err;
    double err_frozen = 0.0;  // panels too narrow to split further
    int panels = 1;

    while (err_active + err_frozen >
           rel_tol * std::max(std::abs(total), 1e-300)) {
        if (err_frozen > rel_tol * std::max(std::abs(total), 1e-300) &&
            queue.empty())
            throw QuadratureError("integrate_adaptive: roundoff-limited panels",
                                  err_active + err_frozen);
        if (panels >= max_panels)
            throw QuadratureError("integrate_adaptive: panel budget exhausted",
                                  err_active + err_frozen);

        Panel worst = queue.top();
        queue.pop();
        err_active -= worst.err;

        if (worst.b - worst.a < min_width) {
            err_frozen += worst.err;
            if (queue.empty())
                throw QuadratureError(
                    "integrate_adaptive: roundoff-limited panels",
                    err_active + err_frozen);
            continue;
        }

        total -= worst.value;
        const double mid = 0.5 * (worst.a + worst.b);
        Panel lo = make_panel(worst.a, mid, worst.left);
        Panel hi = make_panel(mid, worst.b, worst.right);
        total += lo.value + hi.value;
        err_active += lo.err + hi.err;
        queue.push(lo);
        queue.push(hi);
        ++panels;
    }
    return total;
}

/// Convenience overload driven by a QuadratureSpec over [0, upper_bound].
template <class F>
double integrate_adaptive(F&& f, const QuadratureSpec& quad) {
    quad.validate();
    return integrate_adaptive(std::forward<F>(f), 0.0, quad.upper_bound,
                              quad.rel_tol, quad.max_panels);
}

}  // namespace wpcrs
