#include "roots.hpp"

#include "ho/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ho::detail {

namespace {

constexpr double kEndSlack = 1e-12;

// log f(x) - log target, mapped to +-inf when f is 0 or infinite.
double log_residual(const std::function<double(double)>& f, double x, double log_target)
{
    const double v = f(x);
    if (std::isnan(v)) {
        throw NumericalError("root solver: function returned NaN at x=" + std::to_string(x));
    }
    if (v <= 0.0) return -std::numeric_limits<double>::infinity();
    if (std::isinf(v)) return std::numeric_limits<double>::infinity();
    return std::log(v) - log_target;
}

}  // namespace

RootResult solve_increasing(const std::function<double(double)>& f, double target,
                            const RootOptions& options)
{
    if (!(target > 0.0) || !std::isfinite(target)) {
        throw NumericalError("root solver: target must be positive and finite");
    }
    const double log_target = std::log(target);
    const double dlo = std::max(options.domain_lo, std::numeric_limits<double>::min());
    const double dhi = options.domain_hi;

    double lo = std::clamp(options.start_lo, dlo, dhi);
    double hi = std::clamp(options.start_hi, dlo, dhi);
    if (hi <= lo) hi = std::min(dhi, lo * options.expansion);

    double g_hi = log_residual(f, hi, log_target);
    int expansions = 0;
    while (g_hi < 0.0) {
        // Values equal to f(domain end) up to rounding are attained at the end.
        if (hi >= dhi && g_hi > -kEndSlack) return {hi, hi, hi, 0};
        if (hi >= dhi || ++expansions > options.max_iter) {
            throw NumericalError("root solver: value " + std::to_string(target) +
                                 " not reached before the upper end of the domain (unbounded bracket)");
        }
        lo = hi;
        hi = std::min(dhi, hi * options.expansion);
        g_hi = log_residual(f, hi, log_target);
    }
    double g_lo = log_residual(f, lo, log_target);
    expansions = 0;
    while (g_lo > 0.0) {
        if (lo <= dlo && g_lo < kEndSlack) return {lo, lo, lo, 0};
        if (lo <= dlo || ++expansions > options.max_iter) {
            throw NumericalError("root solver: value " + std::to_string(target) +
                                 " lies below the range attained on the domain");
        }
        hi = lo;
        g_hi = g_lo;
        lo = std::max(dlo, lo / options.expansion);
        g_lo = log_residual(f, lo, log_target);
    }
    if (g_lo == 0.0) return {lo, lo, lo, 0};
    if (g_hi == 0.0) return {hi, hi, hi, 0};

    double u_lo = std::log(lo);
    double u_hi = std::log(hi);
    double best_u = u_lo;
    double best_g = std::abs(g_lo) < std::abs(g_hi) ? g_lo : g_hi;
    if (std::abs(g_hi) < std::abs(g_lo)) best_u = u_hi;

    int side = 0;
    int it = 0;
    double last_width = u_hi - u_lo;
    int slow_steps = 0;
    for (; it < options.max_iter; ++it) {
        const double width = u_hi - u_lo;
        if (width <= options.rel_tol) break;

        double u = 0.5 * (u_lo + u_hi);
        const bool finite_ends = std::isfinite(g_lo) && std::isfinite(g_hi);
        if (finite_ends && slow_steps < 2) {
            const double secant = (u_lo * g_hi - u_hi * g_lo) / (g_hi - g_lo);
            if (secant > u_lo && secant < u_hi) u = secant;
        }
        const double g = log_residual(f, std::exp(u), log_target);
        if (std::abs(g) < std::abs(best_g)) {
            best_g = g;
            best_u = u;
        }
        if (g == 0.0 || std::abs(g) <= 1e-15) {
            best_u = u;
            u_lo = u_hi = u;
            break;
        }
        if (g < 0.0) {
            u_lo = u;
            g_lo = g;
            if (side == -1) g_hi *= 0.5;
            side = -1;
        } else {
            u_hi = u;
            g_hi = g;
            if (side == +1) g_lo *= 0.5;
            side = +1;
        }
        const double new_width = u_hi - u_lo;
        slow_steps = (new_width > 0.5 * last_width) ? slow_steps + 1 : 0;
        if (slow_steps >= 3) slow_steps = 0;
        last_width = new_width;
    }

    RootResult result;
    result.lo = std::exp(u_lo);
    result.hi = std::exp(u_hi);
    result.iterations = it;
    // Prefer the best evaluated point unless the bracket collapsed further.
    if (u_hi - u_lo <= options.rel_tol && std::abs(best_g) > 1e-13) {
        result.x = std::exp(0.5 * (u_lo + u_hi));
    } else {
        result.x = std::exp(best_u);
    }
    return result;
}

}  // namespace ho::detail
