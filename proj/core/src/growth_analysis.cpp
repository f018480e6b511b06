#include "ho/errors.hpp"
#include "ho/grid.hpp"
#include "ho/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ho {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// True when f can be evaluated exactly at t (inside the support, or anywhere
// positive for extrapolating tables).
bool defined_at(const GrowthFunction& f, double t)
{
    if (f.extrapolates()) return t > 0.0;
    const Interval s = f.support();
    return t >= s.lo && t <= s.hi;
}

}  // namespace

TypeEstimate estimate_types(const GrowthFunction& f, const TypeGrid& grid)
{
    TypeEstimate out;
    const std::vector<double> s = log_grid(grid.s_lo, grid.s_hi, grid.s_points);
    std::vector<double> lower_t = log_grid(1.0 / grid.t_span, 1.0, grid.t_points);
    std::vector<double> upper_t = log_grid(1.0, grid.t_span, grid.t_points);
    lower_t.pop_back();
    upper_t.erase(upper_t.begin());

    struct Side {
        double sxx = 0.0, sxy = 0.0;
        double envelope_min = kInf, envelope_max = -kInf;
        std::vector<std::pair<double, double>> xy;
    };
    Side lower, upper;
    int skipped = 0;

    auto collect = [&](const std::vector<double>& factors, Side& side) {
        for (double sv : s) {
            if (!defined_at(f, sv)) {
                skipped += static_cast<int>(factors.size());
                continue;
            }
            const double fs = f.eval(sv);
            for (double tv : factors) {
                const double st = sv * tv;
                if (!defined_at(f, st)) {
                    ++skipped;
                    continue;
                }
                const double fst = f.eval(st);
                if (!(fs > 0.0) || !(fst > 0.0) || !std::isfinite(fs) || !std::isfinite(fst)) {
                    ++skipped;
                    continue;
                }
                const double x = std::log(tv);
                const double y = std::log(fst) - std::log(fs);
                side.xy.emplace_back(x, y);
                side.sxx += x * x;
                side.sxy += x * y;
                side.envelope_min = std::min(side.envelope_min, y / x);
                side.envelope_max = std::max(side.envelope_max, y / x);
            }
        }
    };
    collect(lower_t, lower);
    collect(upper_t, upper);
    if (skipped > 0) {
        out.warnings.push_back("estimate_types: grid reduced, " + std::to_string(skipped) +
                               " pairs outside the evaluation domain or overflowing");
    }
    out.pairs_used = static_cast<int>(lower.xy.size() + upper.xy.size());

    double ss_res = 0.0;
    auto fit = [&](const Side& side, double& slope) {
        slope = side.sxx > 0.0 ? side.sxy / side.sxx : 0.0;
        double c = 0.0;
        for (auto [x, y] : side.xy) {
            const double r = y - slope * x;
            ss_res += r * r;
            c = std::max(c, r);
        }
        return std::exp(c);
    };
    const double c_lower = lower.xy.empty() ? 1.0 : fit(lower, out.fitted_lower);
    const double c_upper = upper.xy.empty() ? kInf : fit(upper, out.fitted_upper);
    if (out.pairs_used > 0) out.residual = std::sqrt(ss_res / out.pairs_used);

    if (!lower.xy.empty() && lower.envelope_min > 0.0) out.lower_exponent = lower.envelope_min;
    if (!upper.xy.empty() && c_upper <= grid.constant_cap && std::isfinite(upper.envelope_max)) {
        out.upper_exponent = upper.envelope_max;
    }
    out.constant_C = std::max(1.0, out.upper_exponent ? std::max(c_lower, c_upper) : c_lower);
    return out;
}

std::vector<double> tail_grid(const GrowthFunction& f)
{
    const Interval s = f.support();
    double lo = 0.0;
    double hi = 0.0;
    if (s.hi >= 1e20) {
        lo = 1e10;
        hi = 1e20;
    } else {
        hi = 0.1 * s.hi;
        lo = std::max(1e-4 * s.hi, 10.0 * s.lo);
        if (!(hi > lo)) {
            lo = s.lo * 1.01;
            hi = s.hi / 1.01;
        }
    }
    if (lo <= 0.0) lo = 1e-4 * hi;
    return log_grid(lo, hi, 33);
}

IndexEstimate boyd_indices(const GrowthFunction& f)
{
    IndexEstimate out;
    out.grid_used = tail_grid(f);
    const double h = 1e-3;
    out.a_lower = kInf;
    out.b_upper = -kInf;
    for (double t : out.grid_used) {
        const double up = f.eval(t * std::exp(h));
        const double dn = f.eval(t * std::exp(-h));
        const double slope = (std::log(up) - std::log(dn)) / (2.0 * h);
        if (!std::isfinite(slope)) {
            throw NumericalError("boyd_indices: non-finite log-slope of " + f.describe() +
                                 " at t=" + std::to_string(t));
        }
        out.a_lower = std::min(out.a_lower, slope);
        out.b_upper = std::max(out.b_upper, slope);
    }
    return out;
}

std::vector<double> equivalence_grid(Interval limit, int points)
{
    return log_grid(limit.lo, limit.hi, points);
}

EquivalenceResult check_equivalent(const PositiveFunction& f1, const PositiveFunction& f2,
                                   double c_max, std::span<const double> grid)
{
    if (!(c_max > 1.0)) throw PreconditionError("check_equivalent: c_max must exceed 1");
    constexpr double slack = 1e-9;
    auto safe = [](const PositiveFunction& f, double t, double& out) {
        try {
            out = f(t);
            return std::isfinite(out);
        } catch (const DomainError&) {
            return false;
        } catch (const NumericalError&) {
            return false;
        }
    };
    std::vector<double> f2_values(grid.size());
    std::vector<bool> f2_ok(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) f2_ok[i] = safe(f2, grid[i], f2_values[i]);

    for (int k = 0; k <= 300; ++k) {
        const double c = std::pow(1.05, k);
        if (c > c_max * (1.0 + 1e-12)) break;
        bool passes = true;
        for (size_t i = 0; i < grid.size() && passes; ++i) {
            if (!f2_ok[i]) continue;
            const double t = grid[i];
            double lower = 0.0, upper = 0.0;
            if (safe(f1, t / c, lower) && !(lower / c <= f2_values[i] * (1.0 + slack))) passes = false;
            if (passes && safe(f1, c * t, upper) && !(f2_values[i] <= c * upper * (1.0 + slack))) passes = false;
        }
        if (passes) return {true, c};
    }
    return {false, 0.0};
}

EquivalenceResult check_equivalent(const GrowthFunction& f1, const GrowthFunction& f2, double c_max)
{
    Interval limit{1e-20, 1e20};
    for (const auto* f : {&f1, &f2}) {
        if (f->extrapolates()) continue;
        limit.lo = std::max(limit.lo, f->support().lo);
        limit.hi = std::min(limit.hi, f->support().hi);
    }
    const std::vector<double> grid = equivalence_grid(limit);
    auto wrap = [](const GrowthFunction& f) {
        return PositiveFunction([f](double t) {
            if (!defined_at(f, t)) throw DomainError("outside support");
            return f.eval(t);
        });
    };
    return check_equivalent(wrap(f1), wrap(f2), c_max, grid);
}

DoublingResult check_doubling(const GrowthFunction& f, double k_cap)
{
    DoublingResult out;
    const std::vector<double> grid = log_grid(1e-3, 1e3, 33);
    double k = 0.0;
    for (double t : grid) {
        if (!defined_at(f, t) || !defined_at(f, 2.0 * t)) continue;
        const double ratio = f.eval(2.0 * t) / f.eval(t);
        k = std::max(k, std::isfinite(ratio) ? ratio : kInf);
    }
    out.K = k;
    out.delta2 = std::isfinite(k) && k <= k_cap;

    for (int j = 1; j <= 100; ++j) {
        const double c = std::pow(1.1, j);
        int checked = 0;
        bool passes = true;
        for (double t : grid) {
            if (!defined_at(f, t) || !defined_at(f, c * t)) continue;
            ++checked;
            if (!(f.eval(t) <= f.eval(c * t) / (2.0 * c) * (1.0 + 1e-12))) {
                passes = false;
                break;
            }
        }
        if (passes && 2 * checked >= static_cast<int>(grid.size())) {
            out.nabla2 = true;
            out.C = c;
            break;
        }
    }
    return out;
}

ChordTest convexity_chord_test(const GrowthFunction& f)
{
    std::vector<double> grid;
    for (double t : log_grid(1e-3, 1e3, 33)) {
        if (defined_at(f, t)) grid.push_back(t);
    }
    std::vector<double> ratio(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) ratio[i] = f.eval(grid[i]) / grid[i];

    for (int k = 1; k <= 300; ++k) {
        const double c = std::pow(1.05, k);
        double running_max = -kInf;
        bool passes = true;
        for (size_t j = 0; j < grid.size() && passes; ++j) {
            if (j > 0 && defined_at(f, c * grid[j])) {
                const double rhs = c * f.eval(c * grid[j]) / grid[j];
                if (!(running_max <= rhs * (1.0 + 1e-12))) passes = false;
            }
            running_max = std::max(running_max, ratio[j]);
        }
        if (passes) return {true, c};
    }
    return {false, 0.0};
}

}  // namespace ho
