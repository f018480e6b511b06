#include "ho/growth.hpp"

#include "growth_node.hpp"
#include "ho/errors.hpp"
#include "ho/grid.hpp"
#include "roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ho {

namespace {

constexpr int kKnots = 4096;
constexpr int kSearchPoints = 4096;
constexpr double kSearchLo = 1e-8;
constexpr double kSearchHi = 1e8;
constexpr double kGolden = 0.6180339887498949;

// Maximizes s t - f(t) over t in [a, b] by golden-section search on log t.
double golden_max(const GrowthFunction& f, double s, double a, double b, int iterations = 48)
{
    auto value = [&](double u) {
        const double t = std::exp(u);
        return s * t - f.eval(t);
    };
    double lo = std::log(a);
    double hi = std::log(b);
    if (!(hi > lo)) return value(lo);
    double x1 = hi - kGolden * (hi - lo);
    double x2 = lo + kGolden * (hi - lo);
    double v1 = value(x1);
    double v2 = value(x2);
    for (int i = 0; i < iterations && hi - lo > 1e-14; ++i) {
        if (v1 < v2) {
            lo = x1;
            x1 = x2;
            v1 = v2;
            x2 = lo + kGolden * (hi - lo);
            v2 = value(x2);
        } else {
            hi = x2;
            x2 = x1;
            v2 = v1;
            x1 = hi - kGolden * (hi - lo);
            v1 = value(x1);
        }
    }
    return std::max({v1, v2, value(std::log(a)), value(std::log(b))});
}

// Discrete argmax_j {s_i t_j - f_j}; the argmax is nondecreasing in s, so a
// divide-and-conquer sweep visits O((n + m) log n) pairs.
void monotone_argmax(const std::vector<double>& s, const std::vector<double>& t,
                     const std::vector<double>& ft, size_t s_lo, size_t s_hi, size_t j_lo, size_t j_hi,
                     std::vector<size_t>& out)
{
    if (s_lo > s_hi) return;
    const size_t mid = s_lo + (s_hi - s_lo) / 2;
    size_t best = j_lo;
    double best_value = -std::numeric_limits<double>::infinity();
    for (size_t j = j_lo; j <= j_hi; ++j) {
        const double v = s[mid] * t[j] - ft[j];
        if (v >= best_value) {
            best_value = v;
            best = j;
        }
    }
    out[mid] = best;
    if (mid > s_lo) monotone_argmax(s, t, ft, s_lo, mid - 1, j_lo, best, out);
    if (mid < s_hi) monotone_argmax(s, t, ft, mid + 1, s_hi, best, j_hi, out);
}

}  // namespace

namespace detail {

double complementary_eval(const GrowthFunction::Node& node, double s)
{
    const auto& k = node.knots;
    if (s < k.front().t || s > k.back().t) return table_eval(node, s);
    const GrowthFunction& f = node.operands[0];
    const auto it = std::upper_bound(k.begin(), k.end(), s,
                                     [](double v, const GrowthFunction::Knot& kn) { return v < kn.t; });
    size_t i = static_cast<size_t>(std::distance(k.begin(), it));
    i = std::clamp<size_t>(i == 0 ? 0 : i - 1, 0, k.size() - 2);
    const double ta = node.argmax[i];
    const double tb = node.argmax[i + 1];
    const double v = golden_max(f, s, std::min(ta, tb), std::max(ta, tb));
    return std::max(v, 0.0);
}

double complementary_inverse(const GrowthFunction::Node& node, double y)
{
    const double guess = table_inverse(node, y);
    RootOptions opt;
    opt.start_lo = guess / 1.01;
    opt.start_hi = guess * 1.01;
    opt.domain_hi = 1e300;
    auto fn = [&node](double s) { return complementary_eval(node, s); };
    return solve_increasing(fn, y, opt).x;
}

}  // namespace detail

GrowthFunction complementary(const GrowthFunction& f)
{
    const IndexEstimate idx = boyd_indices(f);
    if (!(idx.a_lower > 1.0)) {
        throw PreconditionError("complementary: lower index of " + f.describe() +
                                " is " + std::to_string(idx.a_lower) +
                                " <= 1 (degenerate conjugate)");
    }

    Interval search{kSearchLo, kSearchHi};
    const Interval sup = f.support();
    if (!(f.kind() == GrowthFunction::Kind::table && f.extrapolates())) {
        search.lo = std::max(search.lo, sup.lo);
        search.hi = std::min(search.hi, sup.hi);
    }
    if (!(search.hi > search.lo * 10.0)) {
        throw PreconditionError("complementary: support of " + f.describe() + " too narrow");
    }

    const std::vector<double> t = log_grid(search.lo, search.hi, kSearchPoints);
    std::vector<double> ft(t.size());
    for (size_t j = 0; j < t.size(); ++j) ft[j] = f.eval(t[j]);

    // Slopes at interior grid points bound the s-range whose maximizer is interior.
    auto slope = [&](size_t j) { return (ft[j + 1] - ft[j - 1]) / (t[j + 1] - t[j - 1]); };
    const double s_lo = slope(2);
    const double s_hi = slope(t.size() - 3);
    if (!(s_lo > 0.0) || !(s_hi > s_lo) || !std::isfinite(s_hi)) {
        throw PreconditionError("complementary: slopes of " + f.describe() +
                                " do not span a positive increasing range (degenerate conjugate)");
    }

    const std::vector<double> s = log_grid(s_lo, s_hi, kKnots);
    std::vector<size_t> arg(s.size());
    monotone_argmax(s, t, ft, 0, s.size() - 1, 0, t.size() - 1, arg);

    auto node = std::make_shared<GrowthFunction::Node>();
    node->kind = GrowthFunction::Kind::complementary;
    node->operands = {f};
    node->extrapolate = true;
    node->knots.reserve(s.size());
    node->argmax.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        const size_t j = arg[i];
        const double a = t[j == 0 ? 0 : j - 1];
        const double b = t[std::min(j + 1, t.size() - 1)];
        // Locate the continuous maximizer in the bracketing cells.
        double best_t = t[j];
        double best_v = s[i] * t[j] - ft[j];
        {
            double lo = std::log(a), hi = std::log(b);
            for (int it = 0; it < 60 && hi - lo > 1e-13; ++it) {
                const double x1 = hi - kGolden * (hi - lo);
                const double x2 = lo + kGolden * (hi - lo);
                const double v1 = s[i] * std::exp(x1) - f.eval(std::exp(x1));
                const double v2 = s[i] * std::exp(x2) - f.eval(std::exp(x2));
                if (v1 < v2) lo = x1; else hi = x2;
            }
            const double tc = std::exp(0.5 * (lo + hi));
            const double vc = s[i] * tc - f.eval(tc);
            if (vc > best_v) {
                best_v = vc;
                best_t = tc;
            }
        }
        if (!(best_v > 0.0) || !std::isfinite(best_v) ||
            (!node->knots.empty() && !(best_v > node->knots.back().y))) {
            throw PreconditionError("complementary: conjugate of " + f.describe() +
                                    " is not positive and strictly increasing at s=" +
                                    std::to_string(s[i]) + " (degenerate conjugate)");
        }
        node->knots.push_back({s[i], best_v});
        node->argmax.push_back(best_t);
    }
    detail::prepare_table(*node);

    const auto lo_t = f.declared_lower_type();
    const auto hi_t = f.declared_upper_type();
    if (lo_t && hi_t && *lo_t == *hi_t && *lo_t > 1.0) {
        node->lower_type = *lo_t / (*lo_t - 1.0);
        node->upper_type = node->lower_type;
    }
    return GrowthFunction(std::move(node));
}

}  // namespace ho
