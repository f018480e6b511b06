#include "ho/growth.hpp"

#include "growth_node.hpp"
#include "ho/errors.hpp"
#include "roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace ho {

namespace detail {
double complementary_eval(const GrowthFunction::Node& node, double s);
double complementary_inverse(const GrowthFunction::Node& node, double y);
}  // namespace detail

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Largest argument of e^t - 1 evaluated without clamping.
constexpr double kExpArgumentLimit = 700.0;

std::string fmt_double(double v)
{
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

void require_exponent(double p, const char* what)
{
    if (!std::isfinite(p) || p <= 0.0) {
        throw DomainError(std::string(what) + ": exponent must be positive and finite, got " +
                          fmt_double(p));
    }
}

// Argument range on which eval is injective and error free.
Interval argument_limits(const GrowthFunction& f)
{
    const auto& n = f.node();
    if ((n.kind == GrowthFunction::Kind::table || n.kind == GrowthFunction::Kind::complementary) &&
        n.extrapolate) {
        return {0.0, kInf};
    }
    return n.support;
}

// [f(lo), f(hi)] over argument_limits, with +inf for unbounded arguments.
Interval value_range(const GrowthFunction& f)
{
    const Interval arg = argument_limits(f);
    const double lo = arg.lo > 0.0 ? f.eval(arg.lo) : 0.0;
    const double hi = std::isinf(arg.hi) ? kInf : f.eval(arg.hi);
    return {lo, hi};
}

double product_of_inverses(const GrowthFunction::Node& n, double y)
{
    return n.operands[0].inverse(y) * n.operands[1].inverse(y);
}

double ratio_of_inverses(const GrowthFunction::Node& n, double y)
{
    return n.operands[1].inverse(y) / n.operands[0].inverse(y);
}

// Solves inverse-side function h(y) = t for y, where h is the composite inverse.
double solve_composite(const GrowthFunction::Node& n, double t)
{
    const Interval r0 = value_range(n.operands[0]);
    const Interval r1 = value_range(n.operands[1]);
    detail::RootOptions opt;
    opt.domain_lo = std::max({r0.lo, r1.lo, 1e-300});
    opt.domain_hi = std::min({r0.hi, r1.hi, 1e300});
    opt.start_lo = opt.domain_lo;
    opt.start_hi = opt.domain_hi;
    opt.rel_tol = 1e-13;
    auto h = [&n](double y) {
        return n.kind == GrowthFunction::Kind::product_inverse ? product_of_inverses(n, y)
                                                               : ratio_of_inverses(n, y);
    };
    return detail::solve_increasing(h, t, opt).x;
}

Interval composite_support(const GrowthFunction::Node& n)
{
    const Interval r0 = value_range(n.operands[0]);
    const Interval r1 = value_range(n.operands[1]);
    const double ylo = std::max({r0.lo, r1.lo, 1e-300});
    const double yhi = std::min({r0.hi, r1.hi, 1e300});
    auto h = [&n](double y) {
        return n.kind == GrowthFunction::Kind::product_inverse ? product_of_inverses(n, y)
                                                               : ratio_of_inverses(n, y);
    };
    return {h(ylo), h(yhi)};
}

std::shared_ptr<GrowthFunction::Node> make_node(GrowthFunction::Kind kind)
{
    auto n = std::make_shared<GrowthFunction::Node>();
    n->kind = kind;
    return n;
}

}  // namespace

namespace detail {

void prepare_table(GrowthFunction::Node& node)
{
    const auto& k = node.knots;
    if (k.size() < 2) throw DomainError("table: at least two knots are required");
    node.log_t.clear();
    node.log_y.clear();
    for (size_t i = 0; i < k.size(); ++i) {
        if (!(k[i].t > 0.0) || !(k[i].y > 0.0) || !std::isfinite(k[i].t) || !std::isfinite(k[i].y)) {
            throw DomainError("table: knot " + std::to_string(i) + " must have positive finite coordinates");
        }
        if (i > 0 && !(k[i].t > k[i - 1].t && k[i].y > k[i - 1].y)) {
            throw DomainError("table: knots must be strictly increasing in both coordinates (knot " +
                              std::to_string(i) + ")");
        }
        node.log_t.push_back(std::log(k[i].t));
        node.log_y.push_back(std::log(k[i].y));
    }
    node.support = {k.front().t, k.back().t};
}

double table_eval(const GrowthFunction::Node& node, double t)
{
    const auto& lt = node.log_t;
    const auto& ly = node.log_y;
    const size_t n = lt.size();
    const double u = std::log(t);
    size_t i = 0;
    if (u < lt.front() || u > lt.back()) {
        if (!node.extrapolate) {
            throw DomainError("table: argument " + fmt_double(t) + " outside knot hull [" +
                              fmt_double(node.knots.front().t) + ", " +
                              fmt_double(node.knots.back().t) + "]");
        }
        i = u < lt.front() ? 0 : n - 2;
    } else {
        const auto it = std::upper_bound(lt.begin(), lt.end(), u);
        i = static_cast<size_t>(std::distance(lt.begin(), it));
        i = std::clamp<size_t>(i == 0 ? 0 : i - 1, 0, n - 2);
    }
    const double w = (u - lt[i]) / (lt[i + 1] - lt[i]);
    return std::exp(ly[i] + w * (ly[i + 1] - ly[i]));
}

double table_inverse(const GrowthFunction::Node& node, double y)
{
    const auto& lt = node.log_t;
    const auto& ly = node.log_y;
    const size_t n = lt.size();
    const double v = std::log(y);
    size_t i = 0;
    if (v < ly.front() || v > ly.back()) {
        if (!node.extrapolate) {
            throw NumericalError("table: value " + fmt_double(y) + " outside the table range (unbounded bracket)");
        }
        i = v < ly.front() ? 0 : n - 2;
    } else {
        const auto it = std::upper_bound(ly.begin(), ly.end(), v);
        i = static_cast<size_t>(std::distance(ly.begin(), it));
        i = std::clamp<size_t>(i == 0 ? 0 : i - 1, 0, n - 2);
    }
    const double w = (v - ly[i]) / (ly[i + 1] - ly[i]);
    return std::exp(lt[i] + w * (lt[i + 1] - lt[i]));
}

}  // namespace detail

// ---------------------------------------------------------------------------

const char* to_string(GrowthFunction::Kind kind)
{
    switch (kind) {
    case GrowthFunction::Kind::power: return "power";
    case GrowthFunction::Kind::power_log: return "power_log";
    case GrowthFunction::Kind::exp_minus_one: return "exp_minus_one";
    case GrowthFunction::Kind::table: return "table";
    case GrowthFunction::Kind::complementary: return "complementary";
    case GrowthFunction::Kind::product_inverse: return "product_inverse";
    case GrowthFunction::Kind::ratio_inverse: return "ratio_inverse";
    case GrowthFunction::Kind::convexified: return "convexified";
    }
    return "unknown";
}

GrowthFunction::GrowthFunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

GrowthFunction GrowthFunction::power(double p)
{
    require_exponent(p, "power");
    auto n = make_node(Kind::power);
    n->p = p;
    n->lower_type = p;
    n->upper_type = p;
    n->support = {0.0, kInf};
    return GrowthFunction(std::move(n));
}

GrowthFunction GrowthFunction::power_log(double p, double a)
{
    require_exponent(p, "power_log");
    if (!std::isfinite(a)) throw DomainError("power_log: log exponent must be finite");
    // d log f / d log t = p + a t / ((e + t) log(e + t)), and the last factor lies in [0, 1).
    if (p + std::min(a, 0.0) <= 0.0) {
        throw DomainError("power_log: p + min(a, 0) must be positive for monotonicity");
    }
    auto n = make_node(Kind::power_log);
    n->p = p;
    n->a = a;
    n->support = {0.0, kInf};
    return GrowthFunction(std::move(n));
}

GrowthFunction GrowthFunction::exp_minus_one()
{
    auto n = make_node(Kind::exp_minus_one);
    n->lower_type = 1.0;
    n->support = {0.0, kExpArgumentLimit};
    return GrowthFunction(std::move(n));
}

GrowthFunction GrowthFunction::table(std::vector<Knot> knots, bool extrapolate)
{
    auto n = make_node(Kind::table);
    n->knots = std::move(knots);
    n->extrapolate = extrapolate;
    detail::prepare_table(*n);
    return GrowthFunction(std::move(n));
}

GrowthFunction::Kind GrowthFunction::kind() const { return node_->kind; }

double GrowthFunction::eval(double t) const
{
    if (std::isnan(t) || t < 0.0) {
        throw DomainError("growth function evaluated at invalid argument " + fmt_double(t));
    }
    if (t == 0.0) return 0.0;
    const Node& n = *node_;
    switch (n.kind) {
    case Kind::power:
        return std::pow(t, n.p);
    case Kind::power_log:
        return std::pow(t, n.p) * std::pow(std::log(M_E + t), n.a);
    case Kind::exp_minus_one:
        return std::expm1(std::min(t, n.support.hi));
    case Kind::table:
        return detail::table_eval(n, t);
    case Kind::complementary:
        return detail::complementary_eval(n, t);
    case Kind::product_inverse:
    case Kind::ratio_inverse:
        return solve_composite(n, std::clamp(t, n.support.lo, n.support.hi));
    case Kind::convexified:
        return n.operands[0].eval(std::pow(t, 1.0 / n.p));
    }
    throw Error("unreachable growth kind");
}

double GrowthFunction::inverse(double y) const
{
    if (std::isnan(y) || y < 0.0) {
        throw DomainError("growth inverse evaluated at invalid value " + fmt_double(y));
    }
    if (y == 0.0) return 0.0;
    const Node& n = *node_;
    switch (n.kind) {
    case Kind::power:
        return std::pow(y, 1.0 / n.p);
    case Kind::exp_minus_one:
        if (y > std::expm1(n.support.hi)) {
            throw NumericalError("exp_minus_one: value " + fmt_double(y) + " beyond evaluation domain (unbounded)");
        }
        return std::log1p(y);
    case Kind::table:
        return detail::table_inverse(n, y);
    case Kind::complementary:
        return detail::complementary_inverse(n, y);
    case Kind::product_inverse:
        return product_of_inverses(n, y);
    case Kind::ratio_inverse:
        return ratio_of_inverses(n, y);
    case Kind::convexified:
        return std::pow(n.operands[0].inverse(y), n.p);
    case Kind::power_log: {
        detail::RootOptions opt;
        opt.domain_hi = 1e300;
        // t^p is the leading behaviour; start the bracket around it.
        const double guess = std::pow(y, 1.0 / n.p);
        opt.start_lo = guess * 1e-3;
        opt.start_hi = std::min(guess * 10.0, 1e300);
        return detail::solve_increasing([this](double t) { return eval(t); }, y, opt).x;
    }
    }
    throw Error("unreachable growth kind");
}

Interval GrowthFunction::support() const { return node_->support; }

std::optional<double> GrowthFunction::declared_lower_type() const { return node_->lower_type; }
std::optional<double> GrowthFunction::declared_upper_type() const { return node_->upper_type; }
double GrowthFunction::exponent() const { return node_->p; }
double GrowthFunction::log_exponent() const { return node_->a; }
std::span<const GrowthFunction::Knot> GrowthFunction::knots() const { return node_->knots; }
bool GrowthFunction::extrapolates() const { return node_->extrapolate; }
std::span<const GrowthFunction> GrowthFunction::operands() const { return node_->operands; }
std::span<const std::string> GrowthFunction::warnings() const { return node_->warnings; }

std::string GrowthFunction::describe() const
{
    const Node& n = *node_;
    switch (n.kind) {
    case Kind::power: return "power(" + fmt_double(n.p) + ")";
    case Kind::power_log: return "power_log(" + fmt_double(n.p) + ", " + fmt_double(n.a) + ")";
    case Kind::exp_minus_one: return "exp_minus_one";
    case Kind::table: return "table(" + std::to_string(n.knots.size()) + " knots)";
    case Kind::complementary: return "complementary(" + n.operands[0].describe() + ")";
    case Kind::product_inverse:
        return "product_inverse(" + n.operands[0].describe() + ", " + n.operands[1].describe() + ")";
    case Kind::ratio_inverse:
        return "ratio_inverse(" + n.operands[0].describe() + ", " + n.operands[1].describe() + ")";
    case Kind::convexified:
        return "convexified(" + n.operands[0].describe() + ", " + fmt_double(n.p) + ")";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------

namespace {

std::optional<double> pure_power_exponent(const GrowthFunction& f)
{
    auto lo = f.declared_lower_type();
    auto hi = f.declared_upper_type();
    if (lo && hi && *lo == *hi) return lo;
    return std::nullopt;
}

}  // namespace

GrowthFunction product_inverse_compose(const GrowthFunction& f1, const GrowthFunction& f2)
{
    auto n = make_node(GrowthFunction::Kind::product_inverse);
    n->operands = {f1, f2};
    auto l1 = f1.declared_lower_type();
    auto l2 = f2.declared_lower_type();
    if (l1 && l2) n->lower_type = 1.0 / (1.0 / *l1 + 1.0 / *l2);
    auto u1 = f1.declared_upper_type();
    auto u2 = f2.declared_upper_type();
    if (u1 && u2) n->upper_type = 1.0 / (1.0 / *u1 + 1.0 / *u2);
    n->support = composite_support(*n);
    return GrowthFunction(std::move(n));
}

GrowthFunction ratio_inverse_compose(const GrowthFunction& f1, const GrowthFunction& f2)
{
    auto n = make_node(GrowthFunction::Kind::ratio_inverse);
    n->operands = {f1, f2};

    // The composite inverse must be strictly increasing on the working range.
    const Interval r1 = value_range(f1);
    const Interval r2 = value_range(f2);
    const double ylo = std::max({r1.lo, r2.lo, 1e-12});
    const double yhi = std::min({r1.hi, r2.hi, 1e12});
    if (!(yhi > ylo)) {
        throw PreconditionError("ratio_inverse_compose: operands have disjoint ranges");
    }
    const int points = 64;
    double previous = -1.0;
    for (int i = 0; i < points; ++i) {
        const double y = std::exp(std::log(ylo) + (std::log(yhi) - std::log(ylo)) * i / (points - 1));
        const double v = ratio_of_inverses(*n, y);
        if (!(v > 0.0) || !std::isfinite(v) || (i > 0 && !(v > previous * (1.0 + 1e-9)))) {
            throw PreconditionError("ratio_inverse_compose: " + f2.describe() + "^{-1} / " + f1.describe() +
                                    "^{-1} is not strictly increasing (degenerate composition)");
        }
        previous = v;
    }

    auto p1 = pure_power_exponent(f1);
    auto p2 = pure_power_exponent(f2);
    if (p1 && p2) {
        const double r = 1.0 / (1.0 / *p2 - 1.0 / *p1);
        n->lower_type = r;
        n->upper_type = r;
    }
    n->support = composite_support(*n);
    return GrowthFunction(std::move(n));
}

GrowthFunction convexify_power(const GrowthFunction& f, double p)
{
    require_exponent(p, "convexify_power");
    auto n = make_node(GrowthFunction::Kind::convexified);
    n->p = p;
    n->operands = {f};
    const Interval s = f.support();
    n->support = {std::pow(s.lo, p), std::isinf(s.hi) ? kInf : std::pow(s.hi, p)};
    if (auto l = f.declared_lower_type()) n->lower_type = *l / p;
    if (auto u = f.declared_upper_type()) n->upper_type = *u / p;

    const TypeEstimate types = estimate_types(f);
    if (!types.lower_exponent || p > *types.lower_exponent + 1e-3) {
        n->warnings.push_back("convexify_power: p=" + fmt_double(p) +
                              " exceeds the estimated lower type " +
                              (types.lower_exponent ? fmt_double(*types.lower_exponent) : "(absent)"));
    }
    return GrowthFunction(std::move(n));
}

// ---------------------------------------------------------------------------

Weight Weight::rho(const GrowthFunction& f)
{
    Weight w;
    w.sources_ = {f};
    return w;
}

Weight Weight::ratio(const GrowthFunction& f1, const GrowthFunction& f2)
{
    Weight w;
    w.sources_ = {f1, f2};
    return w;
}

double Weight::operator()(double t) const
{
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("weight evaluated at non-positive argument " + fmt_double(t));
    }
    auto rho_of = [t](const GrowthFunction& f) { return 1.0 / (t * f.inverse(1.0 / t)); };
    if (sources_.empty()) return 1.0;
    if (sources_.size() == 1) return rho_of(sources_[0]);
    return rho_of(sources_[0]) / rho_of(sources_[1]);
}

}  // namespace ho
