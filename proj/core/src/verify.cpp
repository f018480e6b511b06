#include "ho/verify.hpp"

#include "ho/circle.hpp"
#include "ho/errors.hpp"
#include "ho/factor.hpp"
#include "ho/grid.hpp"
#include "ho/growth.hpp"
#include "ho/hankel.hpp"
#include "ho/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace ho {

bool VerifyReport::all_passed() const { return failures() == 0; }

int VerifyReport::failures() const
{
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

namespace {

using Rng = std::mt19937_64;

cplx normal_complex(Rng& rng)
{
    std::normal_distribution<double> d(0.0, 1.0);
    const double re = d(rng);
    const double im = d(rng);
    return {re, im};
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

BoundaryFunction random_trig(Rng& rng, int degree, int n)
{
    std::vector<std::pair<int, cplx>> modes;
    for (int k = -degree; k <= degree; ++k) modes.emplace_back(k, normal_complex(rng));
    return BoundaryFunction::from_modes(modes, n);
}

BoundaryFunction random_real_trig(Rng& rng, int degree, int n, bool zero_mean)
{
    std::vector<std::pair<int, cplx>> modes;
    if (!zero_mean) modes.emplace_back(0, normal_complex(rng).real());
    for (int k = 1; k <= degree; ++k) {
        const cplx c = normal_complex(rng);
        modes.emplace_back(k, c);
        modes.emplace_back(-k, std::conj(c));
    }
    return BoundaryFunction::from_modes(modes, n);
}

AnalyticFunction random_poly(Rng& rng, int degree)
{
    std::vector<cplx> a(static_cast<size_t>(degree) + 1);
    for (auto& v : a) v = normal_complex(rng);
    return AnalyticFunction(std::move(a));
}

ZeroList random_zeros(Rng& rng, int count, double rmax)
{
    ZeroList z;
    for (int i = 0; i < count; ++i) z.zeros.push_back(std::polar(rmax * std::sqrt(uniform(rng, 0.0, 1.0)), uniform(rng, 0.0, 2.0 * M_PI)));
    return z;
}

/// prod (1 - z / a_i) with |a_i| in [1.5, 3]: zero-free on the closed disk, value 1 at 0.
AnalyticFunction random_outer_poly(Rng& rng, int factors)
{
    AnalyticFunction o = AnalyticFunction::constant(1.0);
    for (int i = 0; i < factors; ++i) {
        const cplx a = std::polar(uniform(rng, 1.5, 3.0), uniform(rng, 0.0, 2.0 * M_PI));
        o = o.multiply(AnalyticFunction({1.0, -1.0 / a}));
    }
    return o;
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double max_coeff_diff(const AnalyticFunction& a, const AnalyticFunction& b)
{
    double m = 0.0;
    for (int k = 0; k < std::max(a.size(), b.size()); ++k) m = std::max(m, std::abs(a.coefficient(k) - b.coefficient(k)));
    return m;
}

double max_sample_diff(const BoundaryFunction& a, const BoundaryFunction& b)
{
    double m = 0.0;
    for (int j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a.samples()[static_cast<size_t>(j)] - b.samples()[static_cast<size_t>(j)]));
    return m;
}

class Suite {
public:
    Suite(VerifyReport& report, std::uint64_t seed) : report_(report), seed_(seed) {}

    /// Records measured <= limit. Exceptions count as failures.
    void check(const std::string& module, const std::string& name, double limit,
               const std::function<double(Rng&)>& measure)
    {
        CheckResult c{module, name, false, 0.0, limit, {}};
        // Each check gets its own stream so results do not depend on check order.
        Rng rng(seed_ + 0x9e3779b97f4a7c15ULL * (report_.checks.size() + 1));
        try {
            c.measured = measure(rng);
            c.passed = c.measured <= limit;
        } catch (const std::exception& e) {
            c.detail = e.what();
            c.measured = std::numeric_limits<double>::infinity();
        }
        report_.checks.push_back(std::move(c));
    }

private:
    VerifyReport& report_;
    std::uint64_t seed_;
};

std::vector<GrowthFunction> builtin_growths()
{
    using G = GrowthFunction;
    return {G::power(0.5),
            G::power(1.0),
            G::power(2.0),
            G::power(4.0),
            G::power_log(1.0, 1.0),
            G::power_log(2.0, -0.5),
            G::exp_minus_one(),
            G::table({{1e-3, 1e-6}, {1.0, 1.0}, {1e3, 1e6}}),
            complementary(G::power(2.0)),
            complementary(G::power_log(2.0, 1.0)),
            product_inverse_compose(G::power(2.0), G::power(3.0)),
            ratio_inverse_compose(G::power(4.0), G::power(2.0)),
            convexify_power(G::power(2.0), 2.0)};
}

// A 64-point log grid inside the support of f, clipped to [lo, hi].
std::vector<double> support_grid(const GrowthFunction& f, double lo, double hi, int points = 64)
{
    const Interval s = f.support();
    return log_grid(std::max(lo, s.lo > 0.0 ? s.lo : lo), std::min(hi, s.hi), points);
}

void growth_checks(Suite& suite)
{
    using G = GrowthFunction;
    suite.check("growth", "monotone on 64-point grids", 0.0, [](Rng&) {
        double violations = 0;
        for (const G& f : builtin_growths()) {
            const auto grid = support_grid(f, 1e-6, 1e6);
            for (size_t i = 1; i < grid.size(); ++i) {
                if (f.eval(grid[i - 1]) > f.eval(grid[i]) * (1.0 + 1e-12)) ++violations;
            }
            if (f.eval(0.0) != 0.0) ++violations;
        }
        return violations;
    });
    suite.check("growth", "inverse round trip", 1e-8, [](Rng&) {
        double worst = 0.0;
        for (const G& f : builtin_growths()) {
            const Interval s = f.support();
            const double ylo = std::max(1e-6, f.eval(std::max(s.lo, 1e-300)));
            const double yhi = std::min(1e6, f.eval(std::min(s.hi, 1e300)));
            for (double y : log_grid(ylo, yhi, 64)) worst = std::max(worst, rel_err(f.eval(f.inverse(y)), y));
        }
        return worst;
    });
    const std::vector<G> convex = {G::power(2.0), G::power(3.0), G::power_log(2.0, 1.0)};
    suite.check("growth", "Young inequality on 32x32 grid", 0.0, [&](Rng&) {
        double worst = 0.0;
        for (const G& f : convex) {
            const G psi = complementary(f);
            for (double s : log_grid(1e-3, 1e3, 32)) {
                for (double t : log_grid(1e-3, 1e3, 32)) {
                    worst = std::max(worst, s * t - f.eval(t) - psi.eval(s) - 1e-9 * (1.0 + s * t));
                }
            }
        }
        return worst;
    });
    suite.check("growth", "t < inv(phi)(t) inv(psi)(t) <= 2t", 0.0, [&](Rng&) {
        double violations = 0;
        for (const G& f : convex) {
            const G psi = complementary(f);
            for (double t : log_grid(1e-3, 1e3, 64)) {
                const double prod = f.inverse(t) * psi.inverse(t);
                if (!(prod > t) || prod > 2.0 * t * (1.0 + 1e-6)) ++violations;
            }
        }
        return violations;
    });
    const std::vector<G> convex_with_exp = {G::power(2.0), G::power(3.0), G::power_log(2.0, 1.0), G::exp_minus_one()};
    suite.check("growth", "phi / t^a nondecreasing and phi / t^b nonincreasing on tail grid", 1e-9, [&](Rng&) {
        double worst = 0.0;
        for (const G& f : convex_with_exp) {
            const IndexEstimate idx = boyd_indices(f);
            const auto& t = idx.grid_used;
            for (size_t i = 1; i < t.size(); ++i) {
                const double la = std::log(f.eval(t[i - 1])) - idx.a_lower * std::log(t[i - 1]);
                const double lb = std::log(f.eval(t[i])) - idx.a_lower * std::log(t[i]);
                worst = std::max(worst, la - lb);
                const double ua = std::log(f.eval(t[i - 1])) - idx.b_upper * std::log(t[i - 1]);
                const double ub = std::log(f.eval(t[i])) - idx.b_upper * std::log(t[i]);
                worst = std::max(worst, ub - ua);
            }
        }
        return worst;
    });
    suite.check("growth", "types in (1, inf) give delta2, nabla2 and indices within the types", 0.0, [&](Rng&) {
        double violations = 0;
        for (const G& f : convex) {
            const TypeEstimate t = estimate_types(f);
            const DoublingResult d = check_doubling(f);
            const IndexEstimate idx = boyd_indices(f);
            if (!t.lower_exponent || !t.upper_exponent || *t.lower_exponent <= 1.0) {
                ++violations;
                continue;
            }
            if (!d.delta2 || !d.nabla2) ++violations;
            if (idx.a_lower < *t.lower_exponent - 1e-2 || idx.b_upper > *t.upper_exponent + 1e-2) ++violations;
        }
        return violations;
    });
    suite.check("growth", "product-inverse lower type equals harmonic combination", 5e-2, [](Rng&) {
        double worst = 0.0;
        for (auto [p1, p2] : {std::pair{2.0, 2.0}, {2.0, 3.0}, {4.0, 4.0 / 3.0}, {1.5, 6.0}}) {
            const G f3 = product_inverse_compose(G::power(p1), G::power(p2));
            const TypeEstimate t = estimate_types(f3);
            worst = std::max(worst, std::abs(t.lower_exponent.value_or(0.0) - 1.0 / (1.0 / p1 + 1.0 / p2)));
        }
        return worst;
    });
    suite.check("growth", "doubling classification of power(2), power(1), exp", 0.0, [](Rng&) {
        double violations = 0;
        const DoublingResult p2 = check_doubling(G::power(2.0));
        if (!p2.delta2 || !p2.nabla2 || std::abs(p2.K - 4.0) > 1e-12) ++violations;
        if (check_doubling(G::power(1.0)).nabla2) ++violations;
        if (check_doubling(G::exp_minus_one()).delta2) ++violations;
        return violations;
    });
    suite.check("growth", "composition inverse identities", 1e-8, [](Rng&) {
        double worst = 0.0;
        const G a = G::power(2.0), b = G::power(3.0), c = G::power(4.0);
        const G prod = product_inverse_compose(a, b);
        const G ratio = ratio_inverse_compose(c, a);
        const G mixed = product_inverse_compose(G::power_log(2.0, 1.0), G::exp_minus_one());
        for (double t : log_grid(1e-6, 1e6, 64)) {
            worst = std::max(worst, rel_err(prod.inverse(t), a.inverse(t) * b.inverse(t)));
            worst = std::max(worst, rel_err(ratio.inverse(t), a.inverse(t) / c.inverse(t)));
        }
        for (double t : log_grid(1e-3, 1e3, 64)) {
            worst = std::max(worst, rel_err(mixed.inverse(t), G::power_log(2.0, 1.0).inverse(t) * G::exp_minus_one().inverse(t)));
        }
        return worst;
    });
}

void circle_checks(Suite& suite, int n)
{
    using G = GrowthFunction;
    suite.check("circle", "Luxemburg norm equals p-mean for power(p)", 1e-8, [n](Rng& rng) {
        double worst = 0.0;
        LuxemburgOptions iterate;
        iterate.closed_form = false;
        for (double p : {0.5, 1.0, 2.0, 4.0}) {
            for (int i = 0; i < 20; ++i) {
                const BoundaryFunction g = random_trig(rng, 1 + i % 8, n);
                long double s = 0.0L;
                for (double a : g.magnitudes()) s += std::pow(static_cast<long double>(a), static_cast<long double>(p));
                const double pmean = static_cast<double>(std::pow(s / n, 1.0L / p));
                worst = std::max(worst, rel_err(luxemburg_norm(g, G::power(p), iterate).value, pmean));
                worst = std::max(worst, rel_err(luxemburg_norm(g, G::power(p)).value, pmean));
            }
        }
        return worst;
    });
    suite.check("circle", "Luxemburg norm homogeneous and monotone", 1e-8, [n](Rng& rng) {
        double worst = 0.0;
        for (const G& f : {G::exp_minus_one(), G::power_log(1.0, 1.0), G::power(2.0)}) {
            for (int i = 0; i < 5; ++i) {
                const BoundaryFunction g = random_trig(rng, 4, n);
                const double base = luxemburg_norm(g, f).value;
                const cplx c = normal_complex(rng);
                worst = std::max(worst, rel_err(luxemburg_norm(g.scaled(c), f).value, std::abs(c) * base));
                std::vector<cplx> bigger(g.samples().begin(), g.samples().end());
                for (size_t j = 0; j < bigger.size(); ++j) bigger[j] *= 1.0 + 0.5 * std::abs(std::cos(2.0 * M_PI * j / n));
                const double big = luxemburg_norm(BoundaryFunction::from_samples(bigger), f).value;
                worst = std::max(worst, std::max(0.0, base - big * (1.0 + 1e-8)) / base);
            }
        }
        return worst;
    });
    suite.check("circle", "Hilbert transform of cos k is sin k", 1e-12, [n](Rng&) {
        double worst = 0.0;
        for (int k = 1; k < std::min(n / 2, 64); k += 3) {
            std::vector<double> c(static_cast<size_t>(n)), s(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j) {
                c[static_cast<size_t>(j)] = std::cos(2.0 * M_PI * k * j / n);
                s[static_cast<size_t>(j)] = std::sin(2.0 * M_PI * k * j / n);
            }
            worst = std::max(worst, max_sample_diff(hilbert_transform(BoundaryFunction::from_real_samples(c)),
                                                    BoundaryFunction::from_real_samples(s)));
        }
        return worst;
    });
    suite.check("circle", "Hilbert involution on zero-mean reals", 1e-10, [n](Rng& rng) {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const BoundaryFunction u = random_real_trig(rng, 1 + i, n, true);
            worst = std::max(worst, max_sample_diff(hilbert_transform(hilbert_transform(u)), u.scaled(-1.0)));
        }
        return worst;
    });
    suite.check("circle", "Hilbert transform bounded on L^2 (constant 1)", 1e-8, [n](Rng& rng) {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const BoundaryFunction u = random_real_trig(rng, 1 + i % 10, n, false);
            const double a = luxemburg_norm(hilbert_transform(u), G::power(2.0)).value;
            const double b = luxemburg_norm(u, G::power(2.0)).value;
            worst = std::max(worst, a / b - 1.0);
        }
        return worst;
    });
    suite.check("circle", "maximal function dominates |g| and mean |g|", 0.0, [n](Rng& rng) {
        double violations = 0;
        for (int i = 0; i < 10; ++i) {
            const BoundaryFunction g = random_trig(rng, 1 + i, n);
            const BoundaryFunction m = maximal_hl(g);
            const std::vector<double> a = g.magnitudes();
            double mean = 0.0;
            for (double v : a) mean += v / n;
            for (int j = 0; j < n; ++j) {
                const double mj = m.samples()[static_cast<size_t>(j)].real();
                if (mj < a[static_cast<size_t>(j)] * (1.0 - 1e-12) || mj < mean * (1.0 - 1e-12)) ++violations;
            }
        }
        return violations;
    });
    suite.check("circle", "BMO norm rotation and constant invariance", 1e-12, [n](Rng& rng) {
        double worst = 0.0;
        const Weight one = weight_rho(G::power(1.0));
        const Weight half = weight_ratio(G::power(1.0), G::power(2.0));
        for (int i = 0; i < 5; ++i) {
            const BoundaryFunction g = random_trig(rng, 1 + 2 * i, n);
            for (const Weight* w : {&one, &half}) {
                const double base = bmo_rho_norm(g, *w);
                const int shift = static_cast<int>(uniform(rng, 1.0, n - 1.0));
                worst = std::max(worst, std::abs(bmo_rho_norm(g.rotated(shift), *w) - base));
                worst = std::max(worst, std::abs(bmo_rho_norm(g.plus_constant(5.0), *w) - base));
            }
        }
        worst = std::max(worst, bmo_rho_norm(BoundaryFunction::constant(3.0, n), one));
        return worst;
    });
    suite.check("circle", "Herglotz real part equals Poisson extension", 1e-8, [n](Rng& rng) {
        double worst = 0.0;
        const double rmax = resolution_radius(n);
        for (int i = 0; i < 10; ++i) {
            const BoundaryFunction u = random_real_trig(rng, 1 + i, n, false);
            for (double r : {0.0, 0.3, 0.7, rmax}) {
                const double theta = uniform(rng, 0.0, 2.0 * M_PI);
                const cplx h = herglotz_extend(u, std::polar(r, theta));
                worst = std::max(worst, std::abs(h.real() - poisson_extend(u, r, theta).real()));
            }
            worst = std::max(worst, std::abs(herglotz_extend(u, 0.0) - u.mean()));
        }
        return worst;
    });
}

void hardy_checks(Suite& suite, int n)
{
    using G = GrowthFunction;
    const std::vector<G> family = {G::power(0.5), G::power(1.0), G::power(2.0), G::exp_minus_one()};
    suite.check("hardy", "radial norms nondecreasing", 0.0, [&, n](Rng& rng) {
        double violations = 0;
        for (int i = 0; i < 5; ++i) {
            const AnalyticFunction g = random_poly(rng, 1 + 3 * i);
            for (const G& f : family) {
                const RadialReport r = hphi_norm(g, f, n);
                if (!r.converged) ++violations;
                if (r.boundary_norm < r.norms[r.norms.size() - 2] * (1.0 - 1e-9)) ++violations;
            }
        }
        return violations;
    });
    suite.check("hardy", "Szego projection idempotent", 1e-12, [n](Rng& rng) {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const BoundaryFunction g = random_trig(rng, 1 + i % 12, n);
            const AnalyticFunction p = szego_project(g);
            worst = std::max(worst, max_coeff_diff(szego_project(circle_restriction(p, 1.0, n)), p));
        }
        return worst;
    });
    suite.check("hardy", "Szego projection contractive on L^2", 1e-12, [n](Rng& rng) {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const BoundaryFunction g = random_trig(rng, 1 + i % 12, n);
            worst = std::max(worst, hphi_boundary_norm(szego_project(g), G::power(2.0), n) /
                                        luxemburg_norm(g, G::power(2.0)).value - 1.0);
        }
        return worst;
    });
    suite.check("hardy", "pairing equals boundary integral and is conjugate symmetric", 1e-10, [n](Rng& rng) {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const AnalyticFunction f = random_poly(rng, 1 + i % 9);
            const AnalyticFunction g = random_poly(rng, 1 + i % 7);
            const BoundaryFunction fb = circle_restriction(f, 1.0, n);
            const BoundaryFunction gb = circle_restriction(g, 1.0, n);
            const cplx integral = fb.times(gb.conj()).mean();
            worst = std::max(worst, std::abs(pairing(f, g) - integral));
            worst = std::max(worst, std::abs(pairing(f, g) - std::conj(pairing(g, f))));
        }
        return worst;
    });
    suite.check("hardy", "generalized Holder for power(2) x power(2) -> power(1)", 1e-8, [n](Rng& rng) {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const AnalyticFunction f = random_poly(rng, 1 + i % 6);
            const AnalyticFunction g = random_poly(rng, 1 + i % 5);
            const double lhs = hphi_boundary_norm(f.multiply(g), G::power(1.0), n);
            const double rhs = hphi_boundary_norm(f, G::power(2.0), n) * hphi_boundary_norm(g, G::power(2.0), n);
            worst = std::max(worst, lhs / rhs - 1.0);
        }
        return worst;
    });
    suite.check("hardy", "nontangential maximal function dominates the norm", 1e-8, [&, n](Rng& rng) {
        double worst = 0.0;
        for (int i = 0; i < 5; ++i) {
            const AnalyticFunction g = random_poly(rng, 1 + 2 * i);
            const BoundaryFunction star = nontangential_max(g, 1.0, n);
            for (const G& f : family) {
                const double a = luxemburg_norm(star, f).value;
                const double b = hphi_norm(g, f, n).value();
                worst = std::max(worst, (b - a) / b);
            }
        }
        return worst;
    });
    suite.check("hardy", "radial differences of z^k equal 1 - r^k", 1e-9, [n](Rng&) {
        double worst = 0.0;
        for (int k = 1; k <= 6; ++k) {
            const RadialReport r = radial_convergence_report(AnalyticFunction::monomial(k), G::power(2.0), n);
            for (size_t i = 0; i < r.radii.size(); ++i) worst = std::max(worst, std::abs(r.norms[i] - (1.0 - std::pow(r.radii[i], k))));
        }
        return worst;
    });
}

struct TestProduct {
    AnalyticFunction g;
    ZeroList zeros;
    AnalyticFunction outer;
};

TestProduct random_product(Rng& rng, int n, int max_zeros)
{
    TestProduct t;
    t.zeros = random_zeros(rng, static_cast<int>(uniform(rng, 0.0, max_zeros + 1.0)), 0.9);
    t.outer = random_outer_poly(rng, 1 + static_cast<int>(uniform(rng, 0.0, 3.0)));
    t.g = blaschke_series(t.zeros, n / 2).multiply(t.outer, n / 2);
    return t;
}

void factor_checks(Suite& suite, int n)
{
    using G = GrowthFunction;
    const std::vector<G> family = {G::power(0.5), G::power(1.0), G::power(2.0), G::exp_minus_one()};
    suite.check("factor", "Blaschke products unimodular on the circle", 1e-9, [n](Rng& rng) {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const ZeroList z = random_zeros(rng, 1 + i % 8, 0.95);
            for (double a : blaschke_boundary(z, n).magnitudes()) worst = std::max(worst, std::abs(a - 1.0));
        }
        return worst;
    });
    suite.check("factor", "Riesz division preserves the norm", 1e-6, [&, n](Rng& rng) {
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const TestProduct t = random_product(rng, n, 4);
            for (const G& f : family) {
                const FactorizationReport r = divide_by_blaschke(t.g, t.zeros, f, n);
                worst = std::max(worst, std::abs(r.norm_identities[0].ratio - 1.0));
                worst = std::max(worst, r.reconstruction_residual * 100.0);
            }
        }
        return worst;
    });
    suite.check("factor", "outer function reproduces its modulus", 1e-6, [n](Rng& rng) {
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const AnalyticFunction o = random_outer_poly(rng, 1 + i % 3);
            const BoundaryFunction ob = circle_restriction(o, 1.0, n);
            const std::vector<double> m = ob.magnitudes();
            const OuterResult res = outer_from_modulus(BoundaryFunction::from_real_samples(m));
            const std::vector<double> back = circle_restriction(res.outer, 1.0, n).magnitudes();
            const double top = *std::max_element(m.begin(), m.end());
            for (size_t j = 0; j < m.size(); ++j) worst = std::max(worst, std::abs(back[j] - m[j]) / top);
        }
        return worst;
    });
    suite.check("factor", "inner-outer norm equality and unimodular inner factor", 1e-6, [&, n](Rng& rng) {
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const TestProduct t = random_product(rng, n, 4);
            for (const G& f : family) {
                const FactorizationReport r = inner_outer(t.g, t.zeros, {}, f, n);
                worst = std::max(worst, std::abs(r.norm_identities[0].ratio - 1.0));
                worst = std::max(worst, r.diagnostic("inner_unimodularity"));
                worst = std::max(worst, r.diagnostic("inner_mismatch"));
            }
        }
        return worst;
    });
    suite.check("factor", "strong factorization chain", 1e-6, [n](Rng& rng) {
        double worst = 0.0;
        const std::vector<std::array<G, 3>> cases = {
            {G::power(2.0), G::power(2.0), G::power(1.0)},
            {G::power(2.0), G::power(3.0), G::power(1.2)},
        };
        for (const auto& c : cases) {
            for (int i = 0; i < 5; ++i) {
                const TestProduct t = random_product(rng, n, 3);
                const FactorizationReport r = strong_factorize(t.g, t.zeros, {}, c[0], c[1], c[2], n);
                worst = std::max(worst, r.diagnostic("pointwise_residual") * 100.0);
                worst = std::max(worst, r.reconstruction_residual);
                worst = std::max(worst, r.norm_identities[0].ratio - 1.0);
                if (r.diagnostic("reverse_constant") > 4.0) worst = std::max(worst, 1.0);
            }
        }
        return worst;
    });
}

void hankel_checks(Suite& suite, int n)
{
    using G = GrowthFunction;
    suite.check("hankel", "matrix action matches hankel_apply", 1e-10, [n](Rng& rng) {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const AnalyticFunction b = random_poly(rng, 1 + i % 12);
            const AnalyticFunction g = random_poly(rng, i % 9);
            const int m = std::max(b.size(), g.size());
            const HankelMatrix h = hankel_matrix(b, m);
            const std::vector<cplx> via_matrix = h.apply_conjugate(g.coefficients());
            const AnalyticFunction via_apply = hankel_apply(b, g, n);
            for (int k = 0; k < m; ++k) worst = std::max(worst, std::abs(via_matrix[static_cast<size_t>(k)] - via_apply.coefficient(k)));
        }
        return worst;
    });
    suite.check("hankel", "conjugate-linear in g and linear in b", 1e-10, [n](Rng& rng) {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const AnalyticFunction b1 = random_poly(rng, 5), b2 = random_poly(rng, 7);
            const AnalyticFunction g = random_poly(rng, 4), h = random_poly(rng, 6);
            const cplx a = normal_complex(rng), c = normal_complex(rng);
            const AnalyticFunction lhs = hankel_apply(b1, g * a + h * c, n);
            const AnalyticFunction rhs = hankel_apply(b1, g, n) * std::conj(a) + hankel_apply(b1, h, n) * std::conj(c);
            worst = std::max(worst, max_coeff_diff(lhs, rhs));
            const AnalyticFunction lhs2 = hankel_apply(b1 * a + b2 * c, g, n);
            const AnalyticFunction rhs2 = hankel_apply(b1, g, n) * a + hankel_apply(b2, g, n) * c;
            worst = std::max(worst, max_coeff_diff(lhs2, rhs2));
        }
        return worst;
    });
    suite.check("hankel", "H^2 estimate below the singular-value reference", 1e-8, [n](Rng& rng) {
        double worst = 0.0;
        Dictionary dict;
        dict.degree = 16;
        for (int i = 0; i < 5; ++i) {
            const AnalyticFunction b = random_poly(rng, 1 + 3 * i);
            const HankelReport r = hankel_norm_estimate(b, G::power(2.0), G::power(2.0), dict, rng(), n);
            worst = std::max(worst, r.operator_estimate / r.svd_reference - 1.0);
        }
        return worst;
    });
    suite.check("hankel", "estimates homogeneous in the symbol", 1e-9, [n](Rng& rng) {
        double worst = 0.0;
        Dictionary dict;
        dict.degree = 16;
        dict.random = 8;
        for (int i = 0; i < 3; ++i) {
            const AnalyticFunction b = random_poly(rng, 2 + i);
            const cplx lambda = normal_complex(rng);
            const HankelReport r1 = hankel_norm_estimate(b, G::power(4.0), G::power(2.0), dict, 7, n);
            const HankelReport r2 = hankel_norm_estimate(b * lambda, G::power(4.0), G::power(2.0), dict, 7, n);
            worst = std::max(worst, rel_err(r2.operator_estimate, std::abs(lambda) * r1.operator_estimate));
        }
        return worst;
    });
    std::vector<Symbol> monomials;
    for (int j = 1; j <= 6; ++j) monomials.push_back({"z^" + std::to_string(j), AnalyticFunction::monomial(j)});
    suite.check("hankel", "loss band width for power(4) -> power(2)", 10.0, [&, n](Rng& rng) {
        return loss_experiment(monomials, G::power(4.0), G::power(2.0), {}, rng(), n).band_ratio;
    });
    suite.check("hankel", "gain band width for power(2) -> power(2)", 10.0, [&, n](Rng& rng) {
        return gain_experiment(monomials, G::power(2.0), G::power(2.0), {}, rng(), n).band_ratio;
    });
}

}  // namespace

VerifyReport verify_all(int n, std::uint64_t seed)
{
    if (n < 64 || !is_power_of_two(n)) throw PreconditionError("verify_all: grid size must be a power of two >= 64");
    VerifyReport report;
    report.n = n;
    report.seed = seed;
    Suite suite(report, seed);
    growth_checks(suite);
    circle_checks(suite, n);
    hardy_checks(suite, n);
    factor_checks(suite, n);
    hankel_checks(suite, n);
    return report;
}

}  // namespace ho
