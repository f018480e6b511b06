#include "ho/errors.hpp"
#include "ho/factor.hpp"
#include "ho/grid.hpp"

#include <doctest.h>

#include <cmath>

using ho::AnalyticFunction;
using ho::cplx;
using ho::ZeroList;
using G = ho::GrowthFunction;

namespace {

constexpr int kN = 1024;

double coeff_diff(const AnalyticFunction& a, const AnalyticFunction& b)
{
    double m = 0.0;
    for (int k = 0; k < std::max(a.size(), b.size()); ++k) m = std::max(m, std::abs(a.coefficient(k) - b.coefficient(k)));
    return m;
}

// Naive Blaschke product straight from the factor formula.
cplx blaschke_direct(const std::vector<cplx>& zeros, cplx z)
{
    cplx b = 1.0;
    for (const cplx& a : zeros) b *= a == 0.0 ? z : (std::abs(a) / a) * (a - z) / (1.0 - std::conj(a) * z);
    return b;
}

}  // namespace

TEST_SUITE("factor.blaschke")
{
    TEST_CASE("blaschke examples")
    {
        CHECK(std::abs(ho::blaschke({{0.5}}, 0.0) - 0.5) < 1e-15);
        CHECK(std::abs(ho::blaschke({{0.0, 0.5}}, 0.25) - 1.0 / 14.0) < 1e-15);
        for (double a : ho::blaschke_boundary({{cplx(0.3, 0.4), -0.9, cplx(0.0, 0.95)}}, kN).magnitudes()) {
            CHECK(std::abs(a - 1.0) < 1e-9);
        }
    }

    TEST_CASE("series and direct evaluation agree inside the disk")
    {
        const std::vector<cplx> zeros{cplx(0.3, 0.4), 0.0, cplx(-0.5, 0.1)};
        const AnalyticFunction series = ho::blaschke_series({zeros}, kN / 2);
        for (cplx z : {cplx(0.1, 0.2), cplx(-0.6, 0.3), cplx(0.0, -0.8)}) {
            CHECK(std::abs(series.eval(z) - blaschke_direct(zeros, z)) < 1e-12);
            CHECK(std::abs(ho::blaschke({zeros}, z) - blaschke_direct(zeros, z)) < 1e-14);
            CHECK(std::abs(ho::blaschke({zeros}, z)) <= 1.0);
        }
    }

    TEST_CASE("zeros outside the disk are rejected")
    {
        CHECK_THROWS_AS(ho::blaschke({{1.0}}, 0.0), ho::DomainError);
        CHECK_THROWS_AS(ho::blaschke_boundary({{cplx(0.0, 1.5)}}, 64), ho::DomainError);
    }
}

TEST_SUITE("factor.riesz")
{
    TEST_CASE("divide z by its zero")
    {
        const ho::FactorizationReport r = ho::divide_by_blaschke(AnalyticFunction::monomial(1), {{0.0}}, G::power(2.0), kN);
        CHECK(coeff_diff(r.factor("Q"), AnalyticFunction::constant(1.0)) < 1e-12);
        CHECK(std::abs(r.identity("norm(G/B) = norm(G)").ratio - 1.0) < 1e-12);
    }

    TEST_CASE("recover the outer factor of B (1 + z/2)")
    {
        const ZeroList zeros{{0.0, 0.5}};
        const AnalyticFunction outer({1.0, 0.5});
        const AnalyticFunction g = ho::blaschke_series(zeros, kN / 2).multiply(outer, kN / 2);
        for (const G& f : {G::power(0.5), G::power(1.0), G::power(2.0), G::exp_minus_one()}) {
            const ho::FactorizationReport r = ho::divide_by_blaschke(g, zeros, f, kN);
            CHECK(coeff_diff(r.factor("Q"), outer) < 1e-10);
            CHECK(r.reconstruction_residual < 1e-8);
            CHECK(std::abs(r.norm_identities[0].ratio - 1.0) < 1e-6);
        }
    }

    TEST_CASE("empty zero list leaves G unchanged")
    {
        const AnalyticFunction g = AnalyticFunction::constant(1.0);
        const ho::FactorizationReport r = ho::divide_by_blaschke(g, {}, G::power(2.0), kN);
        CHECK(coeff_diff(r.factor("Q"), g) < 1e-15);
    }

    TEST_CASE("a listed point that is not a zero is refused")
    {
        CHECK_THROWS_AS(ho::divide_by_blaschke(AnalyticFunction({1.0, 1.0}), {{0.5}}, G::power(2.0), kN), ho::PreconditionError);
    }
}

TEST_SUITE("factor.outer")
{
    TEST_CASE("outer from modulus examples")
    {
        const ho::OuterResult c = ho::outer_from_modulus(ho::BoundaryFunction::constant(3.0, kN));
        CHECK(coeff_diff(c.outer, AnalyticFunction::constant(3.0)) < 1e-12);
        for (const AnalyticFunction& o : {AnalyticFunction({1.0, 0.5}), AnalyticFunction({2.0, 1.0})}) {
            const std::vector<double> m = ho::circle_restriction(o, 1.0, kN).magnitudes();
            const ho::OuterResult r = ho::outer_from_modulus(ho::BoundaryFunction::from_real_samples(m));
            CHECK(coeff_diff(r.outer, o) < 1e-6);
            CHECK(r.warnings.empty());
        }
    }

    TEST_CASE("norm of the outer function equals the norm of the modulus")
    {
        const std::vector<double> m = ho::circle_restriction(AnalyticFunction({2.0, cplx(0.0, 1.0), 0.3}), 1.0, kN).magnitudes();
        const ho::OuterResult r = ho::outer_from_modulus(ho::BoundaryFunction::from_real_samples(m));
        for (const G& f : {G::power(1.0), G::exp_minus_one()}) {
            const double lhs = ho::hphi_boundary_norm(r.outer, f, kN);
            const double rhs = ho::luxemburg_norm(m, f).value;
            CHECK(std::abs(lhs / rhs - 1.0) < 1e-6);
        }
        for (cplx z : {cplx(0.0), cplx(0.5, 0.5), cplx(-0.9, 0.0)}) CHECK(std::abs(r.outer.eval(z)) > 0.0);
    }

    TEST_CASE("clipping and invalid moduli")
    {
        std::vector<double> m(64, 1.0);
        m[3] = 0.0;
        CHECK_FALSE(ho::outer_from_modulus(ho::BoundaryFunction::from_real_samples(m)).warnings.empty());
        m[3] = -1.0;
        CHECK_THROWS_AS(ho::outer_from_modulus(ho::BoundaryFunction::from_real_samples(m)), ho::DomainError);
        CHECK_THROWS_AS(ho::outer_from_modulus(ho::BoundaryFunction::constant(0.0, 64)), ho::DomainError);
    }
}

TEST_SUITE("factor.singular_inner")
{
    TEST_CASE("singular inner examples")
    {
        const double m = 1.7;
        const ho::AtomicMeasure sigma{{{0.0, m}}};
        CHECK(std::abs(ho::singular_inner(sigma, 0.0) - std::exp(-m / (2.0 * M_PI))) < 1e-14);
        CHECK(std::abs(ho::singular_inner({}, cplx(0.3, 0.2)) - 1.0) < 1e-15);
        CHECK(std::abs(std::abs(ho::singular_inner({{{0.0, 1.0}}}, std::polar(0.99, M_PI))) - 1.0) < 1e-3);
        CHECK(std::abs(ho::singular_inner(sigma, 0.5)) <= 1.0);
    }

    TEST_CASE("series matches direct evaluation away from the boundary")
    {
        const ho::AtomicMeasure sigma{{{0.5, 0.8}, {3.0, 0.3}}};
        const AnalyticFunction s = ho::singular_inner_series(sigma, kN / 2);
        for (cplx z : {cplx(0.2, 0.1), cplx(-0.5, 0.0), cplx(0.0, 0.6)}) CHECK(std::abs(s.eval(z) - ho::singular_inner(sigma, z)) < 1e-10);
    }
}

TEST_SUITE("factor.inner_outer")
{
    TEST_CASE("inner-outer examples")
    {
        const AnalyticFunction outer({1.0, 0.5});
        const ho::FactorizationReport a = ho::inner_outer(outer, {}, {}, G::power(2.0), kN);
        CHECK(coeff_diff(a.factor("O"), outer) < 1e-6);
        CHECK(coeff_diff(a.factor("I"), AnalyticFunction::constant(1.0)) < 1e-6);

        const AnalyticFunction zg({0.0, 1.0, 0.5});
        const ho::FactorizationReport b = ho::inner_outer(zg, {{0.0}}, {}, G::power(2.0), kN);
        CHECK(coeff_diff(b.factor("O"), outer) < 1e-6);
        CHECK(coeff_diff(b.factor("I"), AnalyticFunction::monomial(1)) < 1e-6);
        CHECK(b.diagnostic("inner_unimodularity") < 1e-6);
        CHECK(b.diagnostic("inner_mismatch") < 1e-6);

        const ho::FactorizationReport c = ho::inner_outer(AnalyticFunction::constant(2.0), {}, {}, G::power(1.0), kN);
        CHECK(coeff_diff(c.factor("O"), AnalyticFunction::constant(2.0)) < 1e-10);
        CHECK(std::abs(c.identity("norm(O) = norm(G)").ratio - 1.0) < 1e-12);
    }

    TEST_CASE("singular factor is identified")
    {
        // A truncated Taylor series of S carries a Dirichlet spike at the atom,
        // so the recovered outer factor only converges slowly in the grid size.
        const ho::AtomicMeasure sigma{{{1.0, 0.2}}};
        auto mismatch = [&](int n) {
            const AnalyticFunction g = ho::singular_inner_series(sigma, n / 2).multiply(AnalyticFunction({2.0, 1.0}), n / 2);
            return ho::inner_outer(g, {}, sigma, G::power(2.0), n).diagnostic("inner_mismatch");
        };
        const double coarse = mismatch(kN), fine = mismatch(4 * kN);
        CHECK(coarse < 0.1);
        CHECK(fine < 0.05);
        CHECK(fine < 0.6 * coarse);
    }
}

TEST_SUITE("factor.strong")
{
    TEST_CASE("strong factorization examples")
    {
        const G p2 = G::power(2.0), p1 = G::power(1.0);
        const AnalyticFunction outer({1.0, 0.5});
        const ho::FactorizationReport a = ho::strong_factorize(outer, {}, {}, p2, p2, p1, kN);
        CHECK(a.diagnostic("pointwise_residual") < 1e-8);
        CHECK(a.reconstruction_residual < 1e-6);
        CHECK(std::abs(a.identity("norm(G1) norm(G2) <= norm(G)").ratio - 1.0) < 1e-6);
        // g1 = g2 = |g|^{1/2} in the power case.
        const std::vector<double> g1 = ho::circle_restriction(a.factor("G1"), 1.0, kN).magnitudes();
        const std::vector<double> g = ho::circle_restriction(outer, 1.0, kN).magnitudes();
        const double norm_g = ho::hphi_boundary_norm(outer, p1, kN);
        for (size_t j = 0; j < g.size(); j += 37) CHECK(std::abs(g1[j] - std::sqrt(g[j])) < 1e-6 * std::sqrt(norm_g));

        const ho::FactorizationReport one = ho::strong_factorize(AnalyticFunction::constant(1.0), {}, {}, p2, p2, p1, kN);
        CHECK(coeff_diff(one.factor("G1"), AnalyticFunction::constant(1.0)) < 1e-10);
        CHECK(coeff_diff(one.factor("G2"), AnalyticFunction::constant(1.0)) < 1e-10);

        const ho::FactorizationReport z = ho::strong_factorize(AnalyticFunction::monomial(1), {{0.0}}, {}, p2, p2, p1, kN);
        CHECK(coeff_diff(z.factor("G1"), AnalyticFunction::constant(1.0)) < 1e-10);
        CHECK(coeff_diff(z.factor("G2"), AnalyticFunction::monomial(1)) < 1e-10);
    }

    TEST_CASE("mismatched target growth is a precondition failure")
    {
        CHECK_THROWS_AS(ho::strong_factorize(AnalyticFunction({1.0, 0.5}), {}, {}, G::power(2.0), G::power(2.0), G::power(2.0), kN),
                        ho::PreconditionError);
    }
}
