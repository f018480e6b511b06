#include "oracles.hpp"

#include "ho/errors.hpp"
#include "ho/grid.hpp"
#include "ho/hardy.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using ho::AnalyticFunction;
using ho::BoundaryFunction;
using ho::cplx;
using G = ho::GrowthFunction;

TEST_CASE("evaluation agrees with explicit powers")
{
    const std::vector<cplx> a{1.0, cplx(0.5, -0.25), 0.0, cplx(0.0, 2.0)};
    const AnalyticFunction g(a);
    for (cplx z : {cplx(0.3, 0.1), cplx(-0.7, 0.2), cplx(0.0, 0.95)}) CHECK(std::abs(g.eval(z) - oracle::poly(a, z)) < 1e-14);
}

TEST_SUITE("hardy.restriction")
{
    TEST_CASE("restriction examples")
    {
        const int n = 32;
        const auto angles = ho::circle_angles(n);
        const BoundaryFunction half = ho::circle_restriction(AnalyticFunction::monomial(1), 0.5, n);
        const BoundaryFunction c = ho::circle_restriction(AnalyticFunction::constant(cplx(2.0, 1.0)), 0.3, n);
        const BoundaryFunction onez = ho::circle_restriction(AnalyticFunction({1.0, 1.0}), 1.0, n);
        for (int j = 0; j < n; ++j) {
            const double t = angles[static_cast<size_t>(j)];
            CHECK(std::abs(half.samples()[static_cast<size_t>(j)] - std::polar(0.5, t)) < 1e-14);
            CHECK(std::abs(c.samples()[static_cast<size_t>(j)] - cplx(2.0, 1.0)) < 1e-14);
            CHECK(std::abs(onez.samples()[static_cast<size_t>(j)] - (1.0 + std::polar(1.0, t))) < 1e-14);
        }
        CHECK(ho::hardy_membership(onez, 1e-10));
    }

    TEST_CASE("too many coefficients for the grid")
    {
        CHECK_THROWS_AS(ho::circle_restriction(AnalyticFunction::monomial(16), 1.0, 32), ho::DomainError);
    }
}

TEST_SUITE("hardy.norms")
{
    TEST_CASE("hphi norm examples")
    {
        const int n = 256;
        CHECK(std::abs(ho::hphi_norm(AnalyticFunction::constant(3.0), G::power(1.5), n).value() - 3.0) < 1e-12);
        CHECK(std::abs(ho::hphi_norm(AnalyticFunction::monomial(1), G::power(2.0), n).value() - 1.0) < 1e-12);
        const ho::RadialReport r = ho::hphi_norm(AnalyticFunction({1.0, 1.0}), G::power(2.0), n);
        CHECK(std::abs(r.value() - std::sqrt(2.0)) < 1e-12);
        CHECK(r.radii.size() == 5);
        CHECK(r.radii.back() == 1.0);
        CHECK(r.converged);
        CHECK(r.norms.back() == r.boundary_norm);
        CHECK(r.boundary_norm >= r.norms[2]);
    }

    TEST_CASE("radial norms of random polynomials are nondecreasing")
    {
        std::mt19937_64 rng(11);
        std::normal_distribution<double> d;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<cplx> a(8);
            for (auto& v : a) v = {d(rng), d(rng)};
            for (const G& f : {G::power(0.5), G::power(1.0), G::power(2.0), G::exp_minus_one()}) {
                const ho::RadialReport r = ho::hphi_norm(AnalyticFunction(a), f, 512);
                for (size_t i = 1; i < r.norms.size(); ++i) CHECK(r.norms[i] >= r.norms[i - 1] * (1.0 - 1e-9));
            }
        }
    }

    TEST_CASE("nontangential maximal function examples")
    {
        const int n = 128;
        const BoundaryFunction two = ho::nontangential_max(AnalyticFunction::constant(2.0), 1.0, n);
        for (const cplx& v : two.samples()) {
            CHECK(std::abs(v - 2.0) < 1e-12);
        }
        const BoundaryFunction zs = ho::nontangential_max(AnalyticFunction::monomial(1), 1.0, n);
        for (const cplx& v : zs.samples()) {
            CHECK(v.real() <= 1.0 + 1e-12);
        }
        const AnalyticFunction g({1.0, cplx(0.0, 2.0), -0.5, 0.25});
        const BoundaryFunction star = ho::nontangential_max(g, 1.0, n);
        for (double r : {0.0, 0.25, 0.5, 0.75, 0.9, 0.99}) {
            const std::vector<double> radial = ho::circle_restriction(g, r, n).magnitudes();
            for (int j = 0; j < n; ++j) CHECK(star.samples()[static_cast<size_t>(j)].real() >= radial[static_cast<size_t>(j)] - 1e-12);
        }
        CHECK_THROWS_AS(ho::nontangential_max(g, 0.0, n), ho::DomainError);
    }

    TEST_CASE("radial convergence of monomials")
    {
        const int n = 4096;
        const ho::RadialReport c = ho::radial_convergence_report(AnalyticFunction::constant(2.0), G::power(2.0), n);
        for (double v : c.norms) CHECK(v < 1e-14);
        for (int k = 1; k <= 4; ++k) {
            const ho::RadialReport r = ho::radial_convergence_report(AnalyticFunction::monomial(k), G::power(2.0), n);
            CHECK(r.converged);
            for (size_t i = 0; i < r.radii.size(); ++i) CHECK(std::abs(r.norms[i] - (1.0 - std::pow(r.radii[i], k))) < 1e-9);
        }
    }

    TEST_CASE("radial convergence warns without an upper type")
    {
        const ho::RadialReport r = ho::radial_convergence_report(AnalyticFunction::monomial(1), G::exp_minus_one(), 256);
        CHECK_FALSE(r.warnings.empty());
        CHECK(r.norms.size() == 4);
    }
}

TEST_SUITE("hardy.szego_pairing")
{
    TEST_CASE("szego examples")
    {
        const int n = 64;
        std::vector<cplx> s;
        for (double t : ho::circle_angles(n)) s.push_back(std::polar(1.0, -t));
        CHECK(std::abs(ho::szego_project(BoundaryFunction::from_samples(s)).coefficient(0)) < 1e-14);
        CHECK(ho::szego_project(BoundaryFunction::from_samples(s)).size() == 1);
        const AnalyticFunction five = ho::szego_project(BoundaryFunction::constant(5.0, n));
        CHECK(std::abs(five.coefficient(0) - 5.0) < 1e-14);
        CHECK(five.size() == 1);
        std::vector<double> c;
        for (double t : ho::circle_angles(n)) c.push_back(2.0 * std::cos(t));
        const AnalyticFunction z = ho::szego_project(BoundaryFunction::from_real_samples(c));
        CHECK(std::abs(z.coefficient(0)) < 1e-14);
        CHECK(std::abs(z.coefficient(1) - 1.0) < 1e-14);
    }

    TEST_CASE("pairing examples")
    {
        const AnalyticFunction z = AnalyticFunction::monomial(1);
        const AnalyticFunction one = AnalyticFunction::constant(1.0);
        const AnalyticFunction onez({1.0, 1.0});
        CHECK(std::abs(ho::pairing(z, z) - 1.0) < 1e-15);
        CHECK(std::abs(ho::pairing(one, z)) < 1e-15);
        CHECK(std::abs(ho::pairing(onez, onez) - 2.0) < 1e-15);
    }

    TEST_CASE("pairing is the boundary integral")
    {
        const AnalyticFunction f({1.0, cplx(0.0, 1.0), 0.5});
        const AnalyticFunction g({cplx(2.0, -1.0), 0.0, 0.25, 1.0});
        const double re = oracle::circle_mean([&](double t) { return (f.eval(std::polar(1.0, t)) * std::conj(g.eval(std::polar(1.0, t)))).real(); });
        const double im = oracle::circle_mean([&](double t) { return (f.eval(std::polar(1.0, t)) * std::conj(g.eval(std::polar(1.0, t)))).imag(); });
        CHECK(std::abs(ho::pairing(f, g) - cplx(re, im)) < 1e-10);
    }
}

TEST_SUITE("hardy.bmoa")
{
    TEST_CASE("bmoa examples")
    {
        const int n = 64;
        const ho::Weight one = ho::weight_rho(G::power(1.0));
        CHECK(ho::bmoa_rho_norm(AnalyticFunction::constant(3.0), one, n) < 1e-12);
        const AnalyticFunction g({0.0, 1.0, 0.5});
        CHECK(std::abs(ho::bmoa_rho_norm(g, one, n) - ho::bmoa_rho_norm(g + AnalyticFunction::constant(5.0), one, n)) < 1e-12);

        std::vector<cplx> s;
        for (double t : ho::circle_angles(n)) s.push_back(std::polar(1.0, t));
        const double brute = oracle::bmo_dyadic_all_starts(s, [](double) { return 1.0; });
        CHECK(std::abs(ho::bmoa_rho_norm(AnalyticFunction::monomial(1), one, n) - brute) < 1e-12);
    }

    TEST_CASE("profile is nondecreasing in the radius")
    {
        const ho::Weight rho = ho::weight_ratio(G::power(1.0), G::power(2.0));
        const std::vector<double> p = ho::bmoa_rho_profile(AnalyticFunction({0.0, 1.0, cplx(0.0, 0.5), 0.25}), rho, 1024);
        for (size_t i = 1; i < p.size(); ++i) CHECK(p[i] >= p[i - 1] * (1.0 - 1e-9));
    }
}
