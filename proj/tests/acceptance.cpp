// Acceptance run: one line per criterion with the measured worst case, the
// tolerance, and the wall time against its budget. Exit status is nonzero
// when any criterion fails.

#include "ho/circle.hpp"
#include "ho/factor.hpp"
#include "ho/grid.hpp"
#include "ho/growth.hpp"
#include "ho/hankel.hpp"
#include "ho/hardy.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ho;
using G = GrowthFunction;

namespace {

constexpr int kN = 4096;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what, double measured, double limit)
    {
        detail << (detail.tellp() > 0 ? "; " : "") << what << " " << measured << (cond ? " <= " : " > ") << limit;
        ok = ok && cond;
    }
};

int g_failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail << " exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= budget_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++g_failures;
    std::printf("criterion %d %s: %s [%.2fs / %.0fs] %s\n", id, title.c_str(), pass ? "PASS" : "FAIL", secs, budget_s,
                o.detail.str().c_str());
    std::fflush(stdout);
}

struct Product {
    AnalyticFunction g;
    ZeroList zeros;
};

// G = B * O with up to four zeros in |z| <= 0.9 and an outer polynomial
// prod (1 - z/a) with |a| in [1.5, 3].
std::vector<Product> test_family(std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Product> out;
    for (int i = 0; i < count; ++i) {
        Product p;
        const int nz = static_cast<int>(u(rng) * 5.0);
        for (int k = 0; k < nz; ++k) p.zeros.zeros.push_back(std::polar(0.9 * std::sqrt(u(rng)), 2.0 * M_PI * u(rng)));
        AnalyticFunction outer = AnalyticFunction::constant(1.0);
        const int nf = 1 + static_cast<int>(u(rng) * 3.0);
        for (int k = 0; k < nf; ++k) {
            const cplx a = std::polar(1.5 + 1.5 * u(rng), 2.0 * M_PI * u(rng));
            outer = outer.multiply(AnalyticFunction({1.0, -1.0 / a}));
        }
        p.g = blaschke_series(p.zeros, kN / 2).multiply(outer, kN / 2);
        out.push_back(std::move(p));
    }
    return out;
}

const std::vector<G>& phi_family()
{
    static const std::vector<G> f{G::power(0.5), G::power(1.0), G::power(2.0), G::exp_minus_one()};
    return f;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

int main()
{
    const std::vector<Product> family = test_family(2024, 10);

    criterion(1, "Riesz division norm equality", 5.0, [&](Outcome& o) {
        double worst = 0.0;
        for (const Product& p : family) {
            for (const G& f : phi_family()) {
                const FactorizationReport r = divide_by_blaschke(p.g, p.zeros, f, kN);
                worst = std::max(worst, std::abs(r.identity("norm(G/B) = norm(G)").ratio - 1.0));
            }
        }
        o.expect(worst <= 1e-6, "max |ratio-1|", worst, 1e-6);
    });

    criterion(2, "inner-outer norm equality and unimodular inner factor", 5.0, [&](Outcome& o) {
        double ratio = 0.0, unimodular = 0.0;
        for (const Product& p : family) {
            for (const G& f : phi_family()) {
                const FactorizationReport r = inner_outer(p.g, p.zeros, {}, f, kN);
                ratio = std::max(ratio, std::abs(r.identity("norm(O) = norm(G)").ratio - 1.0));
                unimodular = std::max(unimodular, r.diagnostic("inner_unimodularity"));
            }
        }
        o.expect(ratio <= 1e-6, "max |ratio-1|", ratio, 1e-6);
        o.expect(unimodular <= 1e-6, "max ||I|-1|", unimodular, 1e-6);
    });

    criterion(3, "strong factorization chain", 10.0, [&](Outcome& o) {
        struct Triple {
            G f1, f2, f3;
        };
        const std::vector<Triple> triples{{G::power(2.0), G::power(2.0), G::power(1.0)},
                                          {G::power(2.0), G::power(3.0), G::power(1.2)}};
        double pointwise = 0.0, recon = 0.0, product = 0.0, reverse = 0.0;
        for (const Triple& t : triples) {
            for (const Product& p : family) {
                const FactorizationReport r = strong_factorize(p.g, p.zeros, {}, t.f1, t.f2, t.f3, kN);
                pointwise = std::max(pointwise, r.diagnostic("pointwise_residual"));
                recon = std::max(recon, r.reconstruction_residual);
                product = std::max(product, r.identity("norm(G1) norm(G2) <= norm(G)").ratio);
                const double ng = r.diagnostic("norm_G");
                reverse = std::max(reverse, ng / (r.diagnostic("norm_G1") * r.diagnostic("norm_G2")));
            }
        }
        o.expect(pointwise <= 1e-8, "|g|=g1g2 rel", pointwise, 1e-8);
        o.expect(recon <= 1e-6, "G1G2=G rel", recon, 1e-6);
        o.expect(product <= 1.0 + 1e-6, "norm(G1)norm(G2)/norm(G)", product, 1.0 + 1e-6);
        o.expect(reverse <= 4.0, "norm(G)/(norm(G1)norm(G2))", reverse, 4.0);
    });

    criterion(4, "growth calculus", 2.0, [&](Outcome& o) {
        const G phi = G::power(2.0);
        const G psi = complementary(phi);
        double young = 0.0;
        const auto grid32 = log_grid(1e-3, 1e3, 32);
        for (double s : grid32)
            for (double t : grid32) young = std::max(young, s * t - phi.eval(t) - psi.eval(s) - 1e-9 * (1.0 + s * t));
        o.expect(young <= 0.0, "Young excess", young, 0.0);

        int bad = 0;
        for (double t : log_grid(1e-3, 1e3, 64)) {
            const double prod = phi.inverse(t) * psi.inverse(t);
            if (!(prod > t) || prod > 2.0 * t * (1.0 + 1e-6)) ++bad;
        }
        o.expect(bad == 0, "property (i) violations", bad, 0);

        const DoublingResult p2 = check_doubling(G::power(2.0));
        const int classify = (p2.delta2 && p2.nabla2 ? 0 : 1) + (check_doubling(G::power(1.0)).nabla2 ? 1 : 0) +
                             (check_doubling(G::exp_minus_one()).delta2 ? 1 : 0);
        o.expect(classify == 0, "doubling misclassifications", classify, 0);

        double ident = 0.0;
        const G prod = product_inverse_compose(G::power(2.0), G::power(3.0));
        const G ratio = ratio_inverse_compose(G::power(4.0), G::power(2.0));
        for (double t : log_grid(1e-6, 1e6, 64)) {
            ident = std::max(ident, rel(prod.inverse(t), std::sqrt(t) * std::cbrt(t)));
            ident = std::max(ident, rel(ratio.inverse(t), std::sqrt(t) / std::pow(t, 0.25)));
            ident = std::max(ident, rel(prod.eval(t), std::pow(t, 1.2)));
            ident = std::max(ident, rel(ratio.eval(t), std::pow(t, 4.0)));
        }
        o.expect(ident <= 1e-6, "composition rel error", ident, 1e-6);
    });

    criterion(5, "spectral identities", 2.0, [&](Outcome& o) {
        std::mt19937_64 rng(5);
        std::normal_distribution<double> d;
        const auto angles = circle_angles(kN);
        double hilbert = 0.0;
        for (int k = 1; k < 200; k += 7) {
            std::vector<double> c, s;
            for (double t : angles) {
                c.push_back(std::cos(k * t));
                s.push_back(std::sin(k * t));
            }
            const BoundaryFunction h = hilbert_transform(BoundaryFunction::from_real_samples(c));
            for (int j = 0; j < kN; ++j) hilbert = std::max(hilbert, std::abs(h.samples()[static_cast<size_t>(j)] - s[static_cast<size_t>(j)]));
        }
        o.expect(hilbert <= 1e-12, "H(cos)-sin", hilbert, 1e-12);

        double involution = 0.0, idem = 0.0, parseval = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::pair<int, cplx>> modes;
            for (int k = 1; k <= 10; ++k) {
                const cplx c(d(rng), d(rng));
                modes.emplace_back(k, c);
                modes.emplace_back(-k, std::conj(c));
            }
            const BoundaryFunction u = BoundaryFunction::from_modes(modes, kN);
            const BoundaryFunction hh = hilbert_transform(hilbert_transform(u));
            for (int j = 0; j < kN; ++j) involution = std::max(involution, std::abs(hh.samples()[static_cast<size_t>(j)] + u.samples()[static_cast<size_t>(j)]));

            std::vector<std::pair<int, cplx>> any;
            for (int k = -12; k <= 12; ++k) any.emplace_back(k, cplx(d(rng), d(rng)));
            const AnalyticFunction p = szego_project(BoundaryFunction::from_modes(any, kN));
            const AnalyticFunction pp = szego_project(circle_restriction(p, 1.0, kN));
            for (int k = 0; k < std::max(p.size(), pp.size()); ++k) idem = std::max(idem, std::abs(p.coefficient(k) - pp.coefficient(k)));

            std::vector<cplx> fa(8), ga(6);
            for (auto& v : fa) v = {d(rng), d(rng)};
            for (auto& v : ga) v = {d(rng), d(rng)};
            const AnalyticFunction f(fa), g(ga);
            const cplx integral = circle_restriction(f, 1.0, kN).times(circle_restriction(g, 1.0, kN).conj()).mean();
            cplx direct = 0.0;
            for (size_t k = 0; k < ga.size(); ++k) direct += fa[k] * std::conj(ga[k]);
            parseval = std::max({parseval, std::abs(pairing(f, g) - integral), std::abs(pairing(f, g) - direct)});
        }
        o.expect(involution <= 1e-10, "HH+I", involution, 1e-10);
        o.expect(idem <= 1e-12, "Szego idempotence", idem, 1e-12);
        o.expect(parseval <= 1e-10, "pairing vs Parseval", parseval, 1e-10);
    });

    criterion(6, "Hankel consistency", 5.0, [&](Outcome& o) {
        std::mt19937_64 rng(6);
        std::normal_distribution<double> d;
        double agree = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<cplx> ba(1 + trial % 12), gb(1 + trial % 9);
            for (auto& v : ba) v = {d(rng), d(rng)};
            for (auto& v : gb) v = {d(rng), d(rng)};
            const AnalyticFunction b(ba), g(gb);
            const int m = std::max(b.size(), g.size());
            const std::vector<cplx> mv = hankel_matrix(b, m).apply_conjugate(g.coefficients());
            const AnalyticFunction h = hankel_apply(b, g, kN);
            for (int k = 0; k < m; ++k) agree = std::max(agree, std::abs(mv[static_cast<size_t>(k)] - h.coefficient(k)));
        }
        o.expect(agree <= 1e-10, "matrix vs apply", agree, 1e-10);

        Dictionary dict;
        dict.degree = 16;
        const HankelReport z = hankel_norm_estimate(AnalyticFunction::monomial(1), G::power(2.0), G::power(2.0), dict, 7, kN);
        const double svd16 = hankel_matrix(AnalyticFunction::monomial(1), 16).largest_singular_value();
        o.expect(std::abs(svd16 - 1.0) <= 1e-12, "|SVD(M=16)-1|", std::abs(svd16 - 1.0), 1e-12);
        o.expect(z.operator_estimate >= 0.5, "0.5 / estimate", 0.5 / std::max(z.operator_estimate, 1e-300), 1.0);
    });

    std::vector<Symbol> monomials;
    for (int j = 1; j <= 6; ++j) monomials.push_back({"z^" + std::to_string(j), AnalyticFunction::monomial(j)});

    criterion(7, "loss band", 30.0, [&](Outcome& o) {
        const ExperimentResult r = loss_experiment(monomials, G::power(4.0), G::power(2.0), {}, 7, kN);
        o.expect(r.band_ratio <= 10.0, "c2/c1", r.band_ratio, 10.0);
    });

    criterion(8, "gain band and BMOA slope", 30.0, [&](Outcome& o) {
        const ExperimentResult r = gain_experiment(monomials, G::power(2.0), G::power(2.0), {}, 7, kN);
        o.expect(r.band_ratio <= 10.0, "c2/c1", r.band_ratio, 10.0);

        const Weight rho = weight_ratio(G::power(1.0), G::power(2.0));
        std::vector<double> x, y;
        for (int j = 1; j <= 5; ++j) {
            x.push_back(std::log(std::pow(2.0, j)));
            y.push_back(std::log(bmoa_rho_norm(AnalyticFunction::monomial(1 << j), rho, kN)));
        }
        const double mx = (x[0] + x[1] + x[2] + x[3] + x[4]) / 5.0, my = (y[0] + y[1] + y[2] + y[3] + y[4]) / 5.0;
        double sxy = 0.0, sxx = 0.0;
        for (size_t i = 0; i < x.size(); ++i) {
            sxy += (x[i] - mx) * (y[i] - my);
            sxx += (x[i] - mx) * (x[i] - mx);
        }
        const double slope = sxy / sxx;
        o.expect(std::abs(slope - 0.5) <= 0.15, "|slope-0.5|", std::abs(slope - 0.5), 0.15);
    });

    criterion(9, "radial convergence of z^k", 1.0, [&](Outcome& o) {
        double worst = 0.0;
        for (int k = 1; k <= 8; ++k) {
            const RadialReport r = radial_convergence_report(AnalyticFunction::monomial(k), G::power(2.0), kN);
            for (size_t i = 0; i < r.radii.size(); ++i) worst = std::max(worst, std::abs(r.norms[i] - (1.0 - std::pow(r.radii[i], k))));
        }
        o.expect(worst <= 1e-9, "max |norm-(1-r^k)|", worst, 1e-9);
    });

    std::printf("%s: %d of 9 criteria failed\n", g_failures == 0 ? "ACCEPTED" : "REJECTED", g_failures);
    return g_failures == 0 ? 0 : 1;
}
