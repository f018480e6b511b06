#include "ho/factor.hpp"

#include "ho/errors.hpp"
#include "ho/grid.hpp"
#include "fft.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ho {

namespace {

constexpr double kMaxZeroModulus = 1.0 - 1e-6;

std::string fmt(cplx z)
{
    return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

double max_abs(std::span<const cplx> v)
{
    double m = 0.0;
    for (const cplx& x : v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b)
{
    double m = 0.0;
    for (size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

NormIdentity identity(std::string name, double lhs, double rhs)
{
    const double ratio = rhs != 0.0 ? lhs / rhs : (lhs == 0.0 ? 1.0 : std::numeric_limits<double>::infinity());
    return {std::move(name), lhs, rhs, ratio};
}

// Unimodular c minimising max |c a - b| in the least-squares sense.
cplx best_phase(std::span<const cplx> a, std::span<const cplx> b)
{
    cplx s = 0.0;
    for (size_t j = 0; j < a.size(); ++j) s += b[j] * std::conj(a[j]);
    return std::abs(s) > 0.0 ? s / std::abs(s) : cplx{1.0};
}

// Angular distance from theta to the nearest atom.
double distance_to_atoms(const AtomicMeasure& sigma, double theta)
{
    double d = M_PI;
    for (const Atom& a : sigma.atoms) {
        const double raw = std::fmod(std::abs(theta - a.angle), 2.0 * M_PI);
        d = std::min(d, std::min(raw, 2.0 * M_PI - raw));
    }
    return d;
}

std::vector<cplx> circle_points(double r, int n)
{
    std::vector<cplx> z(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) z[static_cast<size_t>(j)] = std::polar(r, 2.0 * M_PI * j / n);
    return z;
}

}  // namespace

void ZeroList::validate() const
{
    for (const cplx& z : zeros) {
        if (!(std::abs(z) <= kMaxZeroModulus)) {
            throw DomainError("invalid zero " + fmt(z) + ": |z_n| must not exceed 1 - 1e-6");
        }
    }
}

void AtomicMeasure::validate() const
{
    for (const Atom& a : atoms) {
        if (!(a.mass > 0.0) || !std::isfinite(a.mass)) throw DomainError("atom masses must be positive and finite");
        if (!(a.angle >= 0.0 && a.angle < 2.0 * M_PI)) throw DomainError("atom angles must lie in [0, 2pi)");
    }
}

const AnalyticFunction& FactorizationReport::factor(const std::string& name) const
{
    for (const auto& [key, value] : factors) {
        if (key == name) return value;
    }
    throw DomainError("report has no factor named " + name);
}

double FactorizationReport::diagnostic(const std::string& name) const
{
    for (const auto& [key, value] : diagnostics) {
        if (key == name) return value;
    }
    throw DomainError("report has no diagnostic named " + name);
}

const NormIdentity& FactorizationReport::identity(const std::string& name) const
{
    for (const auto& id : norm_identities) {
        if (id.name == name) return id;
    }
    throw DomainError("report has no norm identity named " + name);
}

// ---------------------------------------------------------------------------

cplx blaschke(const ZeroList& zeros, cplx z)
{
    zeros.validate();
    if (std::abs(z) > 1.0 + 1e-12) throw DomainError("blaschke: |z| must not exceed 1");
    cplx b = 1.0;
    for (const cplx& zn : zeros.zeros) {
        if (zn == cplx{}) {
            b *= z;
        } else {
            b *= (std::abs(zn) / zn) * (zn - z) / (1.0 - std::conj(zn) * z);
        }
    }
    return b;
}

BoundaryFunction blaschke_boundary(const ZeroList& zeros, int n)
{
    std::vector<cplx> s;
    s.reserve(static_cast<size_t>(n));
    for (const cplx& z : circle_points(1.0, n)) s.push_back(blaschke(zeros, z));
    return BoundaryFunction::from_samples(std::move(s));
}

AnalyticFunction blaschke_series(const ZeroList& zeros, int size)
{
    zeros.validate();
    std::vector<cplx> a(static_cast<size_t>(size));
    a[0] = 1.0;
    std::vector<cplx> next(a.size());
    for (const cplx& zn : zeros.zeros) {
        if (zn == cplx{}) {
            std::rotate(a.rbegin(), a.rbegin() + 1, a.rend());
            a[0] = 0.0;
            continue;
        }
        // Multiply by u (zn - z) sum_k (conj(zn) z)^k with u = |zn| / zn:
        // first by 1/(1 - conj(zn) z), a running recurrence, then by u (zn - z).
        const cplx w = std::conj(zn);
        for (size_t k = 1; k < a.size(); ++k) a[k] += w * a[k - 1];
        const cplx u = std::abs(zn) / zn;
        next[0] = u * zn * a[0];
        for (size_t k = 1; k < a.size(); ++k) next[k] = u * (zn * a[k] - a[k - 1]);
        a.swap(next);
    }
    return AnalyticFunction(std::move(a));
}

cplx singular_inner(const AtomicMeasure& sigma, cplx z)
{
    sigma.validate();
    if (!(std::abs(z) < 1.0)) throw DomainError("singular_inner: |z| < 1 required");
    cplx s = 0.0;
    for (const Atom& a : sigma.atoms) {
        const cplx e = std::polar(1.0, a.angle);
        s += a.mass * (e + z) / (e - z);
    }
    return std::exp(-s / (2.0 * M_PI));
}

BoundaryFunction singular_inner_boundary(const AtomicMeasure& sigma, int n)
{
    sigma.validate();
    std::vector<cplx> out;
    out.reserve(static_cast<size_t>(n));
    for (const cplx& z : circle_points(1.0, n)) {
        cplx s = 0.0;
        bool on_atom = false;
        for (const Atom& a : sigma.atoms) {
            const cplx e = std::polar(1.0, a.angle);
            if (std::abs(e - z) < 1e-14) {
                on_atom = true;
                break;
            }
            // Purely imaginary on the circle, so the exponential is unimodular.
            s += a.mass * cplx(0.0, ((e + z) / (e - z)).imag());
        }
        out.push_back(on_atom ? cplx{} : std::exp(-s / (2.0 * M_PI)));
    }
    return BoundaryFunction::from_samples(std::move(out));
}

AnalyticFunction singular_inner_series(const AtomicMeasure& sigma, int size)
{
    sigma.validate();
    AnalyticFunction result = AnalyticFunction::constant(1.0);
    for (const Atom& atom : sigma.atoms) {
        // exp(-c (1+w)/(1-w)) satisfies (1-w)^2 S' = -2c S, giving the recurrence below.
        const double c = atom.mass / (2.0 * M_PI);
        std::vector<cplx> a(static_cast<size_t>(size));
        std::vector<double> b(static_cast<size_t>(size));
        b[0] = std::exp(-c);
        if (size > 1) b[1] = -2.0 * c * b[0];
        for (int k = 1; k + 1 < size; ++k) {
            b[static_cast<size_t>(k) + 1] =
                ((2.0 * k - 2.0 * c) * b[static_cast<size_t>(k)] - (k - 1.0) * b[static_cast<size_t>(k) - 1]) / (k + 1.0);
        }
        for (int k = 0; k < size; ++k) a[static_cast<size_t>(k)] = b[static_cast<size_t>(k)] * std::polar(1.0, -k * atom.angle);
        result = result.multiply(AnalyticFunction(std::move(a)), size);
    }
    return result;
}

// ---------------------------------------------------------------------------

FactorizationReport divide_by_blaschke(const AnalyticFunction& g, const ZeroList& zeros,
                                       const GrowthFunction& f, int n)
{
    zeros.validate();
    const double scale = max_abs(g.coefficients());
    std::vector<cplx> q(g.coefficients().begin(), g.coefficients().end());
    for (const cplx& zn : zeros.zeros) {
        cplx value = 0.0;
        for (auto it = q.rbegin(); it != q.rend(); ++it) value = value * zn + *it;
        if (std::abs(value) > 1e-8 * scale) {
            throw PreconditionError("divide_by_blaschke: G does not vanish at " + fmt(zn) +
                                    " (|G(z_n)| = " + std::to_string(std::abs(value)) + ")");
        }
        if (q.size() == 1) {
            q[0] = 0.0;
            continue;
        }
        if (zn == cplx{}) {
            q.erase(q.begin());
            continue;
        }
        // Backward Horner: G = (z - zn) D + G(zn), stable for |zn| < 1.
        const size_t m = q.size();
        std::vector<cplx> d(m - 1);
        d[m - 2] = q[m - 1];
        for (size_t k = m - 2; k >= 1; --k) d[k - 1] = q[k] + zn * d[k];
        // G / B_n = D (1 - conj(zn) z) (-zn / |zn|).
        const cplx u = -zn / std::abs(zn);
        std::vector<cplx> next(m);
        next[0] = u * d[0];
        for (size_t k = 1; k < m - 1; ++k) next[k] = u * (d[k] - std::conj(zn) * d[k - 1]);
        next[m - 1] = u * (-std::conj(zn) * d[m - 2]);
        q.swap(next);
    }
    const AnalyticFunction quotient(std::move(q));

    FactorizationReport report;
    report.factors.emplace_back("Q", quotient);
    report.factors.emplace_back("B", blaschke_series(zeros, n / 2).trimmed(1e-17));

    const BoundaryFunction gb = circle_restriction(g, 1.0, n);
    const BoundaryFunction qb = circle_restriction(quotient, 1.0, n);
    const BoundaryFunction product = qb.times(blaschke_boundary(zeros, n));
    const double gmax = gb.max_abs();
    report.reconstruction_residual = gmax > 0.0 ? max_abs_diff(product.samples(), gb.samples()) / gmax : 0.0;

    const double norm_q = luxemburg_norm(qb, f).value;
    const double norm_g = luxemburg_norm(gb, f).value;
    report.norm_identities.push_back(identity("norm(G/B) = norm(G)", norm_q, norm_g));
    return report;
}

OuterResult outer_from_modulus(const BoundaryFunction& m)
{
    const int n = m.size();
    OuterResult result;
    const double top = m.max_abs();
    if (!(top > 0.0)) throw DomainError("outer_from_modulus: modulus vanishes identically (log-singularity)");
    if (!m.is_real(1e-9)) throw DomainError("outer_from_modulus: modulus must be real-valued");
    const double floor = 1e-12 * top;

    std::vector<double> logm(static_cast<size_t>(n));
    int clipped = 0;
    for (int j = 0; j < n; ++j) {
        double v = m.samples()[static_cast<size_t>(j)].real();
        if (v < -floor) {
            throw DomainError("outer_from_modulus: negative modulus at sample " + std::to_string(j) +
                              " (log-singularity)");
        }
        if (v < floor) {
            v = floor;
            ++clipped;
        }
        logm[static_cast<size_t>(j)] = std::log(v);
    }
    if (clipped > 0) {
        result.warnings.push_back("outer_from_modulus: " + std::to_string(clipped) +
                                  " samples clipped to 1e-12 * max before taking logarithms");
    }

    // Analytic completion log m + i H(log m): double the positive modes, drop the negative ones.
    const BoundaryFunction log_boundary = BoundaryFunction::from_real_samples(logm);
    std::vector<cplx> c(log_boundary.coefficients().begin(), log_boundary.coefficients().end());
    for (int k = 1; k < n / 2; ++k) c[static_cast<size_t>(k)] *= 2.0;
    for (int k = n / 2 + 1; k < n; ++k) c[static_cast<size_t>(k)] = 0.0;
    std::vector<cplx> h = detail::fft_backward(c);
    for (auto& v : h) v = std::exp(v);
    result.boundary = BoundaryFunction::from_samples(std::move(h));
    result.outer = szego_project(result.boundary);
    return result;
}

FactorizationReport inner_outer(const AnalyticFunction& g, const ZeroList& zeros,
                                const AtomicMeasure& sigma, const GrowthFunction& f, int n)
{
    zeros.validate();
    sigma.validate();
    const BoundaryFunction gb = circle_restriction(g, 1.0, n);
    const BoundaryFunction modulus = BoundaryFunction::from_real_samples(gb.magnitudes());
    OuterResult outer = outer_from_modulus(modulus);
    const BoundaryFunction ob = circle_restriction(outer.outer, 1.0, n);

    FactorizationReport report;
    report.warnings = outer.warnings;

    std::vector<cplx> inner(static_cast<size_t>(n));
    double unimodular = 0.0;
    for (int j = 0; j < n; ++j) {
        const cplx o = ob.samples()[static_cast<size_t>(j)];
        inner[static_cast<size_t>(j)] = gb.samples()[static_cast<size_t>(j)] / o;
        if (distance_to_atoms(sigma, 2.0 * M_PI * j / n) >= 0.1) {
            unimodular = std::max(unimodular, std::abs(std::abs(inner[static_cast<size_t>(j)]) - 1.0));
        }
    }
    const BoundaryFunction ib = BoundaryFunction::from_samples(inner);
    report.factors.emplace_back("O", outer.outer);
    report.factors.emplace_back("I", szego_project(ib));
    report.diagnostics.emplace_back("inner_unimodularity", unimodular);

    // Compare I with B S up to a unimodular constant, on the circle when there
    // is no singular part and on |z| = 0.9 otherwise.
    const double radius = sigma.empty() ? 1.0 : 0.9;
    const std::vector<cplx> pts = circle_points(radius, n);
    std::vector<cplx> i_vals(static_cast<size_t>(n)), bs(static_cast<size_t>(n)), g_vals, o_vals;
    if (sigma.empty()) {
        i_vals.assign(inner.begin(), inner.end());
        const BoundaryFunction bb = blaschke_boundary(zeros, n);
        bs.assign(bb.samples().begin(), bb.samples().end());
        g_vals.assign(gb.samples().begin(), gb.samples().end());
        o_vals.assign(ob.samples().begin(), ob.samples().end());
    } else {
        const BoundaryFunction gr = circle_restriction(g, radius, n);
        const BoundaryFunction orr = circle_restriction(outer.outer, radius, n);
        g_vals.assign(gr.samples().begin(), gr.samples().end());
        o_vals.assign(orr.samples().begin(), orr.samples().end());
        for (int j = 0; j < n; ++j) {
            const size_t s = static_cast<size_t>(j);
            i_vals[s] = g_vals[s] / o_vals[s];
            bs[s] = blaschke(zeros, pts[s]) * singular_inner(sigma, pts[s]);
        }
    }
    const cplx phase = best_phase(bs, i_vals);
    std::vector<cplx> bs_scaled(bs.size()), rebuilt(bs.size());
    for (size_t s = 0; s < bs.size(); ++s) {
        bs_scaled[s] = phase * bs[s];
        rebuilt[s] = bs_scaled[s] * o_vals[s];
    }
    report.diagnostics.emplace_back("inner_mismatch", max_abs_diff(i_vals, bs_scaled));
    report.diagnostics.emplace_back("unimodular_constant_arg", std::arg(phase));
    const double gmax = max_abs(g_vals);
    report.reconstruction_residual = gmax > 0.0 ? max_abs_diff(rebuilt, g_vals) / gmax : 0.0;

    report.norm_identities.push_back(
        identity("norm(O) = norm(G)", luxemburg_norm(ob, f).value, luxemburg_norm(gb, f).value));
    return report;
}

FactorizationReport strong_factorize(const AnalyticFunction& g, const ZeroList& zeros,
                                     const AtomicMeasure& sigma, const GrowthFunction& f1,
                                     const GrowthFunction& f2, const GrowthFunction& f3, int n)
{
    zeros.validate();
    sigma.validate();
    const PositiveFunction inv3 = [&f3](double t) { return f3.inverse(t); };
    const PositiveFunction inv12 = [&f1, &f2](double t) { return f1.inverse(t) * f2.inverse(t); };
    const std::vector<double> grid = equivalence_grid();
    const EquivalenceResult eq = check_equivalent(inv3, inv12, 100.0, grid);
    if (!eq.equivalent) {
        throw PreconditionError("strong_factorize: " + f3.describe() + " inverse is not equivalent to the product of the inverses of " +
                                f1.describe() + " and " + f2.describe() + " (theorem hypothesis)");
    }

    FactorizationReport report;
    report.diagnostics.emplace_back("hypothesis_constant", eq.c);

    const BoundaryFunction gb = circle_restriction(g, 1.0, n);
    const double norm_g = luxemburg_norm(gb, f3).value;
    if (!(norm_g > 0.0)) throw DomainError("strong_factorize: G vanishes identically");

    const std::vector<double> modulus = gb.magnitudes();
    const double phi3_norm = f3.eval(norm_g);
    const double scale1 = f1.inverse(phi3_norm);
    const double scale2 = f2.inverse(phi3_norm);
    std::vector<double> g1(modulus.size()), g2(modulus.size());
    double pointwise = 0.0;
    for (size_t j = 0; j < modulus.size(); ++j) {
        const double y = f3.eval(modulus[j] / norm_g);
        g1[j] = scale1 * f1.inverse(y);
        g2[j] = scale2 * f2.inverse(y);
        const double err = std::abs(g1[j] * g2[j] - modulus[j]);
        pointwise = std::max(pointwise, modulus[j] > 0.0 ? err / modulus[j] : err);
    }
    report.diagnostics.emplace_back("pointwise_residual", pointwise);

    OuterResult o1 = outer_from_modulus(BoundaryFunction::from_real_samples(g1));
    OuterResult o2 = outer_from_modulus(BoundaryFunction::from_real_samples(g2));
    for (auto* w : {&o1.warnings, &o2.warnings}) report.warnings.insert(report.warnings.end(), w->begin(), w->end());

    const int size = n / 2;
    AnalyticFunction inner = blaschke_series(zeros, size);
    if (!sigma.empty()) inner = inner.multiply(singular_inner_series(sigma, size), size);
    AnalyticFunction big_g1 = o1.outer;
    AnalyticFunction big_g2 = inner.multiply(o2.outer, size);

    // Boundary values of G1 and G2 (|S| = 1 a.e., so the singular factor uses its boundary samples).
    const BoundaryFunction g1b = circle_restriction(big_g1, 1.0, n);
    BoundaryFunction g2b = circle_restriction(o2.outer, 1.0, n).times(blaschke_boundary(zeros, n));
    if (!sigma.empty()) g2b = g2b.times(singular_inner_boundary(sigma, n));

    // Absorb the unimodular constant left free by the factorization into G2.
    std::vector<cplx> prod(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) prod[static_cast<size_t>(j)] = g1b.samples()[static_cast<size_t>(j)] * g2b.samples()[static_cast<size_t>(j)];
    const cplx phase = best_phase(prod, gb.samples());
    big_g2 = big_g2 * phase;
    g2b = g2b.scaled(phase);
    report.diagnostics.emplace_back("unimodular_constant_arg", std::arg(phase));

    if (sigma.empty()) {
        for (auto& v : prod) v *= phase;
        const double gmax = gb.max_abs();
        report.reconstruction_residual = max_abs_diff(prod, gb.samples()) / gmax;
    } else {
        const double r = 0.9;
        const BoundaryFunction gr = circle_restriction(g, r, n);
        const BoundaryFunction o1r = circle_restriction(big_g1, r, n);
        const BoundaryFunction o2r = circle_restriction(o2.outer, r, n);
        const std::vector<cplx> pts = circle_points(r, n);
        std::vector<cplx> rebuilt(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            const size_t s = static_cast<size_t>(j);
            rebuilt[s] = phase * o1r.samples()[s] * o2r.samples()[s] * blaschke(zeros, pts[s]) * singular_inner(sigma, pts[s]);
        }
        report.reconstruction_residual = max_abs_diff(rebuilt, gr.samples()) / gr.max_abs();
    }

    const double norm1 = luxemburg_norm(g1b, f1).value;
    const double norm2 = luxemburg_norm(g2b, f2).value;
    report.factors.emplace_back("G1", big_g1);
    report.factors.emplace_back("G2", big_g2.trimmed(1e-17));
    report.norm_identities.push_back(identity("norm(G1) norm(G2) <= norm(G)", norm1 * norm2, norm_g));
    report.diagnostics.emplace_back("norm_G", norm_g);
    report.diagnostics.emplace_back("norm_G1", norm1);
    report.diagnostics.emplace_back("norm_G2", norm2);
    report.diagnostics.emplace_back("reverse_constant", norm_g / (norm1 * norm2));
    return report;
}

}  // namespace ho
