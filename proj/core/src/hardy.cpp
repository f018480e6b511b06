#include "ho/hardy.hpp"

#include "ho/errors.hpp"
#include "fft.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ho {

AnalyticFunction::AnalyticFunction(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    for (const cplx& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw DomainError("Taylor coefficients must be finite");
        }
    }
}

AnalyticFunction AnalyticFunction::monomial(int k, cplx c)
{
    if (k < 0) throw DomainError("monomial degree must be nonnegative");
    std::vector<cplx> a(static_cast<size_t>(k) + 1);
    a.back() = c;
    return AnalyticFunction(std::move(a));
}

cplx AnalyticFunction::coefficient(int k) const
{
    return k >= 0 && k < size() ? coeffs_[static_cast<size_t>(k)] : cplx{};
}

cplx AnalyticFunction::eval(cplx z) const
{
    cplx acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

AnalyticFunction AnalyticFunction::operator+(const AnalyticFunction& other) const
{
    std::vector<cplx> a(std::max(coeffs_.size(), other.coeffs_.size()));
    for (size_t k = 0; k < a.size(); ++k) a[k] = coefficient(static_cast<int>(k)) + other.coefficient(static_cast<int>(k));
    return AnalyticFunction(std::move(a));
}

AnalyticFunction AnalyticFunction::operator-(const AnalyticFunction& other) const
{
    return *this + other * cplx{-1.0};
}

AnalyticFunction AnalyticFunction::operator*(cplx c) const
{
    std::vector<cplx> a(coeffs_);
    for (auto& v : a) v *= c;
    return AnalyticFunction(std::move(a));
}

AnalyticFunction AnalyticFunction::multiply(const AnalyticFunction& other, int max_size) const
{
    size_t out = coeffs_.size() + other.coeffs_.size() - 1;
    if (max_size > 0) out = std::min(out, static_cast<size_t>(max_size));
    std::vector<cplx> a(out);
    for (size_t i = 0; i < coeffs_.size() && i < out; ++i) {
        if (coeffs_[i] == cplx{}) continue;
        const size_t limit = std::min(other.coeffs_.size(), out - i);
        for (size_t j = 0; j < limit; ++j) a[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return AnalyticFunction(std::move(a));
}

AnalyticFunction AnalyticFunction::truncated(int max_size) const
{
    std::vector<cplx> a(coeffs_.begin(), coeffs_.begin() + std::min<long>(std::max(max_size, 1), size()));
    return AnalyticFunction(std::move(a));
}

AnalyticFunction AnalyticFunction::trimmed(double rel) const
{
    double top = 0.0;
    for (const cplx& c : coeffs_) top = std::max(top, std::abs(c));
    size_t keep = coeffs_.size();
    while (keep > 1 && std::abs(coeffs_[keep - 1]) <= rel * top) --keep;
    return AnalyticFunction(std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(keep)));
}

// ---------------------------------------------------------------------------

BoundaryFunction circle_restriction(const AnalyticFunction& g, double r, int n)
{
    if (!(r >= 0.0) || r > 1.0) throw DomainError("circle_restriction: radius must lie in [0, 1]");
    if (g.size() > n / 2) {
        throw DomainError("circle_restriction: " + std::to_string(g.size()) +
                          " coefficients do not fit below the Nyquist mode of a " + std::to_string(n) +
                          "-point grid");
    }
    std::vector<cplx> c(static_cast<size_t>(n));
    double rk = 1.0;
    for (int k = 0; k < g.size(); ++k) {
        c[static_cast<size_t>(k)] = g.coefficient(k) * rk;
        rk *= r;
    }
    return BoundaryFunction::from_coefficients(std::move(c));
}

std::vector<double> radial_sample_radii(int n)
{
    std::vector<double> r{0.5, 0.9, 0.99, resolution_radius(n)};
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    r.erase(std::remove_if(r.begin(), r.end(), [](double v) { return v < 0.0; }), r.end());
    return r;
}

namespace {

bool nondecreasing(const std::vector<double>& v, double slack)
{
    for (size_t i = 1; i < v.size(); ++i) {
        if (v[i] < v[i - 1] * (1.0 - slack)) return false;
    }
    return true;
}

}  // namespace

RadialReport hphi_norm(const AnalyticFunction& g, const GrowthFunction& f, int n)
{
    RadialReport report;
    report.radii = radial_sample_radii(n);
    report.radii.push_back(1.0);
    for (double r : report.radii) {
        NormReport nr = luxemburg_norm(circle_restriction(g, r, n), f);
        report.norms.push_back(nr.value);
        for (auto& w : nr.warnings) report.warnings.push_back(std::move(w));
    }
    report.boundary_norm = report.norms.back();
    report.converged = nondecreasing(report.norms, 1e-9);
    if (!report.converged) report.warnings.push_back("hphi_norm: radial norms not monotone within 1e-9");
    return report;
}

double hphi_boundary_norm(const AnalyticFunction& g, const GrowthFunction& f, int n)
{
    return luxemburg_norm(circle_restriction(g, 1.0, n), f).value;
}

BoundaryFunction nontangential_max(const AnalyticFunction& g, double alpha, int n)
{
    if (!(alpha > 0.0)) throw DomainError("nontangential_max: aperture must be positive");
    if (g.size() > n / 2) throw DomainError("nontangential_max: too many coefficients for the grid");
    static constexpr double kRadii[] = {0.0, 0.25, 0.5, 0.75, 0.9, 0.99};
    static constexpr double kOffsets[] = {-0.9, -0.45, 0.0, 0.45, 0.9};

    std::vector<double> best = circle_restriction(g, 1.0, n).magnitudes();
    std::vector<cplx> c(static_cast<size_t>(n));
    for (double r : kRadii) {
        // |e^{i phi} - 1| = 2 sin(|phi|/2) < alpha (1 - r) for |phi| < phi_max.
        const double phi_max = 2.0 * std::asin(std::min(1.0, alpha * (1.0 - r) / 2.0));
        for (double frac : kOffsets) {
            if (r == 0.0 && frac != 0.0) continue;
            const cplx step = std::polar(r, frac * phi_max);
            cplx w = 1.0;
            std::fill(c.begin(), c.end(), cplx{});
            for (int k = 0; k < g.size(); ++k) {
                c[static_cast<size_t>(k)] = g.coefficient(k) * w;
                w *= step;
            }
            const std::vector<cplx> values = detail::fft_backward(c);
            for (int j = 0; j < n; ++j) best[static_cast<size_t>(j)] = std::max(best[static_cast<size_t>(j)], std::abs(values[static_cast<size_t>(j)]));
        }
    }
    return BoundaryFunction::from_real_samples(best);
}

RadialReport radial_convergence_report(const AnalyticFunction& g, const GrowthFunction& f, int n)
{
    RadialReport report;
    const TypeEstimate types = estimate_types(f);
    if (!types.lower_exponent || !types.upper_exponent) {
        report.warnings.push_back("radial_convergence_report: " + f.describe() +
                                  " is not of both lower and upper type; hypotheses not met");
    }
    const BoundaryFunction boundary = circle_restriction(g, 1.0, n);
    report.boundary_norm = luxemburg_norm(boundary, f).value;
    report.radii = radial_sample_radii(n);
    for (double r : report.radii) {
        report.norms.push_back(luxemburg_norm(circle_restriction(g, r, n).minus(boundary), f).value);
    }
    report.converged = true;
    for (size_t i = 1; i < report.norms.size(); ++i) {
        if (report.norms[i] > report.norms[i - 1] * (1.0 + 1e-9)) report.converged = false;
    }
    return report;
}

AnalyticFunction szego_project(const BoundaryFunction& g)
{
    const auto c = g.coefficients();
    double top = 0.0;
    for (const cplx& v : c) top = std::max(top, std::abs(v));
    // Round-off tails are judged against the full spectrum, so an
    // anti-analytic input collapses to the zero function.
    std::vector<cplx> a(c.begin(), c.begin() + g.size() / 2);
    size_t keep = a.size();
    while (keep > 1 && std::abs(a[keep - 1]) <= 1e-15 * top) --keep;
    a.resize(keep);
    return AnalyticFunction(std::move(a));
}

cplx pairing(const AnalyticFunction& f, const AnalyticFunction& g)
{
    cplx sum = 0.0;
    const int m = std::min(f.size(), g.size());
    for (int k = 0; k < m; ++k) sum += f.coefficient(k) * std::conj(g.coefficient(k));
    return sum;
}

std::vector<double> bmoa_radii(int n)
{
    std::vector<double> r{0.9, 0.99, resolution_radius(n), 1.0};
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    r.erase(std::remove_if(r.begin(), r.end(), [](double v) { return v < 0.0; }), r.end());
    return r;
}

std::vector<double> bmoa_rho_profile(const AnalyticFunction& g, const Weight& rho, int n)
{
    std::vector<double> out;
    for (double r : bmoa_radii(n)) out.push_back(bmo_rho_norm(circle_restriction(g, r, n), rho));
    return out;
}

double bmoa_rho_norm(const AnalyticFunction& g, const Weight& rho, int n)
{
    const std::vector<double> profile = bmoa_rho_profile(g, rho, n);
    return *std::max_element(profile.begin(), profile.end());
}

}  // namespace ho
