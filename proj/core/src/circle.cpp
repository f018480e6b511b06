#include "ho/circle.hpp"

#include "ho/errors.hpp"
#include "ho/grid.hpp"
#include "fft.hpp"
#include "roots.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

namespace ho {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_grid(size_t n)
{
    if (n < 16 || !is_power_of_two(static_cast<long>(n))) {
        throw DomainError("boundary grid size must be a power of two >= 16, got " + std::to_string(n));
    }
}

std::vector<cplx> coefficients_of(std::span<const cplx> samples)
{
    std::vector<cplx> c = detail::fft_forward(samples);
    const double inv = 1.0 / static_cast<double>(samples.size());
    for (auto& v : c) v *= inv;
    return c;
}

int mode_of_index(int k, int n) { return k < n / 2 ? k : k - n; }

}  // namespace

BoundaryFunction BoundaryFunction::from_samples(std::vector<cplx> samples)
{
    require_grid(samples.size());
    for (const cplx& v : samples) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw DomainError("boundary samples must be finite");
        }
    }
    BoundaryFunction g;
    g.coeffs_ = coefficients_of(samples);
    g.samples_ = std::move(samples);
    return g;
}

BoundaryFunction BoundaryFunction::from_real_samples(std::span<const double> samples)
{
    return from_samples(std::vector<cplx>(samples.begin(), samples.end()));
}

BoundaryFunction BoundaryFunction::from_modes(std::span<const std::pair<int, cplx>> modes, int n)
{
    require_grid(static_cast<size_t>(n));
    std::vector<cplx> coeffs(static_cast<size_t>(n));
    for (const auto& [mode, value] : modes) {
        if (mode < -n / 2 || mode >= n / 2) {
            throw DomainError("Fourier mode " + std::to_string(mode) + " aliases on a grid of " +
                              std::to_string(n) + " samples");
        }
        coeffs[static_cast<size_t>(mode >= 0 ? mode : mode + n)] += value;
    }
    return from_coefficients(std::move(coeffs));
}

BoundaryFunction BoundaryFunction::from_coefficients(std::vector<cplx> coeffs)
{
    require_grid(coeffs.size());
    BoundaryFunction g;
    g.samples_ = detail::fft_backward(coeffs);
    g.coeffs_ = std::move(coeffs);
    return g;
}

BoundaryFunction BoundaryFunction::constant(cplx c, int n)
{
    require_grid(static_cast<size_t>(n));
    BoundaryFunction g;
    g.samples_.assign(static_cast<size_t>(n), c);
    g.coeffs_.assign(static_cast<size_t>(n), cplx{});
    g.coeffs_[0] = c;
    return g;
}

cplx BoundaryFunction::coefficient(int n) const
{
    const int size = this->size();
    if (n <= -size / 2 || n >= size / 2) {
        throw DomainError("Fourier coefficient " + std::to_string(n) + " is aliased on a grid of " +
                          std::to_string(size) + " samples (|n| < N/2 required)");
    }
    return coeffs_[static_cast<size_t>(n >= 0 ? n : n + size)];
}

std::vector<double> BoundaryFunction::magnitudes() const
{
    std::vector<double> out(samples_.size());
    for (size_t j = 0; j < samples_.size(); ++j) out[j] = std::abs(samples_[j]);
    return out;
}

std::vector<double> BoundaryFunction::real_part() const
{
    std::vector<double> out(samples_.size());
    for (size_t j = 0; j < samples_.size(); ++j) out[j] = samples_[j].real();
    return out;
}

bool BoundaryFunction::is_real(double tol) const
{
    const double scale = std::max(1.0, max_abs());
    return std::all_of(samples_.begin(), samples_.end(),
                       [&](const cplx& v) { return std::abs(v.imag()) <= tol * scale; });
}

double BoundaryFunction::max_abs() const
{
    double m = 0.0;
    for (const cplx& v : samples_) m = std::max(m, std::abs(v));
    return m;
}

BoundaryFunction BoundaryFunction::scaled(cplx c) const
{
    BoundaryFunction g = *this;
    for (auto& v : g.samples_) v *= c;
    for (auto& v : g.coeffs_) v *= c;
    return g;
}

BoundaryFunction BoundaryFunction::plus_constant(cplx c) const
{
    BoundaryFunction g = *this;
    for (auto& v : g.samples_) v += c;
    g.coeffs_[0] += c;
    return g;
}

BoundaryFunction BoundaryFunction::rotated(int k) const
{
    const int n = size();
    std::vector<cplx> s(samples_.size());
    for (int j = 0; j < n; ++j) s[static_cast<size_t>(((j + k) % n + n) % n)] = samples_[static_cast<size_t>(j)];
    return from_samples(std::move(s));
}

BoundaryFunction BoundaryFunction::times(const BoundaryFunction& other) const
{
    if (other.size() != size()) throw DomainError("boundary functions on different grids");
    std::vector<cplx> s(samples_.size());
    for (size_t j = 0; j < s.size(); ++j) s[j] = samples_[j] * other.samples_[j];
    return from_samples(std::move(s));
}

BoundaryFunction BoundaryFunction::minus(const BoundaryFunction& other) const
{
    if (other.size() != size()) throw DomainError("boundary functions on different grids");
    std::vector<cplx> s(samples_.size());
    for (size_t j = 0; j < s.size(); ++j) s[j] = samples_[j] - other.samples_[j];
    return from_samples(std::move(s));
}

BoundaryFunction BoundaryFunction::conj() const
{
    std::vector<cplx> s(samples_.size());
    for (size_t j = 0; j < s.size(); ++j) s[j] = std::conj(samples_[j]);
    return from_samples(std::move(s));
}

// ---------------------------------------------------------------------------

NormReport luxemburg_norm(const BoundaryFunction& g, const GrowthFunction& f,
                          const LuxemburgOptions& options)
{
    const std::vector<double> m = g.magnitudes();
    return luxemburg_norm(m, f, options);
}

NormReport luxemburg_norm(std::span<const double> magnitudes, const GrowthFunction& f,
                          const LuxemburgOptions& options)
{
    NormReport report;
    double top = 0.0;
    for (double a : magnitudes) {
        if (!(a >= 0.0) || !std::isfinite(a)) {
            throw DomainError("luxemburg_norm: magnitudes must be finite and nonnegative");
        }
        top = std::max(top, a);
    }
    if (top == 0.0 || magnitudes.empty()) return report;
    const double count = static_cast<double>(magnitudes.size());

    if (options.closed_form && f.kind() == GrowthFunction::Kind::power) {
        // Closed form: lambda = (mean |g|^p)^{1/p}.
        const double p = f.exponent();
        long double sum = 0.0L;
        for (double a : magnitudes) sum += std::pow(static_cast<long double>(a / top), static_cast<long double>(p));
        const double value = top * static_cast<double>(std::pow(sum / count, 1.0L / p));
        report.value = report.lo = report.hi = value;
        return report;
    }

    // An argument above f^{-1}(N) alone pushes the mean above 1.
    double threshold = kInf;
    try {
        threshold = f.inverse(count);
    } catch (const Error&) {
        threshold = kInf;
    }
    auto mean_phi = [&](double x) {
        long double sum = 0.0L;
        for (double a : magnitudes) {
            const double arg = a * x;
            if (arg > threshold) return kInf;
            const double v = f.eval(arg);
            if (!std::isfinite(v)) return kInf;
            sum += v;
        }
        return static_cast<double>(sum / count);
    };

    // mean Phi(|g| x0) <= Phi(max|g| x0) = 1, so x0 bounds the solution from below.
    const double x0 = f.inverse(1.0) / top;
    detail::RootOptions opt;
    opt.start_lo = x0;
    opt.start_hi = 2.0 * x0;
    opt.expansion = 4.0;
    opt.domain_hi = 1e300;
    opt.rel_tol = options.rel_tol;
    opt.max_iter = options.max_iter;
    const detail::RootResult root = detail::solve_increasing(mean_phi, 1.0, opt);
    report.value = 1.0 / root.x;
    report.lo = std::min(1.0 / root.hi, report.value);
    report.hi = std::max(1.0 / root.lo, report.value);
    report.iterations = root.iterations;
    if (report.iterations >= options.max_iter) {
        report.warnings.push_back("luxemburg_norm: iteration cap reached");
    }
    return report;
}

cplx fourier_coefficient(const BoundaryFunction& g, int n) { return g.coefficient(n); }

BoundaryFunction hilbert_transform(const BoundaryFunction& u)
{
    const int n = u.size();
    std::vector<cplx> c(u.coefficients().begin(), u.coefficients().end());
    const cplx minus_i{0.0, -1.0};
    c[0] = 0.0;
    c[static_cast<size_t>(n / 2)] = 0.0;
    for (int k = 1; k < n / 2; ++k) c[static_cast<size_t>(k)] *= minus_i;
    for (int k = n / 2 + 1; k < n; ++k) c[static_cast<size_t>(k)] *= -minus_i;
    return BoundaryFunction::from_coefficients(std::move(c));
}

bool hardy_membership(const BoundaryFunction& g, double tol)
{
    const int n = g.size();
    const auto c = g.coefficients();
    double negative = 0.0;
    double all = 0.0;
    for (int k = 0; k < n; ++k) {
        const double a = std::abs(c[static_cast<size_t>(k)]);
        all = std::max(all, a);
        if (mode_of_index(k, n) < 0) negative = std::max(negative, a);
    }
    return negative <= tol * all;
}

namespace {

// out[i] = max over d in [0, width) of values[(i - d) mod N].
std::vector<double> circular_trailing_max(const std::vector<double>& values, int width)
{
    const int n = static_cast<int>(values.size());
    std::vector<double> out(values.size());
    std::deque<int> window;  // sequence positions with decreasing values
    auto value_at = [&](int s) { return values[static_cast<size_t>(((s % n) + n) % n)]; };
    for (int s = -(width - 1); s < n; ++s) {
        while (!window.empty() && value_at(window.back()) <= value_at(s)) window.pop_back();
        window.push_back(s);
        while (window.front() <= s - width) window.pop_front();
        if (s >= 0) out[static_cast<size_t>(s)] = value_at(window.front());
    }
    return out;
}

}  // namespace

BoundaryFunction maximal_hl(const BoundaryFunction& g)
{
    const int n = g.size();
    const std::vector<double> a = g.magnitudes();
    std::vector<long double> prefix(2 * static_cast<size_t>(n) + 1, 0.0L);
    for (int j = 0; j < 2 * n; ++j) prefix[static_cast<size_t>(j) + 1] = prefix[static_cast<size_t>(j)] + a[static_cast<size_t>(j % n)];

    std::vector<double> best(a);
    std::vector<double> means(static_cast<size_t>(n));
    for (int len = 2; len <= n; len *= 2) {
        for (int j = 0; j < n; ++j) {
            means[static_cast<size_t>(j)] = static_cast<double>((prefix[static_cast<size_t>(j + len)] - prefix[static_cast<size_t>(j)]) / len);
        }
        const std::vector<double> covering = circular_trailing_max(means, len);
        for (int i = 0; i < n; ++i) best[static_cast<size_t>(i)] = std::max(best[static_cast<size_t>(i)], covering[static_cast<size_t>(i)]);
    }
    return BoundaryFunction::from_real_samples(best);
}

double bmo_rho_norm(const BoundaryFunction& g, const Weight& rho)
{
    const int n = g.size();
    const auto s = g.samples();
    std::complex<long double> total = 0.0L;
    for (const cplx& v : s) total += std::complex<long double>(v.real(), v.imag());
    const std::complex<long double> mean = total / static_cast<long double>(n);

    const size_t len2 = 2 * static_cast<size_t>(n) + 1;
    std::vector<std::complex<long double>> p1(len2);
    std::vector<long double> p2(len2, 0.0L);
    for (int j = 0; j < 2 * n; ++j) {
        const std::complex<long double> c =
            std::complex<long double>(s[static_cast<size_t>(j % n)].real(), s[static_cast<size_t>(j % n)].imag()) - mean;
        p1[static_cast<size_t>(j) + 1] = p1[static_cast<size_t>(j)] + c;
        p2[static_cast<size_t>(j) + 1] = p2[static_cast<size_t>(j)] + std::norm(c);
    }

    double best = 0.0;
    for (int len = 2; len <= n; len *= 2) {
        const double arc = 2.0 * M_PI * len / n;
        const double weight = rho(arc);
        if (!(weight > 0.0) || !std::isfinite(weight)) {
            throw NumericalError("bmo_rho_norm: weight is not positive at arc length " + std::to_string(arc));
        }
        const int starts = len == n ? 1 : n;
        long double worst = 0.0L;
        for (int j = 0; j < starts; ++j) {
            const auto m1 = (p1[static_cast<size_t>(j + len)] - p1[static_cast<size_t>(j)]) / static_cast<long double>(len);
            const long double m2 = (p2[static_cast<size_t>(j + len)] - p2[static_cast<size_t>(j)]) / len;
            worst = std::max(worst, m2 - std::norm(m1));
        }
        best = std::max(best, std::sqrt(static_cast<double>(std::max(worst, 0.0L))) / weight);
    }
    return best;
}

namespace {

void require_resolved(double radius, int n)
{
    if (radius > resolution_radius(n) * (1.0 + 1e-14)) {
        throw DomainError("extension point too close to the circle: |z| = " + std::to_string(radius) +
                          " exceeds the resolution limit 1 - 2pi/N = " + std::to_string(resolution_radius(n)));
    }
}

}  // namespace

cplx herglotz_extend(const BoundaryFunction& u, cplx z)
{
    const int n = u.size();
    require_resolved(std::abs(z), n);
    const auto c = u.coefficients();
    cplx sum = c[0];
    cplx zk = 1.0;
    for (int k = 1; k < n / 2; ++k) {
        zk *= z;
        sum += 2.0 * c[static_cast<size_t>(k)] * zk;
    }
    // The Nyquist coefficient stands for cos(N theta / 2); its analytic half.
    sum += c[static_cast<size_t>(n / 2)] * zk * z;
    return sum;
}

cplx poisson_extend(const BoundaryFunction& g, double r, double theta)
{
    const int n = g.size();
    if (r < 0.0) throw DomainError("poisson_extend: negative radius");
    require_resolved(r, n);
    const auto c = g.coefficients();
    const cplx z = std::polar(r, theta);
    const cplx zb = std::conj(z);
    cplx sum = c[0];
    cplx zp = 1.0;
    cplx zm = 1.0;
    for (int k = 1; k < n / 2; ++k) {
        zp *= z;
        zm *= zb;
        sum += c[static_cast<size_t>(k)] * zp + c[static_cast<size_t>(n - k)] * zm;
    }
    zp *= z;
    zm *= zb;
    sum += c[static_cast<size_t>(n / 2)] * 0.5 * (zp + zm);
    return sum;
}

}  // namespace ho
