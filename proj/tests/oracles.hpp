#pragma once

// Reference computations used only by the tests. They are written directly
// from the definitions, without FFTs or the library's solvers, so that they
// can serve as independent checks.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// Plain bisection for an increasing f on [lo, hi].
inline double bisect(const std::function<double(double)>& f, double target, double lo, double hi, int iters = 200)
{
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Trapezoid mean of f over [0, 2 pi) with m points.
inline double circle_mean(const std::function<double(double)>& f, int m = 20000)
{
    long double s = 0.0L;
    for (int j = 0; j < m; ++j) s += f(2.0 * M_PI * j / m);
    return static_cast<double>(s / m);
}

/// Luxemburg norm of samples by bisection on lambda, straight from the definition.
inline double luxemburg(const std::vector<double>& a, const std::function<double(double)>& phi)
{
    auto modular = [&](double lambda) {
        long double s = 0.0L;
        for (double v : a) s += phi(v / lambda);
        return static_cast<double>(s / a.size());
    };
    double hi = 1.0;
    while (modular(hi) > 1.0) hi *= 2.0;
    double lo = hi;
    while (modular(lo) <= 1.0 && lo > 1e-300) lo /= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (modular(mid) > 1.0 ? lo : hi) = mid;
    }
    return hi;
}

/// sup_t {s t - phi(t)} over a dense log grid on [t_lo, t_hi], polished by ternary search.
inline double legendre(const std::function<double(double)>& phi, double s, double t_lo = 1e-6, double t_hi = 1e6,
                       int points = 200000)
{
    const double step = std::log(t_hi / t_lo) / (points - 1);
    double best = 0.0;
    int arg = -1;
    for (int i = 0; i < points; ++i) {
        const double t = t_lo * std::exp(step * i);
        const double v = s * t - phi(t);
        if (v > best) {
            best = v;
            arg = i;
        }
    }
    if (arg < 0) return 0.0;
    double a = t_lo * std::exp(step * std::max(arg - 1, 0));
    double b = t_lo * std::exp(step * std::min(arg + 1, points - 1));
    for (int i = 0; i < 200; ++i) {
        const double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
        (s * m1 - phi(m1) < s * m2 - phi(m2) ? a : b) = (s * m1 - phi(m1) < s * m2 - phi(m2) ? m1 : m2);
    }
    return std::max(best, s * 0.5 * (a + b) - phi(0.5 * (a + b)));
}

/// Direct O(N) DFT coefficient: mean of samples times e^{-i k theta_j}.
inline cplx dft(const std::vector<cplx>& s, int k)
{
    const int n = static_cast<int>(s.size());
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j) acc += s[static_cast<size_t>(j)] * std::polar(1.0, -2.0 * M_PI * k * j / n);
    return acc / static_cast<double>(n);
}

/// sum_k a_k z^k by explicit powers.
inline cplx poly(const std::vector<cplx>& a, cplx z)
{
    cplx acc = 0.0, zk = 1.0;
    for (const cplx& c : a) {
        acc += c * zk;
        zk *= z;
    }
    return acc;
}

/// Oscillation (mean |g - m_I g|^2)^{1/2} over the arc of `len` cells starting at `start`.
inline double arc_oscillation(const std::vector<cplx>& g, int start, int len)
{
    const int n = static_cast<int>(g.size());
    cplx m = 0.0;
    for (int i = 0; i < len; ++i) m += g[static_cast<size_t>((start + i) % n)];
    m /= static_cast<double>(len);
    double s = 0.0;
    for (int i = 0; i < len; ++i) s += std::norm(g[static_cast<size_t>((start + i) % n)] - m);
    return std::sqrt(s / len);
}

/// sup over every start and every dyadic length of rho(|I|)^{-1} osc_I(g).
inline double bmo_dyadic_all_starts(const std::vector<cplx>& g, const std::function<double(double)>& rho)
{
    const int n = static_cast<int>(g.size());
    double best = 0.0;
    for (int len = 1; len <= n; len *= 2) {
        for (int start = 0; start < (len == n ? 1 : n); ++start) {
            best = std::max(best, arc_oscillation(g, start, len) / rho(2.0 * M_PI * len / n));
        }
    }
    return best;
}

/// Maximal function over every arc (any length, any start) containing each grid point.
inline std::vector<double> maximal_all_arcs(const std::vector<double>& a)
{
    const int n = static_cast<int>(a.size());
    std::vector<double> out(a.size(), 0.0);
    for (int start = 0; start < n; ++start) {
        double sum = 0.0;
        for (int len = 1; len <= n; ++len) {
            sum += a[static_cast<size_t>((start + len - 1) % n)];
            const double mean = sum / len;
            for (int i = 0; i < len; ++i) {
                double& o = out[static_cast<size_t>((start + i) % n)];
                o = std::max(o, mean);
            }
        }
    }
    return out;
}

/// Largest singular value of a small complex matrix by power iteration on A^* A.
inline double spectral_norm(const std::vector<std::vector<cplx>>& a, int iters = 2000)
{
    const size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    std::vector<cplx> x(cols, 1.0), y(rows);
    double sigma = 0.0;
    for (int it = 0; it < iters; ++it) {
        for (size_t i = 0; i < rows; ++i) {
            y[i] = 0.0;
            for (size_t j = 0; j < cols; ++j) y[i] += a[i][j] * x[j];
        }
        std::vector<cplx> z(cols, 0.0);
        for (size_t j = 0; j < cols; ++j)
            for (size_t i = 0; i < rows; ++i) z[j] += std::conj(a[i][j]) * y[i];
        double nz = 0.0;
        for (const cplx& v : z) nz += std::norm(v);
        nz = std::sqrt(nz);
        if (nz == 0.0) return 0.0;
        for (size_t j = 0; j < cols; ++j) x[j] = z[j] / nz;
        sigma = std::sqrt(nz);
    }
    return sigma;
}

}  // namespace oracle
