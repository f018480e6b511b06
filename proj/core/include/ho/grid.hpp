#pragma once

#include <cmath>
#include <vector>

namespace ho {

/// `n` points spaced uniformly in log between `lo` and `hi` (both included).
inline std::vector<double> log_grid(double lo, double hi, int n)
{
    std::vector<double> out;
    if (n <= 0) return out;
    out.reserve(static_cast<size_t>(n));
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (int i = 0; i < n; ++i) {
        out.push_back(std::exp(a + (b - a) * i / (n - 1)));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

/// Uniform angles theta_j = 2 pi j / n.
inline std::vector<double> circle_angles(int n)
{
    std::vector<double> out(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) out[static_cast<size_t>(j)] = 2.0 * M_PI * j / n;
    return out;
}

inline bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

inline int next_power_of_two(long n)
{
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace ho
