#pragma once

#include <functional>

namespace ho::detail {

struct RootResult {
    double x = 0.0;   // solution in the original variable
    double lo = 0.0;  // final bracket, original variable
    double hi = 0.0;
    int iterations = 0;
};

struct RootOptions {
    double start_lo = 1e-30;
    double start_hi = 1.0;
    double domain_lo = 0.0;  // exclusive lower limit for bracket expansion
    double domain_hi = 1e300;
    double expansion = 10.0;
    double rel_tol = 1e-12;
    int max_iter = 200;
};

/// Solves f(x) = target for x > 0 where f is nondecreasing.
///
/// Works on u = log x with a bracketed Illinois (modified false position)
/// iteration on log f(e^u) - log target; bisection steps are taken whenever
/// a function value is not finite or the secant point leaves the bracket.
/// The bracket starts at [start_lo, start_hi] and grows geometrically inside
/// (domain_lo, domain_hi]. Throws NumericalError when no bracket exists.
RootResult solve_increasing(const std::function<double(double)>& f, double target,
                            const RootOptions& options = {});

}  // namespace ho::detail
