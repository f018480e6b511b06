#pragma once

#include "ho/circle.hpp"
#include "ho/growth.hpp"

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace ho {

/// Holomorphic function on the disk given by Taylor coefficients a_0..a_{M-1}.
class AnalyticFunction {
public:
    AnalyticFunction() = default;
    explicit AnalyticFunction(std::vector<cplx> coeffs);

    static AnalyticFunction constant(cplx c) { return AnalyticFunction({c}); }
    static AnalyticFunction monomial(int k, cplx c = 1.0);

    std::span<const cplx> coefficients() const { return coeffs_; }
    /// Number of stored coefficients (degree + 1 after trimming, at least 1).
    int size() const { return static_cast<int>(coeffs_.size()); }
    int degree() const { return size() - 1; }
    cplx coefficient(int k) const;

    cplx eval(cplx z) const;
    cplx operator()(cplx z) const { return eval(z); }

    AnalyticFunction operator+(const AnalyticFunction& other) const;
    AnalyticFunction operator-(const AnalyticFunction& other) const;
    AnalyticFunction operator*(cplx c) const;
    /// Cauchy product, truncated to `max_size` coefficients when positive.
    AnalyticFunction multiply(const AnalyticFunction& other, int max_size = 0) const;
    AnalyticFunction truncated(int max_size) const;

    /// Drops trailing coefficients with |a_k| <= rel * max |a|.
    AnalyticFunction trimmed(double rel = 0.0) const;

private:
    std::vector<cplx> coeffs_{cplx{}};
};

struct RadialReport {
    std::vector<double> radii;
    std::vector<double> norms;
    double boundary_norm = 0.0;
    bool converged = false;
    std::vector<std::string> warnings;

    double value() const { return boundary_norm; }
};

/// Samples of G(r e^{i theta_j}) on an N-point grid. Needs size(G) <= N/2.
BoundaryFunction circle_restriction(const AnalyticFunction& g, double r, int n);

/// Radii at which radial norms are sampled: {0.5, 0.9, 0.99, 1 - 2pi/N},
/// sorted and deduplicated.
std::vector<double> radial_sample_radii(int n);

/// Luxemburg norms of G_r over the sampled radii followed by r = 1.
/// The reported value is the boundary norm; `converged` is the monotonicity check.
RadialReport hphi_norm(const AnalyticFunction& g, const GrowthFunction& f, int n);

/// Boundary Luxemburg norm only (the value of hphi_norm without the radial sweep).
double hphi_boundary_norm(const AnalyticFunction& g, const GrowthFunction& f, int n);

/// Cone maximal function sampled at 6 radii and 5 angular offsets per point,
/// plus the boundary value itself (the limit along the cone's axis).
BoundaryFunction nontangential_max(const AnalyticFunction& g, double alpha, int n);

/// Norms of G_r - g at the sampled radii; `converged` reports that they are
/// nonincreasing. A warning is attached when f lacks an upper type.
RadialReport radial_convergence_report(const AnalyticFunction& g, const GrowthFunction& f, int n);

/// Nonnegative Fourier modes of g as Taylor coefficients (trailing zeros trimmed).
AnalyticFunction szego_project(const BoundaryFunction& g);

/// sum_k F_k conj(G_k).
cplx pairing(const AnalyticFunction& f, const AnalyticFunction& g);

/// Radii used by bmoa_rho_norm: {0.9, 0.99, 1 - 2pi/N, 1}, sorted.
std::vector<double> bmoa_radii(int n);
std::vector<double> bmoa_rho_profile(const AnalyticFunction& g, const Weight& rho, int n);
double bmoa_rho_norm(const AnalyticFunction& g, const Weight& rho, int n);

}  // namespace ho
