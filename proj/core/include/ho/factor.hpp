#pragma once

#include "ho/circle.hpp"
#include "ho/growth.hpp"
#include "ho/hardy.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace ho {

/// Finite list of zeros in the open disk, multiplicity by repetition.
struct ZeroList {
    std::vector<cplx> zeros;

    /// Throws DomainError unless every |z_n| <= 1 - 1e-6.
    void validate() const;
};

struct Atom {
    double angle = 0.0;  ///< in [0, 2 pi)
    double mass = 0.0;   ///< > 0
};

/// Finite sum of point masses on the circle.
struct AtomicMeasure {
    std::vector<Atom> atoms;

    void validate() const;
    bool empty() const { return atoms.empty(); }
};

struct NormIdentity {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;  ///< lhs / rhs (1 when both vanish)
};

struct FactorizationReport {
    std::vector<std::pair<std::string, AnalyticFunction>> factors;
    std::vector<NormIdentity> norm_identities;
    /// Named scalar diagnostics (pointwise residuals, constants).
    std::vector<std::pair<std::string, double>> diagnostics;
    double reconstruction_residual = 0.0;
    std::vector<std::string> warnings;

    const AnalyticFunction& factor(const std::string& name) const;
    double diagnostic(const std::string& name) const;
    const NormIdentity& identity(const std::string& name) const;
};

/// prod_n (|z_n|/z_n) (z_n - z)/(1 - conj(z_n) z), with the factor z for z_n = 0.
cplx blaschke(const ZeroList& zeros, cplx z);
BoundaryFunction blaschke_boundary(const ZeroList& zeros, int n);
/// First `size` Taylor coefficients of the Blaschke product.
AnalyticFunction blaschke_series(const ZeroList& zeros, int size);

/// S(z) = exp(-(1/2pi) sum_j m_j (e^{it_j} + z)/(e^{it_j} - z)), |z| < 1.
cplx singular_inner(const AtomicMeasure& sigma, cplx z);
/// Boundary values (unimodular away from atoms; 0 at a sample that hits an atom).
BoundaryFunction singular_inner_boundary(const AtomicMeasure& sigma, int n);
AnalyticFunction singular_inner_series(const AtomicMeasure& sigma, int size);

/// Riesz division G / B by synthetic deflation. Grid size n controls the
/// norm computation and the boundary residual.
FactorizationReport divide_by_blaschke(const AnalyticFunction& g, const ZeroList& zeros,
                                       const GrowthFunction& f, int n);

struct OuterResult {
    AnalyticFunction outer;
    BoundaryFunction boundary;  ///< exp(log m + i H(log m)) on the grid
    std::vector<std::string> warnings;
};

/// Outer function with boundary modulus m (real, nonnegative samples).
/// Values below 1e-12 max m are clipped with a warning; negative or
/// identically vanishing data raises DomainError.
OuterResult outer_from_modulus(const BoundaryFunction& m);

FactorizationReport inner_outer(const AnalyticFunction& g, const ZeroList& zeros,
                                const AtomicMeasure& sigma, const GrowthFunction& f, int n);

/// Factors G = G1 G2 with G1 in H^{f1}, G2 in H^{f2}, for G in H^{f3}.
/// Throws PreconditionError unless f3^{-1} is equivalent to f1^{-1} f2^{-1}.
FactorizationReport strong_factorize(const AnalyticFunction& g, const ZeroList& zeros,
                                     const AtomicMeasure& sigma, const GrowthFunction& f1,
                                     const GrowthFunction& f2, const GrowthFunction& f3, int n);

}  // namespace ho
