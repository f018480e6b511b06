#pragma once

#include "ho/growth.hpp"
#include "ho/hardy.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ho {

/// M x M matrix with entries b^(j + k).
class HankelMatrix {
public:
    HankelMatrix(int size, std::vector<cplx> entries);

    int size() const { return size_; }
    cplx at(int j, int k) const { return entries_[static_cast<size_t>(j) * static_cast<size_t>(size_) + static_cast<size_t>(k)]; }
    std::span<const cplx> entries() const { return entries_; }

    /// H conj(c): the coefficient action of the Hankel operator on a vector.
    std::vector<cplx> apply_conjugate(std::span<const cplx> c) const;

    double largest_singular_value() const;

private:
    int size_ = 0;
    std::vector<cplx> entries_;
};

/// P(b conj(g)). DomainError unless deg b + deg g < N/2.
AnalyticFunction hankel_apply(const AnalyticFunction& b, const AnalyticFunction& g, int n);

HankelMatrix hankel_matrix(const AnalyticFunction& b, int m);

struct Dictionary {
    int monomials = 16;
    bool kernels = true;
    int random = 32;
    /// Coefficient count of kernel and random elements (0 means N/4).
    int degree = 0;
};

/// The test functions used by hankel_norm_estimate, tagged.
struct DictionaryElement {
    std::string tag;
    AnalyticFunction g;
};
std::vector<DictionaryElement> build_dictionary(const Dictionary& dict, std::uint64_t seed, int n);

struct HankelReport {
    std::string family_tag;
    double symbol_norm = 0.0;
    double operator_estimate = 0.0;
    double ratio = 0.0;
    /// Largest singular value of the Hankel matrix restricted to the dictionary's degree.
    double svd_reference = 0.0;
    std::string best_element;
};

/// Lower bound max_g ||h_b g||_{H^{f2}} / ||g||_{H^{f1}} over the dictionary.
HankelReport hankel_norm_estimate(const AnalyticFunction& b, const GrowthFunction& f1,
                                  const GrowthFunction& f2, const Dictionary& dict,
                                  std::uint64_t seed, int n);

struct Symbol {
    std::string tag;
    AnalyticFunction b;
};

struct ExperimentResult {
    std::vector<HankelReport> rows;  ///< per symbol: b, then b - b^(0)
    double band_lo = 0.0;
    double band_hi = 0.0;
    double band_ratio = 0.0;  ///< band_hi / band_lo (0 when no row qualifies)
    std::string criterion;    ///< description of the symbol norm used
    std::string band_rows;    ///< which rows enter the band
    std::vector<std::string> notes;
};

/// Hankel boundedness with loss: symbol norm in H^{f3}, f3^{-1} = f2^{-1} / f1^{-1}.
/// Requires 1 < p2 <= q2 < p1 (estimated type exponents); PreconditionError otherwise.
ExperimentResult loss_experiment(std::span<const Symbol> family, const GrowthFunction& f1,
                                 const GrowthFunction& f2, const Dictionary& dict,
                                 std::uint64_t seed, int n);

/// Hankel boundedness with gain: symbol norm in BMOA(rho1 / rho2).
/// Requires 0 < p1 <= q1 <= p2 and 1 < p2 <= q2 < inf; PreconditionError otherwise.
ExperimentResult gain_experiment(std::span<const Symbol> family, const GrowthFunction& f1,
                                 const GrowthFunction& f2, const Dictionary& dict,
                                 std::uint64_t seed, int n);

}  // namespace ho
