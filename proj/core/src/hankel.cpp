#include "ho/hankel.hpp"

#include "ho/circle.hpp"
#include "ho/errors.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace ho {

HankelMatrix::HankelMatrix(int size, std::vector<cplx> entries) : size_(size), entries_(std::move(entries))
{
    if (size < 0 || entries_.size() != static_cast<size_t>(size) * static_cast<size_t>(size)) {
        throw DomainError("HankelMatrix: entry count does not match size");
    }
}

std::vector<cplx> HankelMatrix::apply_conjugate(std::span<const cplx> c) const
{
    std::vector<cplx> out(static_cast<size_t>(size_));
    const int cols = std::min<int>(size_, static_cast<int>(c.size()));
    for (int j = 0; j < size_; ++j) {
        cplx s = 0.0;
        for (int k = 0; k < cols; ++k) s += at(j, k) * std::conj(c[static_cast<size_t>(k)]);
        out[static_cast<size_t>(j)] = s;
    }
    return out;
}

namespace {

double top_singular_value(const Eigen::MatrixXcd& m)
{
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

}  // namespace

double HankelMatrix::largest_singular_value() const
{
    Eigen::MatrixXcd m(size_, size_);
    for (int j = 0; j < size_; ++j) {
        for (int k = 0; k < size_; ++k) m(j, k) = at(j, k);
    }
    return top_singular_value(m);
}

AnalyticFunction hankel_apply(const AnalyticFunction& b, const AnalyticFunction& g, int n)
{
    if (b.degree() + g.degree() >= n / 2) {
        throw DomainError("hankel_apply: deg b + deg g = " + std::to_string(b.degree() + g.degree()) +
                          " must stay below N/2 = " + std::to_string(n / 2) + " (aliasing)");
    }
    const BoundaryFunction bb = circle_restriction(b, 1.0, n);
    const BoundaryFunction gb = circle_restriction(g, 1.0, n);
    return szego_project(bb.times(gb.conj()));
}

HankelMatrix hankel_matrix(const AnalyticFunction& b, int m)
{
    if (m < 0) throw DomainError("hankel_matrix: negative size");
    std::vector<cplx> e(static_cast<size_t>(m) * static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) e[static_cast<size_t>(j) * static_cast<size_t>(m) + static_cast<size_t>(k)] = b.coefficient(j + k);
    }
    return HankelMatrix(m, std::move(e));
}

std::vector<DictionaryElement> build_dictionary(const Dictionary& dict, std::uint64_t seed, int n)
{
    const int degree = dict.degree > 0 ? dict.degree : n / 4;
    std::vector<DictionaryElement> out;
    for (int k = 0; k < std::min(dict.monomials, degree); ++k) {
        out.push_back({"z^" + std::to_string(k), AnalyticFunction::monomial(k)});
    }
    if (dict.kernels) {
        for (double radius : {0.5, 0.8, 0.9, 0.95}) {
            for (int r = 0; r < 8; ++r) {
                const cplx a = std::polar(radius, 2.0 * M_PI * r / 8.0);
                std::vector<cplx> c(static_cast<size_t>(degree));
                cplx p = 1.0;
                for (auto& v : c) {
                    v = p;
                    p *= std::conj(a);
                }
                out.push_back({"kernel(" + std::to_string(radius).substr(0, 4) + "," + std::to_string(r) + "/8)",
                               AnalyticFunction(std::move(c))});
            }
        }
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int i = 0; i < dict.random; ++i) {
        std::vector<cplx> c(static_cast<size_t>(degree));
        for (auto& v : c) {
            const double re = normal(rng);
            const double im = normal(rng);
            v = {re, im};
        }
        out.push_back({"random#" + std::to_string(i), AnalyticFunction(std::move(c))});
    }
    return out;
}

HankelReport hankel_norm_estimate(const AnalyticFunction& b, const GrowthFunction& f1,
                                  const GrowthFunction& f2, const Dictionary& dict,
                                  std::uint64_t seed, int n)
{
    HankelReport report;
    for (const DictionaryElement& e : build_dictionary(dict, seed, n)) {
        const double norm_g = hphi_boundary_norm(e.g, f1, n);
        if (!(norm_g > 0.0)) continue;
        const AnalyticFunction h = hankel_apply(b, e.g, n);
        const double ratio = hphi_boundary_norm(h, f2, n) / norm_g;
        if (ratio > report.operator_estimate) {
            report.operator_estimate = ratio;
            report.best_element = e.tag;
        }
    }

    // Exact operator norm on inputs of the dictionary degree: rows are the
    // output modes 0..deg b, columns the input modes that can reach them.
    const int degree = dict.degree > 0 ? dict.degree : n / 4;
    const int rows = b.size();
    const int cols = std::min(degree, b.size());
    Eigen::MatrixXcd m(rows, cols);
    for (int j = 0; j < rows; ++j) {
        for (int k = 0; k < cols; ++k) m(j, k) = b.coefficient(j + k);
    }
    report.svd_reference = top_singular_value(m);
    return report;
}

namespace {

struct Types {
    double lower = 0.0;
    std::optional<double> upper;
};

Types types_of(const GrowthFunction& f, const char* name)
{
    const TypeEstimate t = estimate_types(f);
    if (!t.lower_exponent) {
        throw PreconditionError(std::string(name) + " = " + f.describe() + " has no positive lower type");
    }
    return {*t.lower_exponent, t.upper_exponent};
}

constexpr double kTypeTol = 1e-6;

std::string fmt(double v) { return std::to_string(v); }

void fill_band(ExperimentResult& result, bool mean_removed_rows)
{
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (size_t i = mean_removed_rows ? 1 : 0; i < result.rows.size(); i += 2) {
        const HankelReport& r = result.rows[i];
        if (!(r.symbol_norm > 0.0) || !(r.operator_estimate > 0.0)) continue;
        lo = any ? std::min(lo, r.ratio) : r.ratio;
        hi = any ? std::max(hi, r.ratio) : r.ratio;
        any = true;
    }
    result.band_lo = lo;
    result.band_hi = hi;
    result.band_ratio = any ? hi / lo : 0.0;
    result.band_rows = mean_removed_rows ? "mean-removed symbols" : "symbols as given";
}

template <class SymbolNorm>
void run_rows(ExperimentResult& result, std::span<const Symbol> family, const GrowthFunction& f1,
              const GrowthFunction& f2, const Dictionary& dict, std::uint64_t seed, int n,
              SymbolNorm&& symbol_norm)
{
    for (const Symbol& s : family) {
        const AnalyticFunction centered = s.b - AnalyticFunction::constant(s.b.coefficient(0));
        for (const auto& [tag, b] : {std::pair<std::string, const AnalyticFunction*>{s.tag, &s.b},
                                     {s.tag + " (mean removed)", &centered}}) {
            HankelReport r = hankel_norm_estimate(*b, f1, f2, dict, seed, n);
            r.family_tag = tag;
            r.symbol_norm = symbol_norm(*b);
            r.ratio = r.symbol_norm > 0.0 ? r.operator_estimate / r.symbol_norm : 0.0;
            result.rows.push_back(std::move(r));
        }
    }
}

}  // namespace

ExperimentResult loss_experiment(std::span<const Symbol> family, const GrowthFunction& f1,
                                 const GrowthFunction& f2, const Dictionary& dict,
                                 std::uint64_t seed, int n)
{
    const Types t1 = types_of(f1, "phi1");
    const Types t2 = types_of(f2, "phi2");
    const bool ok = t2.lower > 1.0 + kTypeTol && t2.upper && *t2.upper < t1.lower - kTypeTol;
    if (!ok) {
        throw PreconditionError("loss_experiment: hypothesis 1 < p2 <= q2 < p1 fails (p1 = " + fmt(t1.lower) +
                                ", p2 = " + fmt(t2.lower) + ", q2 = " + (t2.upper ? fmt(*t2.upper) : "absent") + ")");
    }
    const GrowthFunction f3 = ratio_inverse_compose(f1, f2);
    ExperimentResult result;
    result.criterion = "H^phi3 norm, phi3 = " + f3.describe();
    run_rows(result, family, f1, f2, dict, seed, n,
             [&](const AnalyticFunction& b) { return hphi_boundary_norm(b, f3, n); });
    fill_band(result, false);
    return result;
}

ExperimentResult gain_experiment(std::span<const Symbol> family, const GrowthFunction& f1,
                                 const GrowthFunction& f2, const Dictionary& dict,
                                 std::uint64_t seed, int n)
{
    const Types t1 = types_of(f1, "phi1");
    const Types t2 = types_of(f2, "phi2");
    const bool ok = t1.lower > 0.0 && t1.upper && *t1.upper <= t2.lower + kTypeTol &&
                    t2.lower > 1.0 + kTypeTol && t2.upper.has_value();
    if (!ok) {
        throw PreconditionError("gain_experiment: hypothesis 0 < p1 <= q1 <= p2, 1 < p2 <= q2 < inf fails (p1 = " +
                                fmt(t1.lower) + ", q1 = " + (t1.upper ? fmt(*t1.upper) : "absent") +
                                ", p2 = " + fmt(t2.lower) + ", q2 = " + (t2.upper ? fmt(*t2.upper) : "absent") + ")");
    }
    const Weight rho = weight_ratio(f1, f2);
    ExperimentResult result;
    result.criterion = "BMOA(rho) norm, rho = rho(" + f1.describe() + ") / rho(" + f2.describe() + ")";
    run_rows(result, family, f1, f2, dict, seed, n,
             [&](const AnalyticFunction& b) { return bmoa_rho_norm(b, rho, n); });
    fill_band(result, true);
    result.notes.push_back("a constant symbol acts through the mean mode only; the band uses mean-removed rows");
    return result;
}

}  // namespace ho
