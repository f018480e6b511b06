#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ho {

/// Closed interval of the positive half-line.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double t) const { return t >= lo && t <= hi; }
};

/// A growth function: nondecreasing map [0, inf) -> [0, inf) with value 0 at 0.
///
/// Values are immutable and cheap to copy (shared, read-only representation),
/// so they can be passed across threads freely. Composite kinds keep their
/// generating functions so that inverse identities stay checkable.
class GrowthFunction {
public:
    enum class Kind {
        power,            ///< t^p
        power_log,        ///< t^p log(e + t)^a
        exp_minus_one,    ///< e^t - 1
        table,            ///< log-log piecewise linear through knots
        complementary,    ///< Young conjugate sup_t {st - f(t)}
        product_inverse,  ///< inverse is f1^{-1} * f2^{-1}
        ratio_inverse,    ///< inverse is f2^{-1} / f1^{-1}
        convexified,      ///< f(t^{1/p})
    };

    struct Knot {
        double t = 0.0;
        double y = 0.0;
    };

    struct Node;

    static GrowthFunction power(double p);
    static GrowthFunction power_log(double p, double a);
    static GrowthFunction exp_minus_one();
    /// Knots must be strictly increasing in both coordinates and positive.
    /// Without `extrapolate`, evaluation outside the knot hull is a DomainError;
    /// with it, the end segments continue as power laws.
    static GrowthFunction table(std::vector<Knot> knots, bool extrapolate = false);

    explicit GrowthFunction(std::shared_ptr<const Node> node);

    Kind kind() const;

    double eval(double t) const;
    double operator()(double t) const { return eval(t); }

    /// Smallest t with eval(t) = y. Throws NumericalError when y is not attained.
    double inverse(double y) const;

    /// Arguments for which eval is exact (no clamping, no extrapolation).
    Interval support() const;

    std::optional<double> declared_lower_type() const;
    std::optional<double> declared_upper_type() const;

    /// p for power, power_log and convexified kinds.
    double exponent() const;
    /// a for power_log.
    double log_exponent() const;
    /// Knots of table and complementary kinds (empty otherwise).
    std::span<const Knot> knots() const;
    bool extrapolates() const;
    /// Generating functions: {of} for complementary/convexified, {f1, f2} for compositions.
    std::span<const GrowthFunction> operands() const;
    std::span<const std::string> warnings() const;

    std::string describe() const;

    const Node& node() const { return *node_; }

private:
    std::shared_ptr<const Node> node_;
};

const char* to_string(GrowthFunction::Kind kind);

/// Young conjugate computed numerically and stored as a monotone table.
/// Throws PreconditionError when the lower Boyd index does not exceed 1
/// or the conjugate degenerates (vanishes on an interval, or is infinite).
GrowthFunction complementary(const GrowthFunction& f);

/// The growth function whose inverse is f1^{-1} * f2^{-1}.
GrowthFunction product_inverse_compose(const GrowthFunction& f1, const GrowthFunction& f2);

/// The growth function whose inverse is f2^{-1} / f1^{-1}.
/// Throws PreconditionError unless that ratio is strictly increasing.
GrowthFunction ratio_inverse_compose(const GrowthFunction& f1, const GrowthFunction& f2);

/// t -> f(t^{1/p}). Carries a warning when p exceeds the estimated lower type of f.
GrowthFunction convexify_power(const GrowthFunction& f, double p);

// ---------------------------------------------------------------------------
// Type exponents, indices and doubling conditions.

struct TypeGrid {
    double s_lo = 1e-3;
    double s_hi = 1e3;
    int s_points = 33;
    double t_span = 1e3;  ///< t-factors in [1/t_span, 1] and [1, t_span]
    int t_points = 33;
    double constant_cap = 1e6;
};

/// Estimated lower/upper type exponents.
///
/// Exponents are the grid envelopes, i.e. the best exponents valid with C = 1
/// on the grid. The least-squares slopes and the constant they require are
/// kept too; an upper exponent is reported absent when the least-squares
/// constant exceeds the cap (exponential growth).
struct TypeEstimate {
    std::optional<double> lower_exponent;
    std::optional<double> upper_exponent;
    double constant_C = 1.0;
    double residual = 0.0;
    double fitted_lower = 0.0;
    double fitted_upper = 0.0;
    int pairs_used = 0;
    std::vector<std::string> warnings;
};

TypeEstimate estimate_types(const GrowthFunction& f, const TypeGrid& grid = {});

struct IndexEstimate {
    double a_lower = 0.0;
    double b_upper = 0.0;
    std::vector<double> grid_used;
};

/// Min and max of centered log-log slopes t f'(t)/f(t) over a tail grid.
IndexEstimate boyd_indices(const GrowthFunction& f);

/// The tail grid used by boyd_indices.
std::vector<double> tail_grid(const GrowthFunction& f);

struct EquivalenceResult {
    bool equivalent = false;
    double c = 0.0;  ///< smallest passing constant, 0 when none
};

using PositiveFunction = std::function<double(double)>;

/// Smallest c in {1.05^k} (c <= c_max) with c^{-1} f1(t/c) <= f2(t) <= c f1(c t)
/// on a log grid over [1e-20, 1e20] intersected with the supports.
EquivalenceResult check_equivalent(const GrowthFunction& f1, const GrowthFunction& f2,
                                   double c_max);
EquivalenceResult check_equivalent(const PositiveFunction& f1, const PositiveFunction& f2,
                                   double c_max, std::span<const double> grid);

/// Log grid used by check_equivalent.
std::vector<double> equivalence_grid(Interval limit = {1e-20, 1e20}, int points = 81);

struct DoublingResult {
    bool delta2 = false;
    double K = 0.0;  ///< sup f(2t)/f(t) on the grid
    bool nabla2 = false;
    double C = 0.0;  ///< first C in {1.1^k} with f(t) <= f(Ct)/(2C), 0 when none
};

DoublingResult check_doubling(const GrowthFunction& f, double k_cap = 1e6);

struct ChordTest {
    bool passes = false;
    double c = 0.0;
};

/// Tests f(t1)/t1 <= c f(c t2)/t2 for all grid pairs t1 < t2, the criterion
/// for equivalence to a convex function.
ChordTest convexity_chord_test(const GrowthFunction& f);

// ---------------------------------------------------------------------------
// Weights rho(t) = 1 / (t f^{-1}(1/t)).

class Weight {
public:
    static Weight rho(const GrowthFunction& f);
    /// rho_{f1} / rho_{f2}.
    static Weight ratio(const GrowthFunction& f1, const GrowthFunction& f2);

    double operator()(double t) const;

    std::span<const GrowthFunction> sources() const { return sources_; }

private:
    std::vector<GrowthFunction> sources_;
};

inline Weight weight_rho(const GrowthFunction& f) { return Weight::rho(f); }
inline Weight weight_ratio(const GrowthFunction& f1, const GrowthFunction& f2)
{
    return Weight::ratio(f1, f2);
}

}  // namespace ho
