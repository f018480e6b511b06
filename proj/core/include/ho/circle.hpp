#pragma once

#include "ho/growth.hpp"

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ho {

using cplx = std::complex<double>;

/// Complex function on the unit circle, held as N uniform samples at
/// theta_j = 2 pi j / N together with its discrete Fourier coefficients.
///
/// Coefficients are stored in FFT order: index k holds mode n = k for
/// k < N/2 and mode n = k - N otherwise, so modes cover [-N/2, N/2).
class BoundaryFunction {
public:
    BoundaryFunction() = default;

    /// N must be a power of two, at least 16. Samples must be finite.
    static BoundaryFunction from_samples(std::vector<cplx> samples);
    static BoundaryFunction from_real_samples(std::span<const double> samples);
    /// Modes outside [-N/2, N/2) raise DomainError (they would alias).
    static BoundaryFunction from_modes(std::span<const std::pair<int, cplx>> modes, int n);
    /// Coefficients in FFT order, length N.
    static BoundaryFunction from_coefficients(std::vector<cplx> coeffs);
    static BoundaryFunction constant(cplx c, int n);

    int size() const { return static_cast<int>(samples_.size()); }
    std::span<const cplx> samples() const { return samples_; }
    std::span<const cplx> coefficients() const { return coeffs_; }

    /// The n-th Fourier coefficient. |n| < N/2 required (DomainError otherwise).
    cplx coefficient(int n) const;

    std::vector<double> magnitudes() const;
    std::vector<double> real_part() const;
    bool is_real(double tol = 1e-12) const;
    double max_abs() const;
    cplx mean() const { return coeffs_.empty() ? cplx{} : coeffs_[0]; }

    BoundaryFunction scaled(cplx c) const;
    BoundaryFunction plus_constant(cplx c) const;
    /// Cyclic shift: result sample j equals sample (j - k) mod N.
    BoundaryFunction rotated(int k) const;
    /// Pointwise operations (samples only; coefficients recomputed).
    BoundaryFunction times(const BoundaryFunction& other) const;
    BoundaryFunction minus(const BoundaryFunction& other) const;
    BoundaryFunction conj() const;

private:
    std::vector<cplx> samples_;
    std::vector<cplx> coeffs_;
};

struct NormReport {
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    int iterations = 0;
    std::vector<std::string> warnings;
};

struct LuxemburgOptions {
    double rel_tol = 1e-13;
    int max_iter = 200;
    /// Use lambda = (mean |g|^p)^{1/p} for pure powers instead of iterating.
    bool closed_form = true;
};

/// inf{lambda > 0 : mean Phi(|g| / lambda) <= 1}.
NormReport luxemburg_norm(const BoundaryFunction& g, const GrowthFunction& f,
                          const LuxemburgOptions& options = {});
/// Same, on precomputed nonnegative magnitudes (uniform weights).
NormReport luxemburg_norm(std::span<const double> magnitudes, const GrowthFunction& f,
                          const LuxemburgOptions& options = {});

cplx fourier_coefficient(const BoundaryFunction& g, int n);

/// Fourier multiplier -i sgn(n); the mean and the Nyquist mode are removed.
BoundaryFunction hilbert_transform(const BoundaryFunction& u);

/// True iff max_{n<0} |g^(n)| <= tol * max_n |g^(n)|.
bool hardy_membership(const BoundaryFunction& g, double tol);

/// Dyadic-arc Hardy-Littlewood maximal function of |g|.
///
/// The arc family contains every arc of 2^k consecutive cells (k = 0..log2 N)
/// starting at every grid point, so it is closed under rotation by grid steps.
BoundaryFunction maximal_hl(const BoundaryFunction& g);

/// sup over the same arc family of rho(|I|)^{-1} (mean_I |g - m_I g|^2)^{1/2}.
double bmo_rho_norm(const BoundaryFunction& g, const Weight& rho);

/// Largest radius accepted by the extension kernels for a grid of N samples.
inline double resolution_radius(int n) { return 1.0 - 2.0 * M_PI / n; }

/// Herglotz integral (1/2 pi) int (e^{it}+z)/(e^{it}-z) u(e^{it}) dt,
/// evaluated spectrally from the discrete coefficients.
/// |z| <= 1 - 2 pi / N is required (DomainError otherwise).
cplx herglotz_extend(const BoundaryFunction& u, cplx z);

/// Poisson integral of g at r e^{i theta}; same radius limit.
cplx poisson_extend(const BoundaryFunction& g, double r, double theta);

}  // namespace ho
