#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ho::detail {

using cplx = std::complex<double>;

/// Unnormalized forward DFT: X[k] = sum_j x[j] exp(-2 pi i jk / N).
std::vector<cplx> fft_forward(std::span<const cplx> x);

/// Unnormalized inverse DFT: x[j] = sum_k X[k] exp(+2 pi i jk / N).
std::vector<cplx> fft_backward(std::span<const cplx> x);

}  // namespace ho::detail
