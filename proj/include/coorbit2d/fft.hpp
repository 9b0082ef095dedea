#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace coorbit2d {

using cplx = std::complex<double>;

/// Unnormalized 2D DFT of an n x n row-major array, in place.
void fft2d_forward(std::span<cplx> data, std::size_t n);
/// Inverse 2D DFT including the 1/n^2 factor, in place.
void fft2d_inverse(std::span<cplx> data, std::size_t n);

}  // namespace coorbit2d
