#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "coorbit2d/linalg.hpp"

namespace coorbit2d {

using cplx = std::complex<double>;

/// N x N complex samples of an L-periodic function. Sample (i, j), stored at
/// i * N + j, sits at ((i/N - 1/2) L, (j/N - 1/2) L).
struct GridSignal {
  std::size_t n = 0;
  double extent = 0.0;
  std::vector<cplx> data;

  GridSignal() = default;
  /// Zero signal; validates n and extent.
  GridSignal(std::size_t n, double extent);

  /// Throws out_of_range unless n >= 8 is a power of two, extent > 0 and data is finite.
  void validate() const;

  double spacing() const { return extent / static_cast<double>(n); }
  Vec2 position(std::size_t i, std::size_t j) const;
  /// Frequency of DFT bin (k1, k2), using signed bins in [-N/2, N/2).
  Vec2 frequency(std::size_t k1, std::size_t k2) const;

  cplx& at(std::size_t i, std::size_t j) { return data[i * n + j]; }
  const cplx& at(std::size_t i, std::size_t j) const { return data[i * n + j]; }

  /// sqrt(sum |f|^2 * spacing^2)
  double l2_norm() const;
};

/// Signed bin index in [-n/2, n/2) for storage index k.
inline long signed_bin(std::size_t k, std::size_t n) {
  return k < n / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
}

bool is_power_of_two(std::size_t n);

/// Relative L2 distance |a - b| / |b|.
double relative_l2_error(const GridSignal& a, const GridSignal& b);

}  // namespace coorbit2d
