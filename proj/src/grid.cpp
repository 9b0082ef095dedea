#include "coorbit2d/grid.hpp"

#include <cmath>
#include <string>

#include "coorbit2d/error.hpp"

namespace coorbit2d {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

GridSignal::GridSignal(std::size_t n_, double extent_) : n(n_), extent(extent_), data(n_ * n_) { validate(); }

void GridSignal::validate() const {
  if (n < 8 || !is_power_of_two(n)) {
    throw Error(ErrorKind::out_of_range, "grid size must be a power of two >= 8, got " + std::to_string(n));
  }
  if (!(extent > 0.0) || !std::isfinite(extent)) throw Error(ErrorKind::out_of_range, "grid extent must be > 0");
  if (data.size() != n * n) throw Error(ErrorKind::out_of_range, "grid data size does not match n*n");
  for (const auto& v : data) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorKind::out_of_range, "grid data contains non-finite values");
    }
  }
}

Vec2 GridSignal::position(std::size_t i, std::size_t j) const {
  const double nn = static_cast<double>(n);
  return {(static_cast<double>(i) / nn - 0.5) * extent, (static_cast<double>(j) / nn - 0.5) * extent};
}

Vec2 GridSignal::frequency(std::size_t k1, std::size_t k2) const {
  return {static_cast<double>(signed_bin(k1, n)) / extent, static_cast<double>(signed_bin(k2, n)) / extent};
}

double GridSignal::l2_norm() const {
  double sum = 0.0;
  for (const auto& v : data) sum += std::norm(v);
  return std::sqrt(sum) * spacing();
}

double relative_l2_error(const GridSignal& a, const GridSignal& b) {
  if (a.n != b.n || a.data.size() != b.data.size()) throw Error(ErrorKind::out_of_range, "grid size mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    num += std::norm(a.data[i] - b.data[i]);
    den += std::norm(b.data[i]);
  }
  return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}

}  // namespace coorbit2d
