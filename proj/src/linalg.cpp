#include "coorbit2d/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "coorbit2d/error.hpp"

namespace coorbit2d {

namespace {
constexpr double kSingularRelTol = 1e-14;
}

double Mat2::max_abs() const {
  return std::max({std::abs(m11), std::abs(m12), std::abs(m21), std::abs(m22)});
}

bool Mat2::is_finite() const {
  return std::isfinite(m11) && std::isfinite(m12) && std::isfinite(m21) && std::isfinite(m22);
}

bool Mat2::is_singular() const {
  if (!is_finite()) return true;
  const double scale = max_abs();
  if (scale == 0.0) return true;
  return std::abs(det()) <= kSingularRelTol * scale * scale;
}

Mat2 Mat2::inverse() const {
  require_invertible(*this, "matrix");
  const double d = det();
  return {m22 / d, -m12 / d, -m21 / d, m11 / d};
}

Mat2 rotation(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return {c, s, -s, c};
}

void require_invertible(const Mat2& m, const char* what) {
  if (m.is_singular()) {
    throw Error(ErrorKind::invalid_matrix, std::string(what) + " is singular or not finite");
  }
}

double relative_distance(const Mat2& a, const Mat2& b) {
  const double scale = std::max({a.max_abs(), b.max_abs(), 1e-300});
  return (a - b).max_abs() / scale;
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m.m11 << ", " << m.m12 << "], [" << m.m21 << ", " << m.m22 << "]]";
}

std::ostream& operator<<(std::ostream& os, const Vec2& v) { return os << "(" << v.x << ", " << v.y << ")"; }

}  // namespace coorbit2d
