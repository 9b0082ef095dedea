#pragma once

#include <array>
#include <cmath>
#include <iosfwd>

namespace coorbit2d {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {s * x, s * y}; }
  constexpr double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  bool operator==(const Vec2&) const = default;
};

/// Row-major real 2x2 matrix [[m11, m12], [m21, m22]].
struct Mat2 {
  double m11 = 1.0;
  double m12 = 0.0;
  double m21 = 0.0;
  double m22 = 1.0;

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 diag(double a, double b) { return {a, 0.0, 0.0, b}; }

  constexpr double det() const { return m11 * m22 - m12 * m21; }
  constexpr Mat2 transpose() const { return {m11, m21, m12, m22}; }
  constexpr double trace() const { return m11 + m22; }
  double max_abs() const;
  double frobenius() const { return std::sqrt(m11 * m11 + m12 * m12 + m21 * m21 + m22 * m22); }
  bool is_finite() const;

  /// True when |det| is zero relative to the entry scale (or entries are not finite).
  bool is_singular() const;

  /// Throws Error(invalid_matrix) when singular.
  Mat2 inverse() const;
  /// h^{-T}
  Mat2 inverse_transpose() const { return inverse().transpose(); }

  constexpr Mat2 operator*(const Mat2& o) const {
    return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22, m21 * o.m11 + m22 * o.m21,
            m21 * o.m12 + m22 * o.m22};
  }
  constexpr Vec2 operator*(const Vec2& v) const { return {m11 * v.x + m12 * v.y, m21 * v.x + m22 * v.y}; }
  constexpr Mat2 operator*(double s) const { return {s * m11, s * m12, s * m21, s * m22}; }
  constexpr Mat2 operator+(const Mat2& o) const { return {m11 + o.m11, m12 + o.m12, m21 + o.m21, m22 + o.m22}; }
  constexpr Mat2 operator-(const Mat2& o) const { return {m11 - o.m11, m12 - o.m12, m21 - o.m21, m22 - o.m22}; }
  bool operator==(const Mat2&) const = default;

  constexpr std::array<double, 4> entries() const { return {m11, m12, m21, m22}; }
};

/// R_phi = [[cos, sin], [-sin, cos]]; maps the line at angle g to the line at g - phi.
Mat2 rotation(double phi);
/// S_s = [[1, s], [0, 1]]
constexpr Mat2 shear(double s) { return {1.0, s, 0.0, 1.0}; }

/// Throws Error(invalid_matrix) naming `what` when m is singular.
void require_invertible(const Mat2& m, const char* what);

/// Largest entrywise difference scaled by the larger max-abs entry.
double relative_distance(const Mat2& a, const Mat2& b);

std::ostream& operator<<(std::ostream& os, const Mat2& m);
std::ostream& operator<<(std::ostream& os, const Vec2& v);

}  // namespace coorbit2d
