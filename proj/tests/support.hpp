#pragma once

#include <cmath>
#include <random>

#include "coorbit2d/linalg.hpp"

namespace coorbit2d::testing {

inline constexpr double kPi = 3.14159265358979323846;

// Matrices with a controllable condition number, drawn from several structural classes
// so that membership tests see both generic and special cases.
enum class MatrixClass { general, diagonal, antidiagonal, upper, conformal };

inline Mat2 random_matrix(std::mt19937_64& rng, MatrixClass kind) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> mag(0.3, 3.0);
  std::bernoulli_distribution flip(0.5);
  auto sgn = [&] { return flip(rng) ? 1.0 : -1.0; };
  switch (kind) {
    case MatrixClass::diagonal: return Mat2::diag(sgn() * mag(rng), sgn() * mag(rng));
    case MatrixClass::antidiagonal: return {0.0, sgn() * mag(rng), sgn() * mag(rng), 0.0};
    case MatrixClass::upper: return {sgn() * mag(rng), u(rng), 0.0, sgn() * mag(rng)};
    case MatrixClass::conformal: {
      const double a = u(rng), b = u(rng);
      return flip(rng) ? Mat2{a, b, -b, a} : Mat2{a, b, b, -a};
    }
    case MatrixClass::general: break;
  }
  for (;;) {
    const Mat2 m{u(rng), u(rng), u(rng), u(rng)};
    if (std::abs(m.det()) > 0.2) return m;
  }
}

inline Mat2 random_invertible(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 4);
  for (;;) {
    const Mat2 m = random_matrix(rng, static_cast<MatrixClass>(pick(rng)));
    if (std::abs(m.det()) > 1e-3) return m;
  }
}

// Truncated power series; adequate for the small generators used in the tests.
inline Mat2 expm(const Mat2& x) {
  Mat2 term = Mat2::identity();
  Mat2 sum = Mat2::identity();
  for (int k = 1; k < 40; ++k) {
    term = term * x * (1.0 / k);
    sum = sum + term;
  }
  return sum;
}

// Independent oracle for the bump profile exp(1 - 1/(1 - t^2)).
inline double rho(double t) { return std::abs(t) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - t * t)) : 0.0; }

// Composite Simpson rule on [a, b].
template <class F>
double simpson(F&& f, double a, double b, int n = 4000) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

inline double circular_pi_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kPi);
  return std::min(d, kPi - d);
}

}  // namespace coorbit2d::testing
