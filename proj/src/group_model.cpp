#include "coorbit2d/group_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coorbit2d/error.hpp"

namespace coorbit2d {

namespace {

template <class T>
const T& expect_chart(const ChartPoint& p, FamilyKind kind) {
  const T* v = std::get_if<T>(&p);
  if (v == nullptr) {
    throw Error(ErrorKind::family_mismatch,
                "chart point of family " + to_string(chart_family(p)) + " used with " + to_string(kind) + " group");
  }
  return *v;
}

void check_sign(int s) {
  if (s != 1 && s != -1) throw Error(ErrorKind::out_of_range, "chart sign must be +1 or -1");
}

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(ErrorKind::out_of_range, std::string(what) + " must be finite");
}

double wrap_two_pi(double angle) {
  double a = std::fmod(angle, 2.0 * std::numbers::pi);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  if (a >= 2.0 * std::numbers::pi) a = 0.0;
  return a;
}

bool close(double a, double b, double tol, double scale) { return std::abs(a - b) <= tol * scale; }

}  // namespace

Family Family::shearlet(double c) {
  if (!std::isfinite(c)) throw Error(ErrorKind::out_of_range, "shearlet exponent c must be finite");
  return {FamilyKind::shearlet, c};
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::similitude: return "similitude";
    case FamilyKind::diagonal: return "diagonal";
    case FamilyKind::shearlet: return "shearlet";
  }
  return "unknown";
}

std::string Family::name() const { return to_string(kind); }

GroupSpec::GroupSpec(Family family, const Mat2& conjugator)
    : family_(family), conjugator_(conjugator), conjugator_inv_(Mat2::identity()) {
  require_invertible(conjugator, "conjugator");
  if (family_.kind != FamilyKind::shearlet) family_.c = 0.0;
  conjugator_inv_ = conjugator.inverse();
}

GroupSpec GroupSpec::conjugated(const Mat2& a) const {
  require_invertible(a, "conjugating matrix");
  return GroupSpec(family_, a * conjugator_);
}

FamilyKind chart_family(const ChartPoint& p) {
  switch (p.index()) {
    case 0: return FamilyKind::similitude;
    case 1: return FamilyKind::diagonal;
    default: return FamilyKind::shearlet;
  }
}

Vec2 dual_action(const Mat2& h, const Vec2& zeta) { return h.inverse_transpose() * zeta; }

Mat2 standard_element(const Family& family, const ChartPoint& p) {
  switch (family.kind) {
    case FamilyKind::similitude: {
      const auto& q = expect_chart<SimilitudeChart>(p, family.kind);
      check_finite(q.log_scale, "log scale");
      check_finite(q.angle, "angle");
      const double r = std::exp(q.log_scale);
      const double a = r * std::cos(q.angle);
      const double b = r * std::sin(q.angle);
      return {a, b, -b, a};
    }
    case FamilyKind::diagonal: {
      const auto& q = expect_chart<DiagonalChart>(p, family.kind);
      check_finite(q.log_scale1, "log scale 1");
      check_finite(q.log_scale2, "log scale 2");
      check_sign(q.sign1);
      check_sign(q.sign2);
      return Mat2::diag(q.sign1 * std::exp(q.log_scale1), q.sign2 * std::exp(q.log_scale2));
    }
    case FamilyKind::shearlet: {
      const auto& q = expect_chart<ShearletChart>(p, family.kind);
      check_finite(q.log_scale, "log scale");
      check_finite(q.shear, "shear");
      check_sign(q.sign);
      const double e = q.sign;
      return {e * std::exp(q.log_scale), e * q.shear, 0.0, e * std::exp(family.c * q.log_scale)};
    }
  }
  throw Error(ErrorKind::family_mismatch, "unknown family");
}

Mat2 element_from_chart(const GroupSpec& spec, const ChartPoint& p) {
  return spec.from_standard(standard_element(spec.family(), p));
}

std::optional<ChartPoint> chart_from_element(const GroupSpec& spec, const Mat2& m, double tol) {
  if (!contains(spec, m, tol)) return std::nullopt;
  const Mat2 s = spec.to_standard(m);
  switch (spec.kind()) {
    case FamilyKind::similitude:
      return SimilitudeChart{std::log(std::hypot(s.m11, s.m12)), wrap_two_pi(std::atan2(s.m12, s.m11))};
    case FamilyKind::diagonal:
      return DiagonalChart{std::log(std::abs(s.m11)), std::log(std::abs(s.m22)), s.m11 > 0 ? 1 : -1,
                           s.m22 > 0 ? 1 : -1};
    case FamilyKind::shearlet: {
      const int e = s.m11 > 0 ? 1 : -1;
      return ShearletChart{e, std::log(std::abs(s.m11)), e * s.m12};
    }
  }
  return std::nullopt;
}

double haar_weight(const GroupSpec& spec, const ChartPoint& p) {
  switch (spec.kind()) {
    case FamilyKind::similitude:
      expect_chart<SimilitudeChart>(p, spec.kind());
      return 1.0;
    case FamilyKind::diagonal:
      expect_chart<DiagonalChart>(p, spec.kind());
      return 1.0;
    case FamilyKind::shearlet:
      return std::exp(-expect_chart<ShearletChart>(p, spec.kind()).log_scale);
  }
  return 1.0;
}

double g_weight(const GroupSpec& spec, const ChartPoint& p) {
  // det is conjugation invariant, so use the standard element directly.
  return haar_weight(spec, p) / std::abs(standard_element(spec.family(), p).det());
}

AffineElement group_product(const AffineElement& a, const AffineElement& b) {
  require_invertible(a.dilation, "left dilation");
  require_invertible(b.dilation, "right dilation");
  return {a.translation + a.dilation * b.translation, a.dilation * b.dilation};
}

AffineElement group_inverse(const AffineElement& a) {
  const Mat2 inv = a.dilation.inverse();
  return {-(inv * a.translation), inv};
}

bool contains(const GroupSpec& spec, const Mat2& m, double tol) {
  require_invertible(m, "matrix");
  const Mat2 s = spec.to_standard(m);
  const double scale = s.max_abs();
  switch (spec.kind()) {
    case FamilyKind::similitude:
      return close(s.m11, s.m22, tol, scale) && close(s.m12, -s.m21, tol, scale);
    case FamilyKind::diagonal:
      return close(s.m12, 0.0, tol, scale) && close(s.m21, 0.0, tol, scale) &&
             std::abs(s.m11) > tol * scale && std::abs(s.m22) > tol * scale;
    case FamilyKind::shearlet: {
      if (!close(s.m21, 0.0, tol, scale)) return false;
      if (std::abs(s.m11) <= tol * scale || std::abs(s.m22) <= tol * scale) return false;
      if ((s.m11 > 0) != (s.m22 > 0)) return false;
      const double expected = std::pow(std::abs(s.m11), spec.family().c);
      return close(std::abs(s.m22), expected, tol, std::max(std::abs(s.m22), expected));
    }
  }
  return false;
}

std::vector<Mat2> lie_algebra_basis(const GroupSpec& spec) {
  std::vector<Mat2> basis;
  switch (spec.kind()) {
    case FamilyKind::similitude: basis = {Mat2::identity(), Mat2{0.0, 1.0, -1.0, 0.0}}; break;
    case FamilyKind::diagonal: basis = {Mat2::diag(1.0, 0.0), Mat2::diag(0.0, 1.0)}; break;
    case FamilyKind::shearlet: basis = {Mat2::diag(1.0, spec.family().c), Mat2{0.0, 1.0, 0.0, 0.0}}; break;
  }
  for (auto& x : basis) x = spec.from_standard(x);
  return basis;
}

std::vector<Mat2> component_representatives(const GroupSpec& spec) {
  std::vector<Mat2> reps;
  switch (spec.kind()) {
    case FamilyKind::similitude: reps = {Mat2::identity()}; break;
    case FamilyKind::diagonal:
      reps = {Mat2::diag(1, 1), Mat2::diag(1, -1), Mat2::diag(-1, 1), Mat2::diag(-1, -1)};
      break;
    case FamilyKind::shearlet: reps = {Mat2::identity(), Mat2::diag(-1, -1)}; break;
  }
  for (auto& g : reps) g = spec.from_standard(g);
  return reps;
}

}  // namespace coorbit2d
