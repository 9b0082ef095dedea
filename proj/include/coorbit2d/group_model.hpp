#pragma once

// Admissible dilation groups in the plane: the similitude, diagonal and
// shearlet families, optionally conjugated by an invertible matrix B so that
// the represented group is B * H_std * B^{-1}.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coorbit2d/linalg.hpp"

namespace coorbit2d {

inline constexpr double kDefaultTol = 1e-9;

enum class FamilyKind { similitude, diagonal, shearlet };

struct Family {
  FamilyKind kind = FamilyKind::similitude;
  double c = 0.0;  // anisotropy exponent, meaningful only for shearlet

  static Family similitude() { return {FamilyKind::similitude, 0.0}; }
  static Family diagonal() { return {FamilyKind::diagonal, 0.0}; }
  static Family shearlet(double c);

  std::string name() const;
  bool operator==(const Family&) const = default;
};

std::string to_string(FamilyKind kind);

class GroupSpec {
 public:
  explicit GroupSpec(Family family, const Mat2& conjugator = Mat2::identity());

  const Family& family() const { return family_; }
  FamilyKind kind() const { return family_.kind; }
  const Mat2& conjugator() const { return conjugator_; }
  const Mat2& conjugator_inverse() const { return conjugator_inv_; }

  /// A * H * A^{-1}, i.e. the same family with conjugator A * B.
  GroupSpec conjugated(const Mat2& a) const;

  /// B^{-1} M B
  Mat2 to_standard(const Mat2& m) const { return conjugator_inv_ * m * conjugator_; }
  /// B M B^{-1}
  Mat2 from_standard(const Mat2& m) const { return conjugator_ * m * conjugator_inv_; }

 private:
  Family family_;
  Mat2 conjugator_;
  Mat2 conjugator_inv_;
};

struct SimilitudeChart {
  double log_scale = 0.0;
  double angle = 0.0;
};

struct DiagonalChart {
  double log_scale1 = 0.0;
  double log_scale2 = 0.0;
  int sign1 = 1;
  int sign2 = 1;
};

struct ShearletChart {
  int sign = 1;
  double log_scale = 0.0;
  double shear = 0.0;
};

using ChartPoint = std::variant<SimilitudeChart, DiagonalChart, ShearletChart>;

FamilyKind chart_family(const ChartPoint& p);

/// h^{-T} zeta
Vec2 dual_action(const Mat2& h, const Vec2& zeta);

/// Element of the standard (unconjugated) family at chart point p.
Mat2 standard_element(const Family& family, const ChartPoint& p);
Mat2 element_from_chart(const GroupSpec& spec, const ChartPoint& p);

/// Inverse of element_from_chart; nullopt when m is not in the group within tol.
std::optional<ChartPoint> chart_from_element(const GroupSpec& spec, const Mat2& m, double tol = kDefaultTol);

/// Left Haar density of H in chart coordinates (1, 1, e^{-lambda}).
double haar_weight(const GroupSpec& spec, const ChartPoint& p);
/// h-marginal density of the left Haar measure of R^2 x| H: haar_weight / |det h|.
double g_weight(const GroupSpec& spec, const ChartPoint& p);

/// Element (x, h) of the affine group R^2 x| H.
struct AffineElement {
  Vec2 translation;
  Mat2 dilation = Mat2::identity();
};

/// (x, h) o (y, g) = (x + h y, h g)
AffineElement group_product(const AffineElement& a, const AffineElement& b);
/// (x, h)^{-1} = (-h^{-1} x, h^{-1})
AffineElement group_inverse(const AffineElement& a);

bool contains(const GroupSpec& spec, const Mat2& m, double tol = kDefaultTol);

std::vector<Mat2> lie_algebra_basis(const GroupSpec& spec);

/// One element per connected component (conjugated): {I}, {diag(+-1, +-1)}, {+-I}.
std::vector<Mat2> component_representatives(const GroupSpec& spec);

}  // namespace coorbit2d
