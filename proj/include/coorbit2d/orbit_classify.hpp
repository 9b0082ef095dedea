#pragma once

// Dual orbits, canonical forms and coorbit-equivalence decisions.
//
// Every group handled here has an open dual orbit whose complement is a union
// of 0, 1 or 2 lines through the origin. Lines are stored by their angle in
// [0, pi); two angles are compared in the metric min(|a - b|, pi - |a - b|).

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coorbit2d/group_model.hpp"

namespace coorbit2d {

/// Distance between two lines given by angles, in the quotient R / pi Z.
double line_distance(double a, double b);
/// Angle in [0, pi) of the line spanned by v (v must be nonzero).
double line_angle(const Vec2& v);
/// Reduce an angle into [0, pi).
double wrap_pi(double angle);

class LineSet {
 public:
  LineSet() = default;
  /// Normalizes into [0, pi), sorts; throws degenerate_input on duplicates within tol.
  explicit LineSet(std::vector<double> angles, double tol = kDefaultTol);

  const std::vector<double>& angles() const { return angles_; }
  std::size_t size() const { return angles_.size(); }
  bool empty() const { return angles_.empty(); }

  /// Set equality under the line metric.
  bool equals(const LineSet& other, double tol = kDefaultTol) const;
  /// Image of every line under the linear map m.
  LineSet mapped(const Mat2& m) const;

 private:
  std::vector<double> angles_;
};

struct SimilitudeForm {};
struct DiagonalForm {
  double phi = 0.0;
  double s = 0.0;
};
struct ShearletForm {
  double phi = 0.0;
  double c = 0.0;
};
using CanonicalForm = std::variant<SimilitudeForm, DiagonalForm, ShearletForm>;

bool canonical_equal(const CanonicalForm& a, const CanonicalForm& b, double tol = kDefaultTol);
std::string describe(const CanonicalForm& cf);

struct EquivalenceVerdict {
  bool equivalent = false;
  std::pair<int, int> component_counts;
  std::pair<LineSet, LineSet> complements;
  std::pair<CanonicalForm, CanonicalForm> canonicals;
  std::string reason;
};

LineSet orbit_complement(const GroupSpec& spec);
int component_count(const GroupSpec& spec);
bool orbit_contains(const GroupSpec& spec, const Vec2& zeta, double tol = kDefaultTol);

/// (phi, s) with R_phi S_s mapping the coordinate axes onto the two lines.
/// For a perpendicular pair both admissible phi values are returned as the smaller one.
DiagonalForm lines_to_phi_s(const LineSet& lines, double tol = kDefaultTol);

CanonicalForm canonicalize(const GroupSpec& spec);
GroupSpec rep_group(const CanonicalForm& cf);
/// A_{phi,s} = (R_phi S_s)^{-T} = R_phi [[1, 0], [-s, 1]]
Mat2 diagonal_cross_section(double phi, double s);

EquivalenceVerdict coorbit_equivalent(const GroupSpec& a, const GroupSpec& b, double tol = kDefaultTol);

bool in_orbit_symmetry(const GroupSpec& spec, const Mat2& a, double tol = kDefaultTol);
bool in_normalizer(const GroupSpec& spec, const Mat2& a, double tol = kDefaultTol);
bool in_coorbit_symmetry(const GroupSpec& spec, const Mat2& a, double tol = kDefaultTol);

struct SymmetryMembership {
  bool normalizer = false;
  bool coorbit = false;
  bool orbit = false;
};
SymmetryMembership symmetry_membership(const GroupSpec& spec, const Mat2& a, double tol = kDefaultTol);

}  // namespace coorbit2d
