#include "coorbit2d/orbit_classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "coorbit2d/error.hpp"

namespace coorbit2d {

namespace {

constexpr double kPi = std::numbers::pi;

// Standard complements: axes for the diagonal group, the vertical axis for shearlets.
std::vector<Vec2> standard_complement_directions(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::similitude: return {};
    case FamilyKind::diagonal: return {{1.0, 0.0}, {0.0, 1.0}};
    case FamilyKind::shearlet: return {{0.0, 1.0}};
  }
  return {};
}

// Residual of projecting x onto span(basis), relative to |x|.
double span_residual(const std::vector<Mat2>& basis, const Mat2& x) {
  const auto v0 = basis[0].entries();
  const auto v1 = basis[1].entries();
  const auto xv = x.entries();
  auto dot = [](const std::array<double, 4>& a, const std::array<double, 4>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
  };
  const double g00 = dot(v0, v0), g01 = dot(v0, v1), g11 = dot(v1, v1);
  const double r0 = dot(v0, xv), r1 = dot(v1, xv);
  const double det = g00 * g11 - g01 * g01;
  const double c0 = (g11 * r0 - g01 * r1) / det;
  const double c1 = (g00 * r1 - g01 * r0) / det;
  double res = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double d = xv[i] - c0 * v0[i] - c1 * v1[i];
    res += d * d;
  }
  const double norm = std::sqrt(dot(xv, xv));
  return norm == 0.0 ? 0.0 : std::sqrt(res) / norm;
}

std::string fmt_angles(const LineSet& l) {
  std::ostringstream os;
  os.precision(17);
  os << "{";
  for (std::size_t i = 0; i < l.size(); ++i) os << (i ? ", " : "") << l.angles()[i];
  os << "}";
  return os.str();
}

}  // namespace

double wrap_pi(double angle) {
  double a = std::fmod(angle, kPi);
  if (a < 0.0) a += kPi;
  if (a >= kPi) a = 0.0;
  return a;
}

double line_distance(double a, double b) {
  const double d = std::abs(wrap_pi(a) - wrap_pi(b));
  return std::min(d, kPi - d);
}

double line_angle(const Vec2& v) {
  if (v.norm() == 0.0 || !std::isfinite(v.x) || !std::isfinite(v.y)) {
    throw Error(ErrorKind::degenerate_input, "zero vector does not span a line");
  }
  return wrap_pi(std::atan2(v.y, v.x));
}

LineSet::LineSet(std::vector<double> angles, double tol) : angles_(std::move(angles)) {
  if (angles_.size() > 2) throw Error(ErrorKind::degenerate_input, "a line set holds at most two lines");
  for (auto& a : angles_) {
    if (!std::isfinite(a)) throw Error(ErrorKind::degenerate_input, "line angle must be finite");
    a = wrap_pi(a);
  }
  std::sort(angles_.begin(), angles_.end());
  if (angles_.size() == 2 && line_distance(angles_[0], angles_[1]) <= tol) {
    throw Error(ErrorKind::degenerate_input, "coincident lines");
  }
}

bool LineSet::equals(const LineSet& other, double tol) const {
  if (size() != other.size()) return false;
  if (size() == 0) return true;
  if (size() == 1) return line_distance(angles_[0], other.angles_[0]) <= tol;
  const auto& a = angles_;
  const auto& b = other.angles_;
  const bool straight = line_distance(a[0], b[0]) <= tol && line_distance(a[1], b[1]) <= tol;
  const bool crossed = line_distance(a[0], b[1]) <= tol && line_distance(a[1], b[0]) <= tol;
  return straight || crossed;
}

LineSet LineSet::mapped(const Mat2& m) const {
  require_invertible(m, "line map");
  std::vector<double> out;
  for (double a : angles_) out.push_back(line_angle(m * Vec2{std::cos(a), std::sin(a)}));
  return LineSet(std::move(out), 0.0);
}

LineSet orbit_complement(const GroupSpec& spec) {
  // O = B^{-T} O_std, so the complement lines are images of the standard ones.
  const Mat2 map = spec.conjugator().inverse_transpose();
  std::vector<double> angles;
  for (const auto& d : standard_complement_directions(spec.kind())) angles.push_back(line_angle(map * d));
  return LineSet(std::move(angles), 0.0);
}

int component_count(const GroupSpec& spec) {
  switch (spec.kind()) {
    case FamilyKind::similitude: return 1;
    case FamilyKind::diagonal: return 4;
    case FamilyKind::shearlet: return 2;
  }
  return 0;
}

bool orbit_contains(const GroupSpec& spec, const Vec2& zeta, double tol) {
  const Vec2 eta = spec.conjugator().transpose() * zeta;
  const double r = eta.norm();
  if (!(r > 0.0) || !std::isfinite(r)) return false;
  for (const auto& d : standard_complement_directions(spec.kind())) {
    // distance from eta to the line R d, d a unit coordinate vector
    const double dist = std::abs(eta.x * d.y - eta.y * d.x);
    if (dist <= tol * r) return false;
  }
  return true;
}

DiagonalForm lines_to_phi_s(const LineSet& lines, double tol) {
  if (lines.size() != 2) throw Error(ErrorKind::degenerate_input, "lines_to_phi_s needs exactly two lines");
  const double a1 = lines.angles()[0];
  const double a2 = lines.angles()[1];
  const double gap = a2 - a1;
  const double theta = std::min(gap, kPi - gap);
  if (theta <= tol) throw Error(ErrorKind::degenerate_input, "coincident lines");
  double s = std::max(0.0, std::cos(theta) / std::sin(theta));
  if (s < 1e-14) s = 0.0;  // perpendicular lines: drop cot rounding noise
  // S_s sends the x-axis to angle 0 and the y-axis to beta; R_phi subtracts phi.
  const double beta = std::atan2(1.0, s);
  const LineSet target = lines;
  double best = -1.0;
  for (double phi : {wrap_pi(-a1), wrap_pi(-a2)}) {
    const LineSet image({wrap_pi(-phi), wrap_pi(beta - phi)}, 0.0);
    if (image.equals(target, tol) && (best < 0.0 || phi < best)) best = phi;
  }
  if (best < 0.0) throw Error(ErrorKind::numeric, "no rotation angle maps the sheared axes onto the lines");
  return {best + 0.0, s};  // +0.0 clears a negative zero
}

Mat2 diagonal_cross_section(double phi, double s) { return rotation(phi) * Mat2{1.0, 0.0, -s, 1.0}; }

CanonicalForm canonicalize(const GroupSpec& spec) {
  switch (spec.kind()) {
    case FamilyKind::similitude: return SimilitudeForm{};
    case FamilyKind::diagonal: return lines_to_phi_s(orbit_complement(spec));
    case FamilyKind::shearlet: {
      const double alpha = orbit_complement(spec).angles()[0];
      return ShearletForm{wrap_pi(kPi / 2 - alpha) + 0.0, spec.family().c};
    }
  }
  return SimilitudeForm{};
}

GroupSpec rep_group(const CanonicalForm& cf) {
  auto check_phi = [](double phi) {
    if (!std::isfinite(phi) || phi < 0.0 || phi >= kPi) {
      throw Error(ErrorKind::out_of_range, "canonical angle phi must lie in [0, pi)");
    }
  };
  if (std::holds_alternative<SimilitudeForm>(cf)) return GroupSpec(Family::similitude());
  if (const auto* d = std::get_if<DiagonalForm>(&cf)) {
    check_phi(d->phi);
    if (!std::isfinite(d->s) || d->s < 0.0) throw Error(ErrorKind::out_of_range, "shear parameter s must be >= 0");
    return GroupSpec(Family::diagonal(), diagonal_cross_section(d->phi, d->s));
  }
  const auto& sh = std::get<ShearletForm>(cf);
  check_phi(sh.phi);
  return GroupSpec(Family::shearlet(sh.c), rotation(sh.phi));
}

bool canonical_equal(const CanonicalForm& a, const CanonicalForm& b, double tol) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<SimilitudeForm>(a)) return true;
  if (const auto* da = std::get_if<DiagonalForm>(&a)) {
    const auto& db = std::get<DiagonalForm>(b);
    return line_distance(da->phi, db.phi) <= tol && std::abs(da->s - db.s) <= tol * std::max(1.0, da->s);
  }
  const auto& sa = std::get<ShearletForm>(a);
  const auto& sb = std::get<ShearletForm>(b);
  return line_distance(sa.phi, sb.phi) <= tol && std::abs(sa.c - sb.c) <= tol;
}

std::string describe(const CanonicalForm& cf) {
  std::ostringstream os;
  os.precision(17);
  if (std::holds_alternative<SimilitudeForm>(cf)) {
    os << "Similitude";
  } else if (const auto* d = std::get_if<DiagonalForm>(&cf)) {
    os << "Diagonal(phi=" << d->phi << ", s=" << d->s << ")";
  } else {
    const auto& s = std::get<ShearletForm>(cf);
    os << "Shearlet(phi=" << s.phi << ", c=" << s.c << ")";
  }
  return os.str();
}

EquivalenceVerdict coorbit_equivalent(const GroupSpec& a, const GroupSpec& b, double tol) {
  EquivalenceVerdict v;
  v.component_counts = {component_count(a), component_count(b)};
  v.complements = {orbit_complement(a), orbit_complement(b)};
  v.canonicals = {canonicalize(a), canonicalize(b)};

  std::ostringstream why;
  why.precision(17);
  if (v.component_counts.first != v.component_counts.second) {
    why << "dual orbits have " << v.component_counts.first << " vs " << v.component_counts.second
        << " connected components";
  } else if (!v.complements.first.equals(v.complements.second, tol)) {
    why << "orbit complements differ: " << fmt_angles(v.complements.first) << " vs "
        << fmt_angles(v.complements.second);
  } else if (v.component_counts.first == 2 && std::abs(a.family().c - b.family().c) > tol) {
    why << "same dual orbit but identity components differ: shearlet exponents " << a.family().c << " vs "
        << b.family().c;
  } else {
    v.equivalent = true;
    why << "dual orbits coincide (" << v.component_counts.first << " component"
        << (v.component_counts.first == 1 ? "" : "s") << ", complement " << fmt_angles(v.complements.first) << ")";
    if (v.component_counts.first == 2) why << " and shearlet exponents agree";
  }
  v.reason = why.str();
  return v;
}

bool in_orbit_symmetry(const GroupSpec& spec, const Mat2& a, double tol) {
  require_invertible(a, "symmetry candidate");
  const LineSet comp = orbit_complement(spec);
  return comp.mapped(a.transpose()).equals(comp, tol);
}

bool in_normalizer(const GroupSpec& spec, const Mat2& a, double tol) {
  require_invertible(a, "symmetry candidate");
  const Mat2 a_inv = a.inverse();
  const auto basis = lie_algebra_basis(spec);
  for (const auto& x : basis) {
    if (span_residual(basis, a * x * a_inv) > tol) return false;
  }
  for (const auto& g : component_representatives(spec)) {
    if (!contains(spec, a * g * a_inv, tol)) return false;
  }
  return true;
}

bool in_coorbit_symmetry(const GroupSpec& spec, const Mat2& a, double tol) {
  require_invertible(a, "symmetry candidate");
  return coorbit_equivalent(spec.conjugated(a), spec, tol).equivalent;
}

SymmetryMembership symmetry_membership(const GroupSpec& spec, const Mat2& a, double tol) {
  return {in_normalizer(spec, a, tol), in_coorbit_symmetry(spec, a, tol), in_orbit_symmetry(spec, a, tol)};
}

}  // namespace coorbit2d
