#include "coorbit2d/wavelet.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "coorbit2d/error.hpp"
#include "coorbit2d/orbit_classify.hpp"

namespace coorbit2d {

double smooth_bump(double t) {
  if (!(std::abs(t) < 1.0)) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

double WaveletSpec::profile(const Vec2& eta) const {
  auto radial = [this](double r) {
    if (!(r > 0.0)) return 0.0;
    return smooth_bump(std::log2(r / center_scale) / bandwidth);
  };
  switch (group.kind()) {
    case FamilyKind::similitude: return amplitude * radial(eta.norm());
    case FamilyKind::diagonal: {
      const double a = radial(std::abs(eta.x));
      return a == 0.0 ? 0.0 : amplitude * a * radial(std::abs(eta.y));
    }
    case FamilyKind::shearlet: {
      const double a = radial(std::abs(eta.x));
      return a == 0.0 ? 0.0 : amplitude * a * smooth_bump(eta.y / eta.x);
    }
  }
  return 0.0;
}

WaveletSpec default_wavelet(const GroupSpec& spec) {
  WaveletSpec psi(spec);
  validate_wavelet(psi);
  return psi;
}

void validate_wavelet(const WaveletSpec& psi) {
  if (!(psi.center_scale > 0.0) || !std::isfinite(psi.center_scale)) {
    throw Error(ErrorKind::out_of_range, "wavelet center scale must be > 0");
  }
  if (!(psi.bandwidth > 0.0) || !std::isfinite(psi.bandwidth)) {
    throw Error(ErrorKind::out_of_range, "wavelet bandwidth must be > 0");
  }
  if (!std::isfinite(psi.amplitude)) throw Error(ErrorKind::out_of_range, "wavelet amplitude must be finite");

  // Support boundary in standard coordinates, mapped into frequency space.
  const double lo = psi.center_scale * std::exp2(-psi.bandwidth);
  const double hi = psi.center_scale * std::exp2(psi.bandwidth);
  std::vector<Vec2> boundary;
  constexpr int kSteps = 16;
  for (int k = 0; k < kSteps; ++k) {
    const double t = static_cast<double>(k) / kSteps;
    switch (psi.group.kind()) {
      case FamilyKind::similitude: {
        const double a = 2.0 * std::numbers::pi * t;
        boundary.push_back({lo * std::cos(a), lo * std::sin(a)});
        boundary.push_back({hi * std::cos(a), hi * std::sin(a)});
        break;
      }
      case FamilyKind::diagonal: {
        const double r = lo + (hi - lo) * t;
        for (double sx : {-1.0, 1.0}) {
          for (double sy : {-1.0, 1.0}) {
            boundary.push_back({sx * lo, sy * r});
            boundary.push_back({sx * r, sy * lo});
          }
        }
        break;
      }
      case FamilyKind::shearlet: {
        const double r = lo + (hi - lo) * t;
        for (double sx : {-1.0, 1.0}) {
          boundary.push_back({sx * lo, sx * lo * (2.0 * t - 1.0)});
          boundary.push_back({sx * r, sx * r});
          boundary.push_back({sx * r, -sx * r});
        }
        break;
      }
    }
  }
  const Mat2 to_xi = psi.group.conjugator().inverse_transpose();
  for (const auto& eta : boundary) {
    if (!orbit_contains(psi.group, to_xi * eta)) {
      throw Error(ErrorKind::out_of_range, "wavelet spectrum support leaves the dual orbit");
    }
  }
}

}  // namespace coorbit2d
