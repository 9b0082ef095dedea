#pragma once

// Band-limited wavelets with smooth compactly supported spectra inside the
// dual orbit. The profile is defined in standard coordinates eta = B^T xi.

#include "coorbit2d/group_model.hpp"

namespace coorbit2d {

/// exp(1 - 1/(1 - t^2)) on |t| < 1, zero elsewhere; peak value 1 at t = 0.
double smooth_bump(double t);

struct WaveletSpec {
  GroupSpec group;
  double center_scale = 1.0;  // |eta| (or |eta_i|) at the bump peak
  double bandwidth = 1.0;     // half-width of the radial bump in octaves
  double amplitude = 1.0;

  explicit WaveletSpec(GroupSpec g) : group(std::move(g)) {}

  /// Spectrum profile at standard-coordinate frequency eta.
  double profile(const Vec2& eta) const;
  /// psi-hat(xi) = profile(B^T xi)
  double evaluate(const Vec2& xi) const { return profile(group.conjugator().transpose() * xi); }
  /// psi-hat(h^T xi) for h = B h_std B^{-1}, given eta = B^T xi.
  double dilated(const Mat2& h_std, const Vec2& eta) const { return profile(h_std.transpose() * eta); }
};

/// Profiles rho(log2|eta|), rho(log2|eta1|) rho(log2|eta2|), rho(log2|eta1|) rho(eta2/eta1).
WaveletSpec default_wavelet(const GroupSpec& spec);

/// Throws out_of_range on bad parameters or when sampled support boundary points
/// fall outside the dual orbit.
void validate_wavelet(const WaveletSpec& psi);

}  // namespace coorbit2d
