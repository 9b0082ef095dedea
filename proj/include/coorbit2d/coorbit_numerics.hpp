#pragma once

// Continuous wavelet analysis over sampled dilation-group charts.
//
// For each sampled h the coefficient plane is
//   W f(., h) = IDFT[ f-hat * |det h|^{1/2} * conj(psi-hat(h^T xi)) ],
// with psi-hat evaluated in closed form. Quadrature weights come from the
// sampling: haar = haar_weight * volume for Calderon sums, g = haar / |det h|
// for integrals against the Haar measure of R^2 x| H.
//
// Planes are independent; work is split into fixed-size chunks of chart
// points and reduced in index order, so results do not depend on the thread
// count.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coorbit2d/grid.hpp"
#include "coorbit2d/sampling.hpp"
#include "coorbit2d/test_signals.hpp"
#include "coorbit2d/wavelet.hpp"

namespace coorbit2d {

/// Worker count: COORBIT2D_THREADS if set (>= 1), else hardware concurrency.
unsigned default_thread_count();

struct CoeffSlab {
  std::size_t n = 0;
  double extent = 0.0;
  GroupSampling sampling;
  std::vector<std::vector<cplx>> planes;  // one n*n plane per sampled point
  std::vector<std::string> warnings;

  double spacing() const { return extent / static_cast<double>(n); }
  double max_modulus() const;
};

CoeffSlab analyze(const GridSignal& f, const GroupSpec& spec, const GroupSampling& sampling, const WaveletSpec& psi,
                  unsigned threads = 0);

/// (sum_h g_h sum_x |W(x,h)|^p dx)^{1/p}; p = infinity gives the max modulus.
double coorbit_norm(const CoeffSlab& slab, double p);

/// Per-plane sum_x |W(x,h)|^2 dx.
std::vector<double> plane_energies(const CoeffSlab& slab);

struct CalderonResult {
  double mean = 0.0;
  double relative_deviation = 0.0;  // max |C(xi) - mean| / mean
  std::vector<double> values;
};

/// C(xi) = sum_h haar_h |psi-hat(h^T xi)|^2 at every sample.
CalderonResult calderon_constant(const GroupSpec& spec, const WaveletSpec& psi, std::span<const Vec2> xi_samples,
                                 const GroupSampling& sampling);
/// 16 orbit-interior frequencies (fixed in standard coordinates, mapped by B^{-T}).
std::vector<Vec2> default_calderon_samples(const GroupSpec& spec);

/// (1/C) sum_h g_h IDFT[ DFT(W(., h)) * |det h|^{1/2} psi-hat(h^T xi) ].
GridSignal invert(const CoeffSlab& slab, const GroupSpec& spec, const WaveletSpec& psi, double calderon);

/// Single-pass analysis that never stores planes: norms for each requested p
/// and, when calderon is given, the reconstruction.
struct StreamResult {
  std::vector<double> norms;
  std::optional<GridSignal> reconstruction;
  std::vector<std::string> warnings;
};
StreamResult stream_analysis(const GridSignal& f, const GroupSpec& spec, const GroupSampling& sampling,
                             const WaveletSpec& psi, std::span<const double> ps,
                             std::optional<double> calderon = std::nullopt, unsigned threads = 0);

struct CovarianceCase {
  Vec2 translation;                   // y
  Mat2 dilation = Mat2::identity();   // g, must lie in the group
  ChartPoint at;                      // h
};

/// max_x |W(pi(y,g) f)(x,h) - W f(g^{-1}(x - y), g^{-1} h)| / max_x |W(pi(y,g) f)(x,h)|.
double covariance_residual(const TestSignal& f, const CovarianceCase& c, const GroupSpec& spec,
                           const WaveletSpec& psi);

struct NormRatioRow {
  double norm1 = 0.0;
  double norm2 = 0.0;
  double ratio = 0.0;
  bool degenerate = false;  // 0/0 or a zero denominator
};

struct NormRatioProfile {
  std::vector<NormRatioRow> rows;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double spread = 0.0;  // max / min over non-degenerate rows
};

struct GroupSetup {
  GroupSpec spec;
  GroupSampling sampling;
  WaveletSpec psi;
};

NormRatioProfile norm_ratio_profile(const GroupSetup& g1, const GroupSetup& g2, double p,
                                    std::span<const TestSignal> signals, unsigned threads = 0);

}  // namespace coorbit2d
