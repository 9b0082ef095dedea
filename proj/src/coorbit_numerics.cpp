#include "coorbit2d/coorbit_numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "coorbit2d/error.hpp"
#include "coorbit2d/fft.hpp"
#include "coorbit2d/orbit_classify.hpp"

namespace coorbit2d {

namespace {

constexpr std::size_t kChunk = 32;
constexpr double kEdgeRelTol = 1e-12;

template <class Fn>
void parallel_chunks(std::size_t items, unsigned threads, Fn&& fn) {
  const std::size_t chunks = (items + kChunk - 1) / kChunk;
  if (chunks == 0) return;
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        fn(c, c * kChunk, std::min(items, (c + 1) * kChunk));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

void check_p(double p) {
  if (!(p > 0.0)) throw Error(ErrorKind::out_of_range, "exponent p must be > 0");
}

void check_setup(const GridSignal& f, const GroupSpec& spec, const GroupSampling& sampling, const WaveletSpec& psi) {
  f.validate();
  if (sampling.points.empty()) throw Error(ErrorKind::out_of_range, "group sampling is empty");
  if (!(sampling.family == spec.family())) throw Error(ErrorKind::family_mismatch, "sampling family does not match group");
  if (!(psi.group.family() == spec.family()) ||
      relative_distance(psi.group.conjugator(), spec.conjugator()) > kDefaultTol) {
    throw Error(ErrorKind::family_mismatch, "wavelet belongs to a different group");
  }
}

// Frequency grid in standard coordinates, eta_k = B^T xi_k.
std::vector<Vec2> standard_frequencies(std::size_t n, double extent, const GroupSpec& spec) {
  GridSignal probe;
  probe.n = n;
  probe.extent = extent;
  const Mat2 bt = spec.conjugator().transpose();
  std::vector<Vec2> eta(n * n);
  for (std::size_t k1 = 0; k1 < n; ++k1) {
    for (std::size_t k2 = 0; k2 < n; ++k2) eta[k1 * n + k2] = bt * probe.frequency(k1, k2);
  }
  return eta;
}

struct Multiplier {
  std::vector<double> values;  // |det h|^{1/2} psi-hat(h^T xi_k)
  bool any = false;
  bool edge = false;
};

void fill_multiplier(const WaveletSpec& psi, const SampledPoint& sp, const std::vector<Vec2>& eta, std::size_t n,
                     Multiplier& m) {
  m.values.resize(eta.size());
  m.any = false;
  m.edge = false;
  const double root_det = std::sqrt(std::abs(sp.standard.det()));
  const Mat2 ht = sp.standard.transpose();
  const double edge_level = kEdgeRelTol * std::abs(psi.amplitude);
  for (std::size_t k = 0; k < eta.size(); ++k) {
    const double v = psi.profile(ht * eta[k]);
    m.values[k] = root_det * v;
    if (v != 0.0) {
      m.any = true;
      const std::size_t r = k / n, c = k % n;
      const bool on_edge = r == n / 2 || c == n / 2 || r == n / 2 - 1 || c == n / 2 - 1;
      if (on_edge && std::abs(v) > edge_level) m.edge = true;
    }
  }
}

std::vector<cplx> forward(const GridSignal& f) {
  std::vector<cplx> fhat = f.data;
  fft2d_forward(fhat, f.n);
  return fhat;
}

// Writes plane = IDFT(fhat * m) and spectrum = fhat * m.
void compute_plane(const std::vector<cplx>& fhat, const Multiplier& m, std::size_t n, std::vector<cplx>& spectrum,
                   std::vector<cplx>& plane) {
  spectrum.resize(fhat.size());
  plane.resize(fhat.size());
  if (!m.any) {
    std::fill(spectrum.begin(), spectrum.end(), cplx{});
    std::fill(plane.begin(), plane.end(), cplx{});
    return;
  }
  for (std::size_t k = 0; k < fhat.size(); ++k) spectrum[k] = fhat[k] * m.values[k];
  plane = spectrum;
  fft2d_inverse(plane, n);
}

double plane_power_sum(const std::vector<cplx>& plane, double p, double cell) {
  if (std::isinf(p)) {
    double mx = 0.0;
    for (const auto& v : plane) mx = std::max(mx, std::abs(v));
    return mx;
  }
  double sum = 0.0;
  if (p == 2.0) {
    for (const auto& v : plane) sum += std::norm(v);
  } else {
    for (const auto& v : plane) sum += std::pow(std::abs(v), p);
  }
  return sum * cell;
}

double finish_norm(const std::vector<double>& per_plane, const GroupSampling& sampling, double p) {
  if (std::isinf(p)) {
    double mx = 0.0;
    for (double v : per_plane) mx = std::max(mx, v);
    return mx;
  }
  double total = 0.0;
  for (std::size_t h = 0; h < per_plane.size(); ++h) total += sampling.points[h].g * per_plane[h];
  return std::pow(total, 1.0 / p);
}

std::string edge_warning(std::size_t count, std::size_t total) {
  return "wavelet support exceeds the grid frequency box for " + std::to_string(count) + " of " +
         std::to_string(total) + " sampled dilations";
}

GridSignal finish_reconstruction(std::vector<std::vector<cplx>>& chunk_acc, std::size_t n, double extent,
                                 double calderon) {
  GridSignal out(n, extent);
  for (const auto& acc : chunk_acc) {
    if (acc.empty()) continue;
    for (std::size_t k = 0; k < acc.size(); ++k) out.data[k] += acc[k];
  }
  fft2d_inverse(out.data, n);
  for (auto& v : out.data) v /= calderon;
  return out;
}

void check_calderon(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw Error(ErrorKind::out_of_range, "Calderon constant must be > 0");
}

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("COORBIT2D_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

double CoeffSlab::max_modulus() const {
  double mx = 0.0;
  for (const auto& plane : planes) {
    for (const auto& v : plane) mx = std::max(mx, std::abs(v));
  }
  return mx;
}

CoeffSlab analyze(const GridSignal& f, const GroupSpec& spec, const GroupSampling& sampling, const WaveletSpec& psi,
                  unsigned threads) {
  check_setup(f, spec, sampling, psi);
  CoeffSlab slab;
  slab.n = f.n;
  slab.extent = f.extent;
  slab.sampling = sampling;
  slab.planes.resize(sampling.size());
  const auto fhat = forward(f);
  const auto eta = standard_frequencies(f.n, f.extent, spec);
  std::atomic<std::size_t> edge_count{0};
  parallel_chunks(sampling.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    Multiplier m;
    std::vector<cplx> spectrum;
    for (std::size_t h = begin; h < end; ++h) {
      fill_multiplier(psi, sampling.points[h], eta, f.n, m);
      if (m.edge) ++edge_count;
      compute_plane(fhat, m, f.n, spectrum, slab.planes[h]);
    }
  });
  if (edge_count > 0) slab.warnings.push_back(edge_warning(edge_count, sampling.size()));
  return slab;
}

double coorbit_norm(const CoeffSlab& slab, double p) {
  check_p(p);
  if (slab.planes.empty()) throw Error(ErrorKind::out_of_range, "coefficient slab is empty");
  const double cell = slab.spacing() * slab.spacing();
  std::vector<double> per_plane(slab.planes.size());
  for (std::size_t h = 0; h < slab.planes.size(); ++h) per_plane[h] = plane_power_sum(slab.planes[h], p, cell);
  return finish_norm(per_plane, slab.sampling, p);
}

std::vector<double> plane_energies(const CoeffSlab& slab) {
  const double cell = slab.spacing() * slab.spacing();
  std::vector<double> out;
  out.reserve(slab.planes.size());
  for (const auto& plane : slab.planes) out.push_back(plane_power_sum(plane, 2.0, cell));
  return out;
}

std::vector<Vec2> default_calderon_samples(const GroupSpec& spec) {
  std::vector<Vec2> eta;
  switch (spec.kind()) {
    case FamilyKind::similitude:
      for (double r : {0.7, 0.9, 1.1, 1.4}) {
        for (double a : {0.3, 1.9, 3.5, 5.1}) eta.push_back({r * std::cos(a), r * std::sin(a)});
      }
      break;
    case FamilyKind::diagonal: {
      const Vec2 mags[] = {{0.7, 1.1}, {1.3, 0.8}, {0.9, 1.4}, {1.2, 0.6}};
      for (double sx : {1.0, -1.0}) {
        for (double sy : {1.0, -1.0}) {
          for (const auto& m : mags) eta.push_back({sx * m.x, sy * m.y});
        }
      }
      break;
    }
    case FamilyKind::shearlet:
      for (double e1 : {0.7, 1.3, -0.9, -1.2}) {
        for (double t : {-0.4, 0.4, 0.15, -0.25}) eta.push_back({e1, t * e1});
      }
      break;
  }
  const Mat2 to_xi = spec.conjugator().inverse_transpose();
  for (auto& v : eta) v = to_xi * v;
  return eta;
}

CalderonResult calderon_constant(const GroupSpec& spec, const WaveletSpec& psi, std::span<const Vec2> xi_samples,
                                 const GroupSampling& sampling) {
  if (xi_samples.empty()) throw Error(ErrorKind::out_of_range, "no frequency samples given");
  if (sampling.points.empty()) throw Error(ErrorKind::out_of_range, "group sampling is empty");
  if (!(sampling.family == spec.family())) throw Error(ErrorKind::family_mismatch, "sampling family does not match group");
  const Mat2 bt = spec.conjugator().transpose();
  CalderonResult r;
  for (const auto& xi : xi_samples) {
    if (!orbit_contains(spec, xi, 1e-6)) throw Error(ErrorKind::out_of_range, "frequency sample outside the dual orbit");
    const Vec2 eta = bt * xi;
    double c = 0.0;
    for (const auto& sp : sampling.points) {
      const double v = psi.dilated(sp.standard, eta);
      c += sp.haar * v * v;
    }
    r.values.push_back(c);
  }
  double sum = 0.0;
  for (double v : r.values) sum += v;
  r.mean = sum / static_cast<double>(r.values.size());
  double dev = 0.0;
  for (double v : r.values) dev = std::max(dev, std::abs(v - r.mean));
  r.relative_deviation = r.mean > 0.0 ? dev / r.mean : std::numeric_limits<double>::infinity();
  return r;
}

GridSignal invert(const CoeffSlab& slab, const GroupSpec& spec, const WaveletSpec& psi, double calderon) {
  check_calderon(calderon);
  if (slab.planes.empty()) throw Error(ErrorKind::out_of_range, "coefficient slab is empty");
  const std::size_t n = slab.n;
  const auto eta = standard_frequencies(n, slab.extent, spec);
  const std::size_t chunks = (slab.planes.size() + kChunk - 1) / kChunk;
  std::vector<std::vector<cplx>> chunk_acc(chunks);
  parallel_chunks(slab.planes.size(), 0, [&](std::size_t c, std::size_t begin, std::size_t end) {
    Multiplier m;
    std::vector<cplx> spectrum;
    auto& acc = chunk_acc[c];
    for (std::size_t h = begin; h < end; ++h) {
      const auto& sp = slab.sampling.points[h];
      fill_multiplier(psi, sp, eta, n, m);
      if (!m.any) continue;
      spectrum = slab.planes[h];
      fft2d_forward(spectrum, n);
      if (acc.empty()) acc.assign(n * n, cplx{});
      for (std::size_t k = 0; k < spectrum.size(); ++k) acc[k] += sp.g * spectrum[k] * m.values[k];
    }
  });
  return finish_reconstruction(chunk_acc, n, slab.extent, calderon);
}

StreamResult stream_analysis(const GridSignal& f, const GroupSpec& spec, const GroupSampling& sampling,
                             const WaveletSpec& psi, std::span<const double> ps, std::optional<double> calderon,
                             unsigned threads) {
  check_setup(f, spec, sampling, psi);
  for (double p : ps) check_p(p);
  if (calderon) check_calderon(*calderon);
  const std::size_t n = f.n;
  const double cell = f.spacing() * f.spacing();
  const auto fhat = forward(f);
  const auto eta = standard_frequencies(n, f.extent, spec);
  std::vector<std::vector<double>> per_plane(ps.size(), std::vector<double>(sampling.size(), 0.0));
  const std::size_t chunks = (sampling.size() + kChunk - 1) / kChunk;
  std::vector<std::vector<cplx>> chunk_acc(calderon ? chunks : 0);
  std::atomic<std::size_t> edge_count{0};
  parallel_chunks(sampling.size(), threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    Multiplier m;
    std::vector<cplx> spectrum, plane;
    for (std::size_t h = begin; h < end; ++h) {
      const auto& sp = sampling.points[h];
      fill_multiplier(psi, sp, eta, n, m);
      if (m.edge) ++edge_count;
      if (!m.any) continue;
      compute_plane(fhat, m, n, spectrum, plane);
      for (std::size_t i = 0; i < ps.size(); ++i) per_plane[i][h] = plane_power_sum(plane, ps[i], cell);
      if (calderon) {
        auto& acc = chunk_acc[c];
        if (acc.empty()) acc.assign(n * n, cplx{});
        for (std::size_t k = 0; k < spectrum.size(); ++k) acc[k] += sp.g * spectrum[k] * m.values[k];
      }
    }
  });
  StreamResult r;
  for (std::size_t i = 0; i < ps.size(); ++i) r.norms.push_back(finish_norm(per_plane[i], sampling, ps[i]));
  if (calderon) r.reconstruction = finish_reconstruction(chunk_acc, n, f.extent, *calderon);
  if (edge_count > 0) r.warnings.push_back(edge_warning(edge_count, sampling.size()));
  return r;
}

namespace {

// Band-limited evaluation of an n x n plane at fractional index coordinates u.
cplx evaluate_off_grid(const std::vector<cplx>& spectrum, std::size_t n, double u1, double u2) {
  std::vector<cplx> e1(n), e2(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double kb = static_cast<double>(signed_bin(k, n));
    const double t1 = 2.0 * std::numbers::pi * u1 * kb / static_cast<double>(n);
    const double t2 = 2.0 * std::numbers::pi * u2 * kb / static_cast<double>(n);
    e1[k] = {std::cos(t1), std::sin(t1)};
    e2[k] = {std::cos(t2), std::sin(t2)};
  }
  cplx sum{};
  for (std::size_t k1 = 0; k1 < n; ++k1) {
    cplx row{};
    for (std::size_t k2 = 0; k2 < n; ++k2) row += spectrum[k1 * n + k2] * e2[k2];
    sum += row * e1[k1];
  }
  return sum / static_cast<double>(n * n);
}

}  // namespace

double covariance_residual(const TestSignal& f, const CovarianceCase& c, const GroupSpec& spec,
                           const WaveletSpec& psi) {
  const Mat2& g = c.dilation;
  if (!contains(spec, g)) throw Error(ErrorKind::out_of_range, "dilation g is not an element of the group");
  const std::size_t n = f.grid.n;
  const double extent = f.grid.extent;

  // Left side: analyze pi(y, g) f at h.
  const TestSignal moved = synthesize(n, extent, transformed_spectrum(f.spectrum, c.translation, g));
  const auto lhs_slab = analyze(moved.grid, spec, single_point_sampling(spec, c.at), psi, 1);
  const auto& lhs = lhs_slab.planes.front();

  // Right side: W f at (g^{-1}(x - y), g^{-1} h).
  const Mat2 g_inv = g.inverse();
  ChartPoint h_prime = c.at;
  if (!(g == Mat2::identity())) {
    const auto chart = chart_from_element(spec, g_inv * element_from_chart(spec, c.at));
    if (!chart) throw Error(ErrorKind::out_of_range, "g^{-1} h is not representable in the group chart");
    h_prime = *chart;
  }
  const auto rhs_slab = analyze(f.grid, spec, single_point_sampling(spec, h_prime), psi, 1);
  const auto& rhs_plane = rhs_slab.planes.front();
  std::vector<cplx> rhs_spectrum;

  const double dx = f.grid.spacing();
  const double half = static_cast<double>(n / 2);
  double worst = 0.0, peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec2 z = g_inv * (f.grid.position(i, j) - c.translation);
      const double u1 = z.x / dx + half;
      const double u2 = z.y / dx + half;
      const double r1 = std::round(u1), r2 = std::round(u2);
      cplx value;
      if (std::abs(u1 - r1) < 1e-9 && std::abs(u2 - r2) < 1e-9) {
        const auto wrap = [n](double r) {
          const long m = static_cast<long>(n);
          return static_cast<std::size_t>(((static_cast<long>(r) % m) + m) % m);
        };
        value = rhs_plane[wrap(r1) * n + wrap(r2)];
      } else {
        if (rhs_spectrum.empty()) {
          rhs_spectrum = rhs_plane;
          fft2d_forward(rhs_spectrum, n);
        }
        value = evaluate_off_grid(rhs_spectrum, n, u1, u2);
      }
      const cplx left = lhs[i * n + j];
      worst = std::max(worst, std::abs(left - value));
      peak = std::max(peak, std::abs(left));
    }
  }
  if (peak == 0.0) return worst;
  return worst / peak;
}

NormRatioProfile norm_ratio_profile(const GroupSetup& g1, const GroupSetup& g2, double p,
                                    std::span<const TestSignal> signals, unsigned threads) {
  check_p(p);
  NormRatioProfile prof;
  const double ps[] = {p};
  bool first = true;
  for (const auto& s : signals) {
    NormRatioRow row;
    row.norm1 = stream_analysis(s.grid, g1.spec, g1.sampling, g1.psi, ps, std::nullopt, threads).norms[0];
    row.norm2 = stream_analysis(s.grid, g2.spec, g2.sampling, g2.psi, ps, std::nullopt, threads).norms[0];
    if (row.norm2 == 0.0) {
      row.degenerate = true;
      row.ratio = row.norm1 == 0.0 ? std::numeric_limits<double>::quiet_NaN() : std::numeric_limits<double>::infinity();
    } else {
      row.ratio = row.norm1 / row.norm2;
      if (row.norm1 == 0.0) row.degenerate = true;
    }
    if (!row.degenerate) {
      prof.min_ratio = first ? row.ratio : std::min(prof.min_ratio, row.ratio);
      prof.max_ratio = first ? row.ratio : std::max(prof.max_ratio, row.ratio);
      first = false;
    }
    prof.rows.push_back(row);
  }
  prof.spread = first ? std::numeric_limits<double>::quiet_NaN() : prof.max_ratio / prof.min_ratio;
  return prof;
}

}  // namespace coorbit2d
