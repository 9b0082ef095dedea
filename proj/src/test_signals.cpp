#include "coorbit2d/test_signals.hpp"

#include <cmath>
#include <numbers>

#include "coorbit2d/error.hpp"
#include "coorbit2d/fft.hpp"

namespace coorbit2d {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEdgeRelTol = 1e-12;

cplx phase(const Vec2& x, const Vec2& xi) {
  const double t = -2.0 * kPi * x.dot(xi);
  return {std::cos(t), std::sin(t)};
}

}  // namespace

SignalKind parse_signal_kind(const std::string& name) {
  if (name == "gaussian") return SignalKind::gaussian;
  if (name == "bump") return SignalKind::bump;
  if (name == "packet") return SignalKind::packet;
  if (name == "psi-atom") return SignalKind::psi_atom;
  if (name == "zero") return SignalKind::zero;
  throw Error(ErrorKind::out_of_range, "unknown signal kind '" + name + "'");
}

std::string to_string(SignalKind kind) {
  switch (kind) {
    case SignalKind::gaussian: return "gaussian";
    case SignalKind::bump: return "bump";
    case SignalKind::packet: return "packet";
    case SignalKind::psi_atom: return "psi-atom";
    case SignalKind::zero: return "zero";
  }
  return "unknown";
}

TestSignal synthesize(std::size_t n, double extent, Spectrum spectrum) {
  TestSignal out;
  out.grid = GridSignal(n, extent);
  auto& data = out.grid.data;
  double peak = 0.0, edge = 0.0;
  for (std::size_t k1 = 0; k1 < n; ++k1) {
    for (std::size_t k2 = 0; k2 < n; ++k2) {
      const cplx v = spectrum(out.grid.frequency(k1, k2));
      const double m = std::abs(v);
      peak = std::max(peak, m);
      if (k1 == n / 2 || k2 == n / 2 || k1 == n / 2 - 1 || k2 == n / 2 - 1) edge = std::max(edge, m);
      // (-1)^(k1 + k2) moves the origin to the grid center
      data[k1 * n + k2] = ((signed_bin(k1, n) + signed_bin(k2, n)) % 2 == 0) ? v : -v;
    }
  }
  fft2d_inverse(data, n);
  const double scale = static_cast<double>(n * n) / (extent * extent);
  for (auto& v : data) v *= scale;
  if (peak > 0.0 && edge > kEdgeRelTol * peak) {
    out.warnings.push_back("spectrum is not negligible on the band edge (relative " + std::to_string(edge / peak) +
                           "); grid samples are aliased");
  }
  out.spectrum = std::move(spectrum);
  return out;
}

TestSignal gen_test_signal(SignalKind kind, const SignalParams& p, const WaveletSpec* psi) {
  if (!std::isfinite(p.amplitude)) throw Error(ErrorKind::out_of_range, "amplitude must be finite");
  const double amp = p.amplitude;
  const Vec2 x0 = p.position;
  Spectrum spec;
  std::optional<double> energy;
  switch (kind) {
    case SignalKind::gaussian: {
      if (!(p.width > 0.0)) throw Error(ErrorKind::out_of_range, "gaussian width must be > 0");
      const double s2 = 2.0 * p.width * p.width;
      const Vec2 c = p.center;
      spec = [=](const Vec2& xi) {
        const Vec2 d = xi - c;
        return amp * std::exp(-d.dot(d) / s2) * phase(x0, xi);
      };
      energy = amp * amp * kPi * p.width * p.width;
      break;
    }
    case SignalKind::bump: {
      if (!(p.width > 0.0)) throw Error(ErrorKind::out_of_range, "bump radius must be > 0");
      const double r = p.width;
      const Vec2 c = p.center;
      spec = [=](const Vec2& xi) { return amp * smooth_bump((xi - c).norm() / r) * phase(x0, xi); };
      break;
    }
    case SignalKind::packet: {
      if (!(p.radial_width > 0.0) || !(p.angular_width > 0.0)) {
        throw Error(ErrorKind::out_of_range, "packet widths must be > 0");
      }
      const Vec2 dir{std::cos(p.direction), std::sin(p.direction)};
      const Vec2 perp{-dir.y, dir.x};
      const double r0 = p.radius, sr = p.radial_width, st = p.angular_width;
      spec = [=](const Vec2& xi) {
        const double u = xi.dot(dir) - r0;
        const double v = xi.dot(perp);
        return amp * std::exp(-u * u / (2 * sr * sr) - v * v / (2 * st * st)) * phase(x0, xi);
      };
      energy = amp * amp * kPi * sr * st;
      break;
    }
    case SignalKind::psi_atom: {
      if (psi == nullptr) throw Error(ErrorKind::out_of_range, "psi-atom needs a wavelet");
      const WaveletSpec w = *psi;
      spec = [=](const Vec2& xi) { return amp * w.evaluate(xi) * phase(x0, xi); };
      break;
    }
    case SignalKind::zero:
      spec = [](const Vec2&) { return cplx{}; };
      energy = 0.0;
      break;
  }
  TestSignal out = synthesize(p.n, p.extent, std::move(spec));
  out.analytic_energy = energy;
  return out;
}

Spectrum transformed_spectrum(Spectrum base, const Vec2& y, const Mat2& g) {
  require_invertible(g, "dilation");
  const double s = std::sqrt(std::abs(g.det()));
  const Mat2 gt = g.transpose();
  return [base = std::move(base), y, gt, s](const Vec2& xi) { return s * phase(y, xi) * base(gt * xi); };
}

}  // namespace coorbit2d
