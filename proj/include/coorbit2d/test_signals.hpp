#pragma once

// Closed-form test signals. Each signal is synthesized on the grid from its
// exact spectrum and keeps that spectrum for off-grid frequency queries.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coorbit2d/grid.hpp"
#include "coorbit2d/wavelet.hpp"

namespace coorbit2d {

using Spectrum = std::function<cplx(const Vec2&)>;

struct TestSignal {
  GridSignal grid;
  Spectrum spectrum;
  std::optional<double> analytic_energy;  // integral of |f-hat|^2 when known
  std::vector<std::string> warnings;
};

enum class SignalKind { gaussian, bump, packet, psi_atom, zero };

SignalKind parse_signal_kind(const std::string& name);
std::string to_string(SignalKind kind);

struct SignalParams {
  std::size_t n = 128;
  double extent = 16.0;
  double amplitude = 1.0;
  Vec2 center{1.0, 0.0};  // spectral center (gaussian, bump)
  double width = 0.2;     // gaussian sigma or bump radius
  Vec2 position{};        // spatial shift x0, spectrum gets exp(-2 pi i x0 . xi)
  double radius = 1.0;    // packet: center frequency magnitude
  double direction = 0.0; // packet: direction angle
  double radial_width = 0.15;
  double angular_width = 0.05;
};

/// f(x_ij) = L^{-2} sum_k f-hat(xi_k) exp(2 pi i x_ij . xi_k). Warns when the
/// spectrum is not negligible on the band edge.
TestSignal synthesize(std::size_t n, double extent, Spectrum spectrum);

TestSignal gen_test_signal(SignalKind kind, const SignalParams& params, const WaveletSpec* psi = nullptr);

/// sqrt(|det g|) exp(-2 pi i y . xi) f-hat(g^T xi): spectrum of pi(y, g) f.
Spectrum transformed_spectrum(Spectrum base, const Vec2& y, const Mat2& g);

}  // namespace coorbit2d
