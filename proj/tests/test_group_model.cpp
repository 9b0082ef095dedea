#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coorbit2d/error.hpp"
#include "coorbit2d/group_model.hpp"
#include "support.hpp"

using namespace coorbit2d;
using namespace coorbit2d::testing;

namespace {

std::vector<GroupSpec> sample_specs() {
  return {GroupSpec(Family::similitude()),
          GroupSpec(Family::similitude(), Mat2{1.5, -0.4, 0.7, 2.0}),
          GroupSpec(Family::diagonal()),
          GroupSpec(Family::diagonal(), Mat2{0.3, 1.1, -0.8, 0.4}),
          GroupSpec(Family::shearlet(1.0)),
          GroupSpec(Family::shearlet(0.5), Mat2{0.0, 1.0, -1.0, 0.0}),
          GroupSpec(Family::shearlet(-1.7), Mat2{2.0, 0.3, 0.1, -0.5})};
}

ChartPoint random_chart(std::mt19937_64& rng, FamilyKind kind) {
  std::uniform_real_distribution<double> lam(-1.5, 1.5);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
  std::uniform_real_distribution<double> sh(-4.0, 4.0);
  std::bernoulli_distribution flip(0.5);
  switch (kind) {
    case FamilyKind::similitude: return SimilitudeChart{lam(rng), ang(rng)};
    case FamilyKind::diagonal: return DiagonalChart{lam(rng), lam(rng), flip(rng) ? 1 : -1, flip(rng) ? 1 : -1};
    case FamilyKind::shearlet: break;
  }
  return ShearletChart{flip(rng) ? 1 : -1, lam(rng), sh(rng)};
}

// Continuous chart coordinates, dropping discrete signs.
std::array<double, 2> coords(const ChartPoint& p) {
  if (const auto* s = std::get_if<SimilitudeChart>(&p)) return {s->log_scale, s->angle};
  if (const auto* d = std::get_if<DiagonalChart>(&p)) return {d->log_scale1, d->log_scale2};
  const auto& h = std::get<ShearletChart>(p);
  return {h.log_scale, h.shear};
}

ChartPoint with_coords(const ChartPoint& p, std::array<double, 2> c) {
  if (std::holds_alternative<SimilitudeChart>(p)) return SimilitudeChart{c[0], c[1]};
  if (const auto* d = std::get_if<DiagonalChart>(&p)) return DiagonalChart{c[0], c[1], d->sign1, d->sign2};
  return ShearletChart{std::get<ShearletChart>(p).sign, c[0], c[1]};
}

}  // namespace

TEST_CASE("group law: identity, inverse and associativity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const AffineElement a{{u(rng), u(rng)}, random_invertible(rng)};
    const AffineElement b{{u(rng), u(rng)}, random_invertible(rng)};
    const AffineElement c{{u(rng), u(rng)}, random_invertible(rng)};
    const auto left = group_product(group_product(a, b), c);
    const auto right = group_product(a, group_product(b, c));
    CHECK(relative_distance(left.dilation, right.dilation) < 1e-12);
    CHECK((left.translation - right.translation).norm() < 1e-10);

    const auto e = group_product(a, group_inverse(a));
    CHECK(relative_distance(e.dilation, Mat2::identity()) < 1e-12);
    CHECK(e.translation.norm() < 1e-12);
  }
}

TEST_CASE("group law matches (x + h y, h g)") {
  const AffineElement a{{1.0, 2.0}, Mat2{2.0, 1.0, 0.0, 3.0}};
  const AffineElement b{{-1.0, 0.5}, Mat2{0.0, 1.0, 1.0, 0.0}};
  const auto p = group_product(a, b);
  CHECK(p.translation.x == doctest::Approx(1.0 - 2.0 + 0.5));
  CHECK(p.translation.y == doctest::Approx(2.0 + 1.5));
  CHECK(p.dilation == Mat2{1.0, 2.0, 3.0, 0.0});
}

TEST_CASE("dual action is h^{-T}") {
  const Mat2 h{2.0, 1.0, 0.0, 4.0};
  const Vec2 z = dual_action(h, {1.0, 1.0});
  // h^{-T} = [[1/2, 0], [-1/8, 1/4]]
  CHECK(z.x == doctest::Approx(0.5));
  CHECK(z.y == doctest::Approx(-0.125 + 0.25));
}

TEST_CASE("standard elements have the documented shape") {
  const Mat2 s = standard_element(Family::similitude(), SimilitudeChart{std::log(2.0), kPi / 2});
  CHECK(s.m11 == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(s.m12 == doctest::Approx(2.0));
  CHECK(s.m21 == doctest::Approx(-2.0));

  const Mat2 d = standard_element(Family::diagonal(), DiagonalChart{0.0, std::log(3.0), -1, 1});
  CHECK(relative_distance(d, Mat2::diag(-1.0, 3.0)) < 1e-15);

  const Mat2 h = standard_element(Family::shearlet(0.5), ShearletChart{-1, std::log(4.0), 1.5});
  CHECK(h.m11 == doctest::Approx(-4.0));
  CHECK(h.m12 == doctest::Approx(-1.5));
  CHECK(h.m21 == 0.0);
  CHECK(h.m22 == doctest::Approx(-2.0));
}

TEST_CASE("chart round trip on conjugated groups") {
  std::mt19937_64 rng(5);
  for (const auto& spec : sample_specs()) {
    for (int trial = 0; trial < 100; ++trial) {
      const ChartPoint p = random_chart(rng, spec.kind());
      const Mat2 m = element_from_chart(spec, p);
      CHECK(contains(spec, m));
      const auto back = chart_from_element(spec, m);
      REQUIRE(back.has_value());
      CHECK(relative_distance(element_from_chart(spec, *back), m) < 1e-10);
    }
  }
}

TEST_CASE("contains rejects matrices outside the group") {
  const GroupSpec sim(Family::similitude());
  CHECK_FALSE(contains(sim, Mat2{1.0, 0.0, 0.0, -1.0}));
  CHECK_FALSE(contains(sim, Mat2::diag(1.0, 2.0)));
  const GroupSpec diag(Family::diagonal());
  CHECK_FALSE(contains(diag, Mat2{0.0, 1.0, 1.0, 0.0}));
  CHECK(contains(diag, Mat2::diag(-2.0, 0.25)));
  const GroupSpec shr(Family::shearlet(0.5));
  CHECK(contains(shr, Mat2{4.0, 7.0, 0.0, 2.0}));
  CHECK(contains(shr, Mat2{-4.0, 7.0, 0.0, -2.0}));
  CHECK_FALSE(contains(shr, Mat2{4.0, 7.0, 0.0, -2.0}));
  CHECK_FALSE(contains(shr, Mat2{4.0, 7.0, 0.0, 3.0}));
  CHECK_FALSE(chart_from_element(shr, Mat2{4.0, 7.0, 0.0, 3.0}).has_value());
}

TEST_CASE("Haar density is left invariant in chart coordinates") {
  std::mt19937_64 rng(17);
  const double eps = 1e-6;
  for (const auto& spec : sample_specs()) {
    for (int trial = 0; trial < 30; ++trial) {
      const ChartPoint p0 = random_chart(rng, spec.kind());
      const ChartPoint p = random_chart(rng, spec.kind());
      const Mat2 h0 = element_from_chart(spec, p0);
      auto image = [&](std::array<double, 2> c) {
        const auto q = chart_from_element(spec, h0 * element_from_chart(spec, with_coords(p, c)));
        REQUIRE(q.has_value());
        return coords(*q);
      };
      const auto c = coords(p);
      const auto c_img = image(c);
      const auto d0p = image({c[0] + eps, c[1]});
      const auto d0m = image({c[0] - eps, c[1]});
      const auto d1p = image({c[0], c[1] + eps});
      const auto d1m = image({c[0], c[1] - eps});
      auto diff = [](double a, double b) {  // angle coordinates may wrap
        double d = a - b;
        if (d > kPi) d -= 2 * kPi;
        if (d < -kPi) d += 2 * kPi;
        return d;
      };
      const double j00 = diff(d0p[0], d0m[0]) / (2 * eps), j10 = diff(d0p[1], d0m[1]) / (2 * eps);
      const double j01 = diff(d1p[0], d1m[0]) / (2 * eps), j11 = diff(d1p[1], d1m[1]) / (2 * eps);
      const double jac = std::abs(j00 * j11 - j01 * j10);
      const ChartPoint q = with_coords(*chart_from_element(spec, h0 * element_from_chart(spec, p)), c_img);
      CHECK(haar_weight(spec, q) * jac == doctest::Approx(haar_weight(spec, p)).epsilon(1e-6));
    }
  }
}

TEST_CASE("g_weight divides the Haar density by |det h|") {
  std::mt19937_64 rng(23);
  for (const auto& spec : sample_specs()) {
    const ChartPoint p = random_chart(rng, spec.kind());
    const double det = std::abs(element_from_chart(spec, p).det());
    CHECK(g_weight(spec, p) == doctest::Approx(haar_weight(spec, p) / det));
  }
}

TEST_CASE("Lie algebra generators exponentiate into the group") {
  for (const auto& spec : sample_specs()) {
    const auto basis = lie_algebra_basis(spec);
    CHECK(basis.size() == 2);
    for (const Mat2& x : basis) {
      for (double t : {-0.7, 0.3, 1.1}) CHECK(contains(spec, expm(x * t), 1e-8));
    }
  }
}

TEST_CASE("component representatives lie in distinct components") {
  CHECK(component_representatives(GroupSpec(Family::similitude())).size() == 1);
  CHECK(component_representatives(GroupSpec(Family::diagonal())).size() == 4);
  CHECK(component_representatives(GroupSpec(Family::shearlet(2.0))).size() == 2);
  for (const auto& spec : sample_specs()) {
    for (const Mat2& m : component_representatives(spec)) CHECK(contains(spec, m));
  }
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(GroupSpec(Family::diagonal(), Mat2{1.0, 2.0, 2.0, 4.0}), Error);
  CHECK_THROWS_AS(Family::shearlet(std::nan("")), Error);
  CHECK_THROWS_AS(Mat2(Mat2{0.0, 0.0, 0.0, 0.0}).inverse(), Error);
  CHECK(GroupSpec(Family{FamilyKind::diagonal, 3.0}).family().c == 0.0);
}

TEST_CASE("conjugation composes conjugators") {
  const GroupSpec s(Family::diagonal(), Mat2{1.0, 1.0, 0.0, 1.0});
  const Mat2 a{0.0, 1.0, -1.0, 0.0};
  CHECK(s.conjugated(a).conjugator() == a * s.conjugator());
  const Mat2 m = Mat2::diag(2.0, -3.0);
  CHECK(relative_distance(s.to_standard(s.from_standard(m)), m) < 1e-14);
}
