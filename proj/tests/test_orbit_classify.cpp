#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coorbit2d/error.hpp"
#include "coorbit2d/orbit_classify.hpp"
#include "support.hpp"

using namespace coorbit2d;
using namespace coorbit2d::testing;

TEST_CASE("angle helpers") {
  CHECK(wrap_pi(-0.25) == doctest::Approx(kPi - 0.25));
  CHECK(wrap_pi(kPi + 0.5) == doctest::Approx(0.5));
  CHECK(line_distance(0.01, kPi - 0.01) == doctest::Approx(0.02));
  CHECK(line_angle({-1.0, -1.0}) == doctest::Approx(kPi / 4));
}

TEST_CASE("line sets normalise, compare and map") {
  const LineSet a({kPi / 2, -0.0});
  REQUIRE(a.size() == 2);
  CHECK(a.angles()[0] == 0.0);
  CHECK(a.equals(LineSet({kPi / 2, kPi})));
  CHECK_THROWS_AS(LineSet({0.3, 0.3 + kPi}), Error);
  CHECK_THROWS_AS(LineSet({0.1, 0.2, 0.3}), Error);
  // Shear [[1,1],[0,1]] keeps the x-axis and tilts the y-axis to 45 degrees.
  const LineSet m = LineSet({0.0, kPi / 2}).mapped(shear(1.0));
  CHECK(m.equals(LineSet({0.0, kPi / 4})));
}

TEST_CASE("orbit complements and component counts of the standard families") {
  CHECK(orbit_complement(GroupSpec(Family::similitude())).empty());
  CHECK(orbit_complement(GroupSpec(Family::diagonal())).equals(LineSet({0.0, kPi / 2})));
  CHECK(orbit_complement(GroupSpec(Family::shearlet(0.3))).equals(LineSet({kPi / 2})));
  CHECK(component_count(GroupSpec(Family::similitude())) == 1);
  CHECK(component_count(GroupSpec(Family::diagonal())) == 4);
  CHECK(component_count(GroupSpec(Family::shearlet(0.3))) == 2);
}

TEST_CASE("the dual orbit of a conjugate is B^{-T} of the standard orbit") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (auto fam : {Family::similitude(), Family::diagonal(), Family::shearlet(0.7)}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Mat2 b = random_invertible(rng);
      const GroupSpec std_spec(fam), spec(fam, b);
      CHECK(orbit_complement(spec).equals(orbit_complement(std_spec).mapped(b.inverse_transpose()), 1e-9));
      const Vec2 z{u(rng), u(rng)};
      CHECK(orbit_contains(spec, b.inverse_transpose() * z) == orbit_contains(std_spec, z));
    }
  }
  CHECK_FALSE(orbit_contains(GroupSpec(Family::diagonal()), {0.0, 1.0}));
  CHECK_FALSE(orbit_contains(GroupSpec(Family::shearlet(1.0)), {0.0, 1.0}));
  CHECK(orbit_contains(GroupSpec(Family::shearlet(1.0)), {1.0, 0.0}));
  CHECK_FALSE(orbit_contains(GroupSpec(Family::similitude()), {0.0, 0.0}));
}

TEST_CASE("dual orbits are invariant under the dual action") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (auto fam : {Family::similitude(), Family::diagonal(), Family::shearlet(-0.4)}) {
    const GroupSpec spec(fam, random_invertible(rng));
    for (const Mat2& rep : component_representatives(spec)) {
      const Vec2 z{u(rng), u(rng)};
      CHECK(orbit_contains(spec, z) == orbit_contains(spec, dual_action(rep, z)));
    }
  }
}

TEST_CASE("lines_to_phi_s examples") {
  const auto axes = lines_to_phi_s(LineSet({0.0, kPi / 2}));
  CHECK(axes.phi == 0.0);
  CHECK(axes.s == 0.0);
  // Perpendicular lines admit two rotations; the smaller verified angle is reported.
  const auto tilted = lines_to_phi_s(LineSet({kPi / 6, 2 * kPi / 3}));
  CHECK(tilted.phi == doctest::Approx(kPi / 3));
  CHECK(tilted.s == 0.0);
  // Lines at 0 and 45 degrees: gap pi/4, s = cot(pi/4) = 1.
  const auto sheared = lines_to_phi_s(LineSet({0.0, kPi / 4}));
  CHECK(sheared.s == doctest::Approx(1.0));
  CHECK_THROWS_AS(lines_to_phi_s(LineSet({0.3})), Error);
}

TEST_CASE("canonical forms round trip through representatives") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> phi(0.0, kPi), s(0.01, 10.0), c(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const DiagonalForm d{phi(rng), s(rng)};
    const auto back = std::get<DiagonalForm>(canonicalize(rep_group(d)));
    CHECK(circular_pi_distance(back.phi, d.phi) < 1e-9);
    CHECK(back.s == doctest::Approx(d.s).epsilon(1e-9));

    const ShearletForm h{phi(rng), c(rng)};
    const auto hb = std::get<ShearletForm>(canonicalize(rep_group(h)));
    CHECK(circular_pi_distance(hb.phi, h.phi) < 1e-9);
    CHECK(hb.c == h.c);
  }
  CHECK(std::holds_alternative<SimilitudeForm>(canonicalize(GroupSpec(Family::similitude(), shear(3.0)))));
}

TEST_CASE("rep_group validates its parameters") {
  CHECK_THROWS_AS(rep_group(DiagonalForm{kPi, 0.0}), Error);
  CHECK_THROWS_AS(rep_group(DiagonalForm{0.1, -1.0}), Error);
  CHECK_THROWS_AS(rep_group(ShearletForm{-0.1, 1.0}), Error);
}

TEST_CASE("canonical forms are invariant under the normalizer") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const GroupSpec d(Family::diagonal(), random_invertible(rng));
    const GroupSpec d2 = GroupSpec(Family::diagonal(), d.conjugator() * Mat2{0.0, 2.0, -3.0, 0.0});
    CHECK(canonical_equal(canonicalize(d), canonicalize(d2), 1e-8));
    const GroupSpec h(Family::shearlet(1.5), random_invertible(rng));
    const GroupSpec h2(Family::shearlet(1.5), h.conjugator() * Mat2{-2.0, 0.7, 0.0, 0.4});
    CHECK(canonical_equal(canonicalize(h), canonicalize(h2), 1e-8));
  }
}

TEST_CASE("equivalence is reflexive, symmetric and respects families") {
  std::mt19937_64 rng(10);
  const Family fams[] = {Family::similitude(), Family::diagonal(), Family::shearlet(1.0), Family::shearlet(2.0)};
  for (int trial = 0; trial < 100; ++trial) {
    for (const auto& fa : fams) {
      const GroupSpec a(fa, random_invertible(rng));
      CHECK(coorbit_equivalent(a, a).equivalent);
      for (const auto& fb : fams) {
        const GroupSpec b(fb, random_invertible(rng));
        const auto ab = coorbit_equivalent(a, b);
        CHECK(ab.equivalent == coorbit_equivalent(b, a).equivalent);
        if (!(fa == fb)) CHECK_FALSE(ab.equivalent);
        if (fa.kind == FamilyKind::similitude && fb.kind == FamilyKind::similitude) CHECK(ab.equivalent);
        CHECK_FALSE(ab.reason.empty());
      }
    }
  }
}

TEST_CASE("symmetry membership examples") {
  const GroupSpec diag(Family::diagonal());
  const auto swap = symmetry_membership(diag, Mat2{0.0, 1.0, 1.0, 0.0});
  CHECK(swap.normalizer);
  CHECK(swap.coorbit);
  CHECK(swap.orbit);
  // A 45 degree rotation maps the axes to the diagonals.
  const auto rot = symmetry_membership(diag, rotation(kPi / 4));
  CHECK_FALSE(rot.normalizer);
  CHECK_FALSE(rot.coorbit);
  CHECK_FALSE(rot.orbit);
  // A 90 degree rotation permutes the axes but does not normalise the shearlet group.
  const auto shr = symmetry_membership(GroupSpec(Family::shearlet(0.5)), rotation(kPi / 2));
  CHECK_FALSE(shr.coorbit);
  CHECK_FALSE(shr.orbit);
  const auto up = symmetry_membership(GroupSpec(Family::shearlet(0.5)), Mat2{2.0, 5.0, 0.0, 1.0});
  CHECK(up.coorbit);
  CHECK(up.orbit);
  CHECK(up.normalizer);  // upper-triangular conjugation keeps the diagonal entries
  CHECK_FALSE(in_normalizer(GroupSpec(Family::shearlet(0.5)), Mat2{0.0, 1.0, 1.0, 0.0}));
  const auto sim = symmetry_membership(GroupSpec(Family::similitude()), shear(2.0));
  CHECK_FALSE(sim.normalizer);
  CHECK(sim.coorbit);
  CHECK(sim.orbit);
  CHECK(in_normalizer(GroupSpec(Family::similitude()), Mat2{1.0, 0.0, 0.0, -1.0}));
}

TEST_CASE("inclusion chain holds on conjugated groups") {
  std::mt19937_64 rng(12);
  int violations = 0;
  for (auto fam : {Family::similitude(), Family::diagonal(), Family::shearlet(0.5)}) {
    for (int trial = 0; trial < 300; ++trial) {
      const GroupSpec spec(fam, random_invertible(rng));
      const Mat2 a = spec.conjugator() * random_invertible(rng) * spec.conjugator_inverse();
      const auto m = symmetry_membership(spec, a);
      if ((m.normalizer && !m.coorbit) || (m.coorbit && !m.orbit)) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("describe names the family and parameters") {
  CHECK(describe(SimilitudeForm{}) == "Similitude");
  CHECK(describe(DiagonalForm{0.5, 2.0}) == "Diagonal(phi=0.5, s=2)");
  CHECK(describe(ShearletForm{0.0, -1.0}) == "Shearlet(phi=0, c=-1)");
}
