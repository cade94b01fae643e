#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "fixtures.hpp"
#include "knotsig/error.hpp"
#include "knotsig/inertia.hpp"

using namespace knotsig;
using namespace knotsig::testing;

namespace {

SignatureProfile profile_of(const SeifertMatrix& v) {
  return signature_profile(v, isolate_unit_roots(to_z_poly(alexander_poly(v))));
}

GaussianMatrix gm(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  GaussianMatrix h(m.rows(), m.cols());
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b) h(a, b) = GaussianRational(Rational(m(a, b)));
  return h;
}

// Plateaus read off a dense phi grid with the double-precision eigensolver,
// using the root angles of Delta found by the floating root finder.
std::vector<int> grid_oracle(const SeifertMatrix& v, const std::vector<double>& z_poly) {
  std::vector<double> root_phis;
  for (double z : float_real_roots(z_poly, -2, 2)) root_phis.push_back(std::acos(z / 2));
  std::sort(root_phis.begin(), root_phis.end());
  std::vector<int> plateaus(root_phis.size() + 1, 999);
  const int steps = 2000;
  for (int s = 1; s < steps; ++s) {
    const double phi = std::numbers::pi * s / steps;
    bool near = false;
    std::size_t arc = 0;
    for (double r : root_phis) {
      if (std::abs(phi - r) < 1e-2) near = true;
      if (phi > r) ++arc;
    }
    if (near) continue;
    const auto fi = float_inertia(b_matrix_double(v, phi));
    REQUIRE(fi.near_zero == 0);
    if (plateaus[arc] == 999) plateaus[arc] = fi.signature();
    CHECK(plateaus[arc] == fi.signature());
  }
  return plateaus;
}

std::vector<double> z_poly_double(const SeifertMatrix& v) {
  std::vector<double> c;
  const ZPoly p = to_z_poly(alexander_poly(v));
  for (const auto& x : p.coeffs()) c.push_back(x.get_d());
  return c;
}

}  // namespace

TEST_CASE("UnitCirclePoint") {
  const auto p = UnitCirclePoint::from_tan_half(Rational(1));
  CHECK(p.omega() == GaussianRational(Rational(0), Rational(1)));
  CHECK(p.z() == 0);
  const auto q = UnitCirclePoint::from_tan_half(Rational(1, 2));
  // |omega|^2 = 1 exactly.
  const auto w = q.omega();
  CHECK(w.re * w.re + w.im * w.im == 1);
  CHECK(UnitCirclePoint::minus_one().z() == -2);
  CHECK_THROWS_AS(UnitCirclePoint::from_tan_half(Rational(0)), std::invalid_argument);
  CHECK(UnitCirclePoint::from_tan_half(Rational(1, 3)).phi() < UnitCirclePoint::from_tan_half(Rational(1, 2)).phi());
}

TEST_CASE("b_matrix_at") {
  const auto v = trefoil();
  const auto b = b_matrix_at(v, UnitCirclePoint::from_tan_half(Rational(1)));
  // (1 - i) V + (1 + i) V^T
  CHECK(b(0, 0) == GaussianRational(Rational(-2), Rational(0)));
  CHECK(b(0, 1) == GaussianRational(Rational(1), Rational(-1)));
  CHECK(b(1, 0) == GaussianRational(Rational(1), Rational(1)));
  CHECK(b(1, 1) == GaussianRational(Rational(-2), Rational(0)));
  CHECK(b_matrix_at(v, UnitCirclePoint::minus_one()) == gm({{-4, 2}, {2, -4}}));
  CHECK(b_matrix_at(unknot(), UnitCirclePoint::from_tan_half(Rational(1))).empty());
}

TEST_CASE("inertia of small matrices") {
  // Eigenvalues -1, -3.
  CHECK(inertia(gm({{-2, 1}, {1, -2}})) == Inertia{0, 2, 0});
  CHECK(inertia(gm({{-2, 1}, {1, -2}})).signature() == -2);
  // det = -5 < 0 forces opposite signs.
  CHECK(inertia(gm({{2, 1}, {1, -2}})) == Inertia{1, 1, 0});
  CHECK(inertia(gm({{0, 0}, {0, 0}})) == Inertia{0, 0, 2});
  CHECK(inertia(gm({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}})) == Inertia{1, 1, 1});
  CHECK(inertia(GaussianMatrix{}) == Inertia{0, 0, 0});
  // [[0, i], [-i, 0]] has eigenvalues +-1.
  GaussianMatrix h(2, 2);
  h(0, 1) = GaussianRational(Rational(0), Rational(1));
  h(1, 0) = GaussianRational(Rational(0), Rational(-1));
  CHECK(inertia(h) == Inertia{1, 1, 0});
}

TEST_CASE("characteristic polynomial and determinant") {
  // x^2 + 4x + 3 for [[-2,1],[1,-2]].
  CHECK(characteristic_polynomial(gm({{-2, 1}, {1, -2}})) == RatPoly{Rational(3), Rational(4), Rational(1)});
  CHECK(determinant(gm({{2, 1}, {1, -2}})) == GaussianRational(Rational(-5)));
  // Non-Hermitian input with a non-real trace is detected.
  GaussianMatrix bad(2, 2);
  bad(0, 0) = GaussianRational(Rational(0), Rational(1));
  CHECK_THROWS_AS(characteristic_polynomial(bad), Error);
}

TEST_CASE("signature_profile of the fixtures") {
  SUBCASE("trefoil") {
    const auto p = profile_of(trefoil());
    CHECK(p.plateaus == std::vector<int>{0, -2});
    CHECK(grid_oracle(trefoil(), z_poly_double(trefoil())) == p.plateaus);
    CHECK(p.value_at_minus_one == -2);
    REQUIRE(p.jumps.size() == 1);
    CHECK(p.jumps[0].lo < 1);
    CHECK(p.jumps[0].hi > 1);
  }
  SUBCASE("figure-8") {
    const auto p = profile_of(figure_eight());
    CHECK(p.plateaus == std::vector<int>{0});
    CHECK(grid_oracle(figure_eight(), z_poly_double(figure_eight())) == p.plateaus);
    CHECK(p.jumps.empty());
    CHECK(p.value_at_minus_one == 0);
  }
  SUBCASE("T(2,5)") {
    const auto p = profile_of(torus_2_5());
    CHECK(p.plateaus == std::vector<int>{0, -2, -4});
    CHECK(grid_oracle(torus_2_5(), z_poly_double(torus_2_5())) == p.plateaus);
    CHECK(p.value_at_minus_one == -4);
    REQUIRE(p.jumps.size() == 2);
    // Increasing angle = decreasing z: (1 + sqrt 5)/2 first.
    CHECK(p.jumps[0].lo.get_d() > 1.6);
    CHECK(p.jumps[1].hi.get_d() < -0.6);
  }
  SUBCASE("unknot") {
    const auto p = profile_of(unknot());
    CHECK(p.plateaus == std::vector<int>{0});
    CHECK(p.value_at_minus_one == 0);
  }
  SUBCASE("granny and square knots") {
    CHECK(profile_of(granny()).plateaus == std::vector<int>{0, -4});
    CHECK(profile_of(square_knot()).plateaus == std::vector<int>{0, 0});
  }
}

TEST_CASE("signature_profile rejects overlapping witnesses") {
  auto w = isolate_unit_roots(to_z_poly(alexander_poly(torus_2_5())));
  w[0].hi = w[1].hi;
  CHECK_THROWS_AS(signature_profile(torus_2_5(), w), std::invalid_argument);
}

TEST_CASE("jump_reports") {
  const auto t = jump_reports(profile_of(trefoil()));
  REQUIRE(t.size() == 1);
  CHECK(t[0].left_value == 0);
  CHECK(t[0].right_value == -2);
  CHECK(t[0].jump == -2);
  CHECK(t[0].odd_multiplicity);
  CHECK(t[0].transversal_simple);

  const auto g = jump_reports(profile_of(granny()));
  REQUIRE(g.size() == 1);
  CHECK(g[0].jump == -4);
  CHECK(g[0].root.multiplicity == 2);
  CHECK_FALSE(g[0].odd_multiplicity);
  CHECK_FALSE(g[0].transversal_simple);

  const auto s = jump_reports(profile_of(square_knot()));
  REQUIRE(s.size() == 1);
  CHECK(s[0].jump == 0);
  CHECK(s[0].root.multiplicity == 2);
}

TEST_CASE("det_sign_crosscheck") {
  // Plateau 0 of the trefoil (g = 1): predicted sign (-1)^1 = -1.
  const auto v = trefoil();
  const auto small = determinant(b_matrix_at(v, UnitCirclePoint::from_tan_half(Rational(1, 4))));
  CHECK(small.re < 0);
  // omega = i lies at phi = pi/2 > pi/3, on the -2 plateau: det = 4 - |1 - i|^2 = 2.
  CHECK(determinant(b_matrix_at(v, UnitCirclePoint::from_tan_half(Rational(1)))) ==
        GaussianRational(Rational(2)));
  CHECK(det_sign_crosscheck(v, profile_of(v)));
  // Figure-8: det B = (z - 2)(3 - z) < 0 on the single plateau.
  CHECK(determinant(b_matrix_at(figure_eight(), UnitCirclePoint::from_tan_half(Rational(1)))).re < 0);
  CHECK(det_sign_crosscheck(figure_eight(), profile_of(figure_eight())));
  CHECK(det_sign_crosscheck(unknot(), profile_of(unknot())));
  CHECK(det_sign_crosscheck(granny(), profile_of(granny())));

  auto tampered = profile_of(v);
  tampered.plateaus[1] = 0;
  CHECK_FALSE(det_sign_crosscheck(v, tampered));
}

TEST_CASE("to_paper_parametrization halves angles only") {
  const auto p = profile_of(torus_2_5());
  const auto q = to_paper_parametrization(p);
  CHECK(q.plateaus == p.plateaus);
  CHECK(q.half_angles);
  for (std::size_t k = 0; k < p.jumps.size(); ++k) {
    CHECK(q.jumps[k].angle_lo * 2 == p.jumps[k].angle_lo);
    CHECK(q.jumps[k].angle_hi * 2 == p.jumps[k].angle_hi);
    CHECK(q.jumps[k].lo == p.jumps[k].lo);
  }
  CHECK(q.jumps[0].angle_hi < q.jumps[1].angle_lo);
  // Trefoil: phi = pi/3 -> alpha = pi/6.
  const auto t = to_paper_parametrization(profile_of(trefoil()));
  CHECK(t.jumps[0].angle_lo.get_d() < std::numbers::pi / 6);
  CHECK(t.jumps[0].angle_hi.get_d() > std::numbers::pi / 6);
  CHECK(to_paper_parametrization(profile_of(unknot())).jumps.empty());
  // Idempotent.
  CHECK(to_paper_parametrization(q) == q);
}

TEST_CASE("rational_between_squares") {
  const auto u = rational_between_squares(Rational(2), Rational(3));
  CHECK(u * u > 2);
  CHECK(u * u < 3);
  const auto w = rational_between_squares(Rational(0), Rational(1, 1000000));
  CHECK(w > 0);
  CHECK(w * w < Rational(1, 1000000));
  const auto big = rational_between_squares(Rational(50), std::nullopt);
  CHECK(big * big > 50);
}

TEST_CASE("property: profile invariants over random fixtures") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const auto seed = random_seed(rng);
    const auto v = congruence(seed, random_unimodular(seed.size(), rng));
    const auto p = profile_of(v);
    CHECK(p.plateaus.front() == 0);
    for (int s : p.plateaus) CHECK(s % 2 == 0);
    for (const auto& r : jump_reports(p)) {
      CHECK(std::abs(r.jump) <= 2 * r.root.multiplicity);
      if (r.odd_multiplicity) CHECK(r.jump != 0);
    }
    CHECK(p.value_at_minus_one == inertia(symmetrized_form(v)).signature());
    CHECK(p == profile_of(seed));
    CHECK(det_sign_crosscheck(v, p));

    const auto m = profile_of(mirror(v));
    REQUIRE(m.plateaus.size() == p.plateaus.size());
    for (std::size_t k = 0; k < p.plateaus.size(); ++k) CHECK(m.plateaus[k] == -p.plateaus[k]);
    CHECK(m.jumps == p.jumps);
  }
}

TEST_CASE("property: additivity under block sum") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_seed(rng, 2);
    const auto b = random_seed(rng, 2);
    const auto pa = profile_of(a);
    const auto pb = profile_of(b);
    const auto ps = profile_of(block_sum(a, b));
    // Evaluate each step function at every sample of the sum.
    auto value_at = [](const SignatureProfile& p, const Rational& z) {
      std::size_t k = 0;
      while (k < p.jumps.size() && p.jumps[k].lo > z) ++k;
      return p.plateaus[k];
    };
    for (std::size_t k = 0; k < ps.samples.size(); ++k) {
      const Rational z = ps.samples[k].z();
      CHECK(ps.plateaus[k] == value_at(pa, z) + value_at(pb, z));
    }
    CHECK(ps.value_at_minus_one == pa.value_at_minus_one + pb.value_at_minus_one);
  }
}

TEST_CASE("property: exact inertia agrees with the floating eigensolver") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> num(1, 400);
  std::uniform_int_distribution<long> den(1, 100);
  int done = 0;
  while (done < 100) {
    const auto v = random_seed(rng);
    const auto roots = isolate_unit_roots(to_z_poly(alexander_poly(v)));
    const Rational u(num(rng), den(rng));
    const auto pt = UnitCirclePoint::from_tan_half(u);
    const double z = pt.z().get_d();
    bool near_root = false;
    for (const auto& w : roots) near_root |= std::abs(w.lo.get_d() - z) < 1e-3;
    if (near_root) continue;
    ++done;
    const auto exact = inertia(b_matrix_at(v, pt));
    const auto fl = float_inertia(b_matrix_double(v, pt.phi()));
    CHECK(exact.zeros == 0);
    CHECK(fl.near_zero == 0);
    CHECK(exact.positives == fl.positives);
    CHECK(exact.negatives == fl.negatives);
  }
}
