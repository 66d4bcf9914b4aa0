#include <doctest.h>

#include "helpers.hpp"
#include "qsip/construct.hpp"
#include "qsip/elim.hpp"

using namespace qsip;
using qsip::test::P;
using qsip::test::Rng;

namespace {

MPoly Yp(const std::string& text) { return cli::parse_poly(text, {"Y1", "Y2", "Y3", "Y4"}); }

std::vector<Rational> cvec(std::initializer_list<Rational> v) { return v; }

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

// Base P^1 form whose fiber over (1:0) is lead·∏(X - r_i); the X1 part keeps
// the coefficients from being pure powers of X0.
CoeffDecomposition split_at_origin(const std::vector<Rational>& roots, const Rational& lead, Rng& rng) {
  const UPoly u = test::from_roots(roots, lead);
  const unsigned d = static_cast<unsigned>(roots.size());
  std::vector<MPoly> c;
  for (unsigned l = 0; l <= d; ++l) {
    MPoly fl = MPoly::variable(2, 0, l) * u[d - l];
    if (l > 0) fl += MPoly::variable(2, 1) * rng.homogeneous(2, 2, l - 1, 4);
    c.push_back(fl);
  }
  return decomposition_from_coeffs(c);
}

// (c_2, …, c_d) for labelled roots.
std::vector<Rational> cross_ratios(const std::vector<Rational>& a) {
  std::vector<Rational> c;
  for (std::size_t i = 1; i < a.size(); ++i) c.push_back(cross_ratio(a[0], a[1], a[2], a[i]));
  return c;
}

}  // namespace

TEST_CASE("build_ab examples") {
  const auto c = cvec({q(0), q(1), q(2)});
  const auto ab = build_ab(4, c);
  REQUIRE(ab.a.size() == 4);
  CHECK(ab.a[1] == Yp("Y2*Y3 - Y1*Y2"));
  CHECK(ab.b[1] == Yp("Y3 - Y1"));
  CHECK(ab.b[2] == Yp("Y2 - Y1"));
  CHECK(ab.a[0] == Yp("2*Y4*Y2 - 2*Y4*Y3 + Y3*Y4 - Y3*Y2"));
  CHECK_THROWS_AS(build_ab(3, cvec({q(0), q(1)})), InvalidArgument);
  CHECK_THROWS_AS(build_ab(4, cvec({q(1), q(1), q(2)})), InvalidArgument);
  CHECK_THROWS_AS(build_ab(5, c), InvalidArgument);
}

TEST_CASE("build_AB examples") {
  const auto ab = build_ab(4, cvec({q(0), q(1), q(2)}));
  const auto [A, B] = build_AB(ab);
  REQUIRE(A.size() == 4);
  CHECK(A[3] == ab.a[0] * ab.a[1] * ab.a[2] * ab.a[3]);
  MPoly a1(4);
  for (int i = 0; i < 4; ++i) {
    MPoly t = ab.a[i];
    for (int j = 0; j < 4; ++j)
      if (j != i) t *= ab.b[j];
    a1 += t;
  }
  CHECK(A[0] == a1);
  CHECK(B == ab.b[0] * ab.b[1] * ab.b[2] * ab.b[3]);
}

TEST_CASE("specialization identity and mutation control") {
  const auto ab = build_ab(4, cvec({q(0), q(1), q(2)}));
  auto [A, B] = build_AB(ab);
  CHECK(specialization_identity_check(A, B, 4));
  Rng rng(61);
  for (unsigned d = 5; d <= 6; ++d) {
    std::vector<Rational> c = {q(0), q(1)};
    for (unsigned i = 4; i <= d; ++i) c.push_back(rng.rational());
    auto [A2, B2] = build_AB(build_ab(d, c));
    CHECK(specialization_identity_check(A2, B2, 4));
  }
  auto bad = A;
  bad[1] += MPoly(4, 1);
  CHECK_FALSE(specialization_identity_check(bad, B, 4));
  CHECK_FALSE(specialization_identity_check(A, B * Rational(2), 4));
  CHECK_THROWS_AS(specialization_identity_check(A, B, 3), InvalidArgument);
}

TEST_CASE("variety_W generators") {
  Rng rng(62);
  const auto dec = split_at_origin({q(0), q(1), q(3), q(4)}, q(1), rng);
  const auto c = cvec({q(0), q(1), q(9, 8)});
  const auto data = variety_W(dec, c);
  CHECK(data.variant == Variant::general_d);
  CHECK(data.y_count == 4);
  CHECK(data.joint_arity == 6);
  REQUIRE(data.v_generators.size() == 4);
  const std::vector<std::size_t> xmap = {0, 1}, ymap = {2, 3, 4, 5};
  const MPoly expected = data.B.embed(6, ymap) * dec.f(1).embed(6, xmap) + dec.f(0).embed(6, xmap) * data.A[0].embed(6, ymap);
  CHECK(data.v_generators[0] == expected);
  const MPoly second = data.B.embed(6, ymap) * dec.f(2).embed(6, xmap) - dec.f(0).embed(6, xmap) * data.A[1].embed(6, ymap);
  CHECK(data.v_generators[1] == second);
  CHECK(data.u_parts.size() == 3);
  CHECK(data.u_parts[1].equations.size() == 4 + 1 + 4);  // V, B, A_1 … A_4
  CHECK(specialization_identity_check(data));
  CHECK_THROWS_AS(variety_W(coeff_decompose(P("X2^2 - X0*X1", 3), 2), {}), InvalidArgument);
}

TEST_CASE("variant_d2 on the conic") {
  const auto dec = coeff_decompose(P("X2^2 - X0*X1", 3), 2);
  const auto data = variant_d2(dec);
  const auto joint = [](const std::string& t) { return cli::parse_poly(t, {"X0", "X1", "Y1", "Y2"}); };
  REQUIRE(data.v_generators.size() == 2);
  CHECK(data.v_generators[0] == joint("Y1 + Y2"));
  CHECK(data.v_generators[1] == joint("-X0*X1 - Y1*Y2"));
  const std::vector<Rational> pt = {q(1), q(1), q(1), q(-1)};
  for (const auto& g : data.v_generators) CHECK(evaluate(g, pt).is_zero());
  CHECK(specialization_identity_check(data));
  CHECK_THROWS_AS(variant_d2(coeff_decompose(P("X2^3 - X0*X1^2", 3), 2)), InvalidArgument);
}

TEST_CASE("variant_d3 sub-variants") {
  const auto deg2 = decomposition_from_coeffs({P("X0^2", 2), P("X1^3", 2), P("X0^4", 2), P("X0^3*X1^2 + X1^5", 2)});
  const auto d2 = variant_d3(deg2, q(2));
  CHECK(d2.variant == Variant::d3_degGE2);
  REQUIRE(d2.aux.has_value());
  CHECK(d2.aux->z_exponent == 1);
  CHECK(d2.aux->f0_power == 2);
  // ring X0, X1, Z, X
  const std::vector<std::size_t> map = {0, 1, 3};
  CHECK(d2.aux->g == cli::parse_poly("Z*X^4", {"X0", "X1", "Z", "X"}) + deg2.reconstruct().embed(4, map));
  CHECK(d2.aux->holds);

  const auto deg1 = decomposition_from_coeffs({P("X0", 2), P("X1^2", 2), P("X0^3", 2), P("X1^4 - X0^4", 2)});
  const auto d1 = variant_d3(deg1, q(2));
  CHECK(d1.variant == Variant::d3_deg1);
  REQUIRE(d1.aux.has_value());
  CHECK(d1.aux->f0_power == 8);
  const auto gdec = coeff_decompose(d1.aux->g, 3);
  const std::vector<std::size_t> up = {0, 1};
  CHECK(gdec.f(0) == cli::parse_poly("Z", {"X0", "X1", "Z"}));
  CHECK(gdec.f(1) == P("X0^2", 2).embed(3, up));
  CHECK(gdec.f(2) == P("X0*X1^2", 2).embed(3, up));
  CHECK(gdec.f(4) == P("X0*X1^4 - X0^5", 2).embed(3, up));
  CHECK(d1.aux->holds);

  const auto deg0 = coeff_decompose(P("X2^3 - X0^2*X2 + X1^3", 3), 2);
  const auto d0 = variant_d3(deg0, q(2));
  CHECK(d0.variant == Variant::d3_deg0);
  CHECK_FALSE(d0.aux.has_value());
  const auto Y2r = [](const std::string& t) { return cli::parse_poly(t, {"Y1", "Y2"}); };
  CHECK(d0.A[2] == Y2r("3*Y1^2*Y2 - 2*Y1*Y2^2"));
  CHECK_THROWS_AS(variant_d3(coeff_decompose(P("X2^2 - X0*X1", 3), 2), q(1)), InvalidArgument);
}

TEST_CASE("variant_delta_primed") {
  Rng rng(63);
  const auto dec = split_at_origin({q(0), q(1), q(3), q(4), q(-2)}, q(1), rng);
  const auto c = cvec({q(0), q(1), q(9, 8)});
  const auto data = variant_delta_primed(dec, c);
  CHECK(data.variant == Variant::delta_primed);
  CHECK(data.roots == 4);
  CHECK(data.A.size() == 4);
  const auto ab = build_ab(4, c);
  CHECK(data.B == ab.b[0] * ab.b[1] * ab.b[2] * ab.b[3]);
  REQUIRE(data.v_generators.size() == 5);
  const std::vector<std::size_t> xmap = {0, 1};
  CHECK(data.v_generators[0] == dec.f(0).embed(data.joint_arity, xmap));
  CHECK(specialization_identity_check(data));

  // W requires f_0 ≠ 0 while V' contains f_0.
  const auto w = variety_W(dec, cvec({q(0), q(1), q(9, 8), q(2)}));
  bool w_has_f0 = false;
  for (const auto& h : w.w.inequations) w_has_f0 = w_has_f0 || h == dec.f(0).embed(w.joint_arity, xmap);
  CHECK(w_has_f0);

  const auto low = decomposition_from_coeffs({P("X0", 2), P("X1^2", 2), P("X0^3", 2), P("X1^4", 2)});
  CHECK(variant_delta_primed(low, {}).y_count == 2);
  CHECK_THROWS_AS(variant_delta_primed(coeff_decompose(P("X2^2 - X0*X1", 3), 2), {}), InvalidArgument);
}

TEST_CASE("lift_point examples") {
  Rng rng(64);
  const auto dec = split_at_origin({q(0), q(1), q(3), q(4)}, q(1), rng);
  const auto data = variety_W(dec, cvec({q(0), q(1), q(9, 8)}));
  const std::vector<Rational> x = {q(1), q(0)};
  const std::vector<Rational> roots = {q(0), q(1), q(3), q(4)};
  const auto lift = lift_point(data, x, roots);
  CHECK(lift.in_v);
  CHECK(lift.member());
  CHECK(lift.w_contains);
  CHECK(lift.point.size() == 6);

  const std::vector<Rational> wrong = {q(1), q(0), q(3), q(4)};
  CHECK_FALSE(lift_point(data, x, wrong).in_v);
  const std::vector<Rational> repeated = {q(0), q(1), q(1), q(4)};
  CHECK_THROWS_AS(lift_point(data, x, repeated), InvalidArgument);
  CHECK_THROWS_AS(lift_point(data, x, std::vector<Rational>{q(0), q(1)}), InvalidArgument);
  CHECK_THROWS_AS(lift_point(data, std::vector<Rational>{q(1)}, roots), ArityMismatch);

  const auto conic = variant_d2(coeff_decompose(P("X2^2 - X0*X1", 3), 2));
  const auto cl = lift_point(conic, std::vector<Rational>{q(1), q(1)}, std::vector<Rational>{q(1), q(-1)});
  CHECK(cl.member());
  CHECK(cl.w_contains);
}

TEST_CASE("cross-ratio helpers") {
  CHECK(cross_ratio(q(0), q(1), q(3), q(4)) == q(9, 8));
  CHECK(cross_ratio(q(0), q(1), q(3), q(1)) == q(0));
  CHECK(cross_ratio(q(0), q(1), q(3), q(3)) == q(1));
  CHECK(root_from_cross_ratio(q(0), q(1), q(3), q(9, 8)) == std::optional<Rational>(q(4)));
  CHECK(d3_constant(q(1), q(2), q(5)) == q(-4));
  CHECK_THROWS_AS(d3_constant(q(1), q(1), q(5)), DivisionByZero);
  CHECK(three_term_identity_holds());
  Rng rng(65);
  for (int k = 0; k < 100; ++k) {
    const auto a = rng.distinct_rationals(4);
    const Rational c = cross_ratio(a[0], a[1], a[2], a[3]);
    CHECK(root_from_cross_ratio(a[0], a[1], a[2], c) == std::optional<Rational>(a[3]));
  }
}

TEST_CASE("primed identity on random constants") {
  Rng rng(66);
  for (unsigned d = 5; d <= 7; ++d)
    for (int k = 0; k < 3; ++k) {
      const auto roots = rng.distinct_rationals(d);
      const auto dec = split_at_origin(roots, q(1), rng);
      std::vector<Rational> c = {q(0), q(1)};
      for (unsigned i = 4; i < d; ++i) c.push_back(rng.rational());
      CHECK(specialization_identity_check(variant_delta_primed(dec, c)));
    }
}

TEST_CASE("Viete consistency on constructed split fibers") {
  Rng rng(67);
  for (unsigned d = 4; d <= 6; ++d)
    for (int k = 0; k < 10; ++k) {
      const auto rho = rng.distinct_rationals(d);
      const Rational lead = rng.nonzero_rational();
      const auto dec = split_at_origin(rho, lead, rng);
      const auto c = cross_ratios(rho);
      const auto data = variety_W(dec, c);
      const std::vector<Rational> y(rho.begin(), rho.begin() + 4);
      const Rational B = evaluate(data.B, y);
      REQUIRE_FALSE(B.is_zero());
      const std::vector<Rational> x = {q(1), q(0)};
      const Rational f0 = evaluate(dec.f(0), x);
      for (unsigned l = 1; l <= d; ++l) {
        const Rational expected = (l % 2 ? -f0 : f0) * evaluate(data.A[l - 1], y) / B;
        CHECK(evaluate(dec.f(l), x) == expected);
      }
      CHECK(lift_point(data, x, rho).member());
    }
}

TEST_CASE("d = 3 lifts with the direct encoding") {
  Rng rng(68);
  for (int k = 0; k < 20; ++k) {
    const auto rho = rng.distinct_rationals(3);
    const auto dec = split_at_origin(rho, rng.nonzero_rational(), rng);
    const Rational c = d3_constant(rho[0], rho[1], rho[2]);
    const auto data = variant_d3(dec, c);
    const auto lift = lift_point(data, std::vector<Rational>{q(1), q(0)}, rho);
    CHECK(lift.member());
    CHECK(lift.w_contains);
  }
}

TEST_CASE("auxiliary discriminant identity on random decompositions") {
  Rng rng(69);
  for (int k = 0; k < 6; ++k) {
    const unsigned deg0 = static_cast<unsigned>(rng.range(1, 3));
    std::vector<MPoly> c;
    c.push_back(rng.homogeneous(2, 2, deg0, 3) + MPoly::variable(2, 0, deg0));
    if (c[0].is_zero()) continue;
    for (unsigned l = 1; l <= 3; ++l) c.push_back(rng.homogeneous(2, 2, deg0 + l, 3));
    const auto dec = decomposition_from_coeffs(c);
    const auto data = variant_d3(dec, q(1));
    REQUIRE(data.aux.has_value());
    CHECK(data.aux->holds);
    CHECK(data.aux->delta_z_at_zero == dec.f(0).pow(data.aux->f0_power) * discriminant(dec));
  }
}
