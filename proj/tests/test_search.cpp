#include <doctest.h>

#include <numeric>
#include <set>

#include "helpers.hpp"
#include "qsip/search.hpp"

using namespace qsip;
using qsip::test::P;
using qsip::test::Rng;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

std::vector<std::vector<std::int64_t>> coords(const std::vector<ProjectivePoint>& pts) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& p : pts) out.push_back(p.coords());
  return out;
}

std::vector<std::vector<std::int64_t>> report_points(const ScanResult& r) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& rep : r.reports) out.push_back(rep.point.coords());
  return out;
}

// Canonical primitive vectors in the box, by brute force.
std::set<std::vector<std::int64_t>> canonical_box(std::size_t n, std::int64_t h) {
  std::set<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x(n + 1, -h);
  for (;;) {
    std::int64_t g = 0;
    for (auto v : x) g = std::gcd(g, v);
    if (g == 1) {
      auto first = std::find_if(x.begin(), x.end(), [](std::int64_t v) { return v != 0; });
      if (*first > 0) out.insert(x);
    }
    std::size_t i = x.size();
    while (i > 0 && x[i - 1] == h) x[--i] = -h;
    if (i == 0) return out;
    ++x[i - 1];
  }
}

bool smooth_23(long long v) {
  if (v == 0) return false;
  if (v < 0) v = -v;
  while (v % 2 == 0) v /= 2;
  while (v % 3 == 0) v /= 3;
  return v == 1;
}

BranchData conic() { return branch_data(coeff_decompose(P("X2^2 - X0*X1", 3), 2)); }

}  // namespace

TEST_CASE("projective point normalization") {
  const ProjectivePoint p({-2, 4, 0});
  CHECK(p.coords() == std::vector<std::int64_t>{1, -2, 0});
  CHECK(p.height() == 2);
  CHECK(p.str() == "(1:-2:0)");
  CHECK(ProjectivePoint({0, -3}).coords() == std::vector<std::int64_t>{0, 1});
  CHECK_THROWS_AS(ProjectivePoint({0, 0}), InvalidArgument);
  CHECK(ProjectivePoint({1, 1}) < ProjectivePoint({1, 2}));
  CHECK(ProjectivePoint({0, 1}) < ProjectivePoint({1, -1}));
}

TEST_CASE("enumeration counts") {
  const auto h1 = enumerate_points(1, 1);
  CHECK(h1.size() == 4);
  CHECK(coords(h1) == std::vector<std::vector<std::int64_t>>{{0, 1}, {1, -1}, {1, 0}, {1, 1}});
  CHECK(enumerate_points(1, 2).size() == 8);
  CHECK(enumerate_points(2, 1).size() == 13);
}

TEST_CASE("enumeration matches the brute-force box") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::int64_t h = 1; h <= (n == 3 ? 3 : 6); ++h) {
      const auto pts = enumerate_points(n, h);
      const auto c = coords(pts);
      CHECK(std::set<std::vector<std::int64_t>>(c.begin(), c.end()) == canonical_box(n, h));
      CHECK(std::is_sorted(pts.begin(), pts.end()));
      CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
    }
}

TEST_CASE("integer evaluator") {
  const MPoly f = P("1/2*X0^3 + 3*X1^2*X2 - 5/3*X2^3", 3);
  const IntegerEvaluator e(f);
  CHECK(e.denominator() == 6);
  Rng rng(81);
  for (int k = 0; k < 100; ++k) {
    const std::vector<std::int64_t> x = {rng.range(-1000000, 1000000), rng.range(-1000, 1000), rng.range(-1000000, 1000000)};
    const std::vector<Rational> xr = {q(x[0]), q(x[1]), q(x[2])};
    CHECK(e(x) == evaluate(f, xr));
  }
}

TEST_CASE("filter complement examples") {
  const auto b = conic();
  const PrimeSet S({2, 3});
  const std::vector<ProjectivePoint> pts = {ProjectivePoint({1, 6}), ProjectivePoint({1, 5}), ProjectivePoint({1, 0})};
  const auto out = filter_complement(pts, b, S);
  REQUIRE(out.size() == 1);
  CHECK(out[0].point == ProjectivePoint({1, 6}));
  CHECK(out[0].d_form_value == q(24));
  CHECK(out[0].factor.exponents == std::vector<long>{3, 1});
}

namespace {

// f = X2 (X2 - X0)(X2 - 3 X0)(X2 - 4 X0) + X1·(X2^3 + X0 X1^2)
BranchData quartic_with_known_fiber() {
  const MPoly f = P("X2^4 - 8*X0*X2^3 + 19*X0^2*X2^2 - 12*X0^3*X2 + X1*X2^3 + X0*X1^3", 3);
  return branch_data(coeff_decompose(f, 2));
}

}  // namespace

TEST_CASE("fiber report on a split quartic fiber") {
  const auto b = quartic_with_known_fiber();
  const PrimeSet S({2, 3});
  const auto cand = candidate_c_set(S, 6);
  const auto r = fiber_report(b, ProjectivePoint({1, 0}), S, cand);
  CHECK(r.delta_value == q(5184));
  CHECK(r.delta_factor.exponents == std::vector<long>{6, 4});
  CHECK(r.split_over_q);
  REQUIRE(r.roots.exact.size() == 4);
  CHECK(r.roots.exact[3].root == q(4));
  REQUIRE(r.xij.size() == 6);
  for (const auto& e : r.xij) {
    const BigInt a = abs(e.value);
    CHECK((a >= 1 && a <= 4));
  }
  CHECK(r.extra_primes.empty());
  REQUIRE(r.matched.has_value());
  CHECK(r.matched->c == std::vector<Rational>{q(0), q(1), q(9, 8)});
  CHECK(r.lift_ok == std::optional<bool>(true));
  CHECK(r.construction == std::optional<std::string>("general_d"));
}

TEST_CASE("fiber report on the conic and an irrational fiber") {
  const auto b = conic();
  const PrimeSet S({2, 3});
  const auto cand = candidate_c_set(S, 4);
  const auto r = fiber_report(b, ProjectivePoint({1, 1}), S, cand);
  CHECK(r.delta_value == q(4));
  CHECK(r.split_over_q);
  CHECK(r.lift_ok == std::optional<bool>(true));
  CHECK(r.construction == std::optional<std::string>("d2"));
  CHECK_THROWS_AS(fiber_report(b, ProjectivePoint({1, 0}), S, cand), OnBranchLocus);

  const auto irr = branch_data(coeff_decompose(P("X2^2 - 2*X0^2 - X0*X1", 3), 2));
  const auto ri = fiber_report(irr, ProjectivePoint({1, 0}), S, cand);
  CHECK_FALSE(ri.split_over_q);
  CHECK_FALSE(ri.matched.has_value());
  CHECK_FALSE(ri.lift_ok.has_value());
  REQUIRE(ri.roots.approx.size() == 2);
  CHECK(ri.roots.approx[1].re_text.rfind("1.414", 0) == 0);
  CHECK(std::find(ri.notes.begin(), ri.notes.end(), "verification heuristic only") != ri.notes.end());
}

TEST_CASE("fiber report with a vanishing leading coefficient") {
  // f_0 = X0 vanishes at (0:1); the fiber drops to degree d - 1.
  const auto b = branch_data(coeff_decompose(P("X0*X2^3 - X1^2*X2^2 + X1^4 - X0^2*X1*X2", 3), 2));
  const PrimeSet S({2, 3});
  const auto r = fiber_report(b, ProjectivePoint({0, 1}), S, candidate_c_set(S, 4));
  CHECK(r.leading_vanishes);
  CHECK(r.roots.count() == 2);
}

TEST_CASE("root-count law") {
  Rng rng(82);
  for (int k = 0; k < 200; ++k) {
    const unsigned d = static_cast<unsigned>(rng.range(2, 5));
    const unsigned first = static_cast<unsigned>(rng.range(0, d));
    std::vector<MPoly> c;
    for (unsigned l = 0; l <= d; ++l) {
      const Rational v = l < first ? q(0) : (l == first ? rng.nonzero_rational() : rng.rational());
      c.push_back(MPoly::variable(2, 0, l + 1) * v + MPoly::variable(2, 1, l + 1) * q(l == 0 ? 1 : 0) +
                  MPoly::variable(2, 1) * rng.homogeneous(2, 2, l, 3));
    }
    if (c[0].is_zero()) continue;
    const auto dec = decomposition_from_coeffs(c);
    const auto fr = fiber_roots(dec, std::vector<Rational>{q(1), q(0)});
    CHECK(fr.first_nonzero == first);
    CHECK(fr.count() == d - first);
  }
}

TEST_CASE("fiber_roots errors") {
  const auto dec = decomposition_from_coeffs({P("X1", 2), P("X1^2", 2), P("X1^3", 2)});
  CHECK_THROWS_AS(fiber_roots(dec, std::vector<Rational>{q(1), q(0)}), InvalidArgument);
  CHECK_THROWS_AS(fiber_roots(dec, std::vector<Rational>{q(1)}), ArityMismatch);
}

TEST_CASE("conic scan against the brute-force oracle") {
  const auto b = conic();
  const PrimeSet S({2, 3});
  const auto cand = candidate_c_set(S, 6);
  ScanOptions opt;
  opt.height_hi = 12;
  const auto res = scan(b, S, cand, opt);
  std::vector<std::vector<std::int64_t>> expected;
  for (const auto& p : enumerate_points(1, 12))
    if (smooth_23(4LL * p.coords()[0] * p.coords()[1])) expected.push_back(p.coords());
  CHECK(report_points(res) == expected);
  CHECK(res.passed == expected.size());
  CHECK(res.enumerated == enumerate_points(1, 12).size());
  for (const auto& r : res.reports) {
    CHECK(is_s_unit(r.d_form_value, S));
    CHECK(r.roots.count() == 2);
    if (r.split_over_q) CHECK(r.lift_ok.has_value());
  }

  const auto none = scan(b, PrimeSet{}, candidate_c_set(PrimeSet{}, 2), opt);
  CHECK(none.reports.empty());
}

TEST_CASE("scan is invariant under partitioning and threads") {
  const auto b = conic();
  const PrimeSet S({2, 3, 5});
  const auto cand = candidate_c_set(S, 4);
  ScanOptions all;
  all.height_hi = 30;
  const auto whole = scan(b, S, cand, all);
  ScanOptions lo = all, hi = all;
  lo.height_hi = 11;
  hi.height_lo = 12;
  const auto merged = merge_scans({scan(b, S, cand, hi), scan(b, S, cand, lo)});
  CHECK(report_points(merged) == report_points(whole));
  CHECK(merged.passed == whole.passed);
  CHECK(merged.lifted == whole.lifted);
  CHECK(merged.class_counts == whole.class_counts);
  ScanOptions threaded = all;
  threaded.threads = 4;
  const auto par = scan(b, S, cand, threaded);
  CHECK(report_points(par) == report_points(whole));
  CHECK(par.enumerated == whole.enumerated);
  CHECK_THROWS_AS(scan(b, S, cand, ScanOptions{5, 4, 1, {}}), InvalidArgument);
}

TEST_CASE("solve examples") {
  SolveOptions prim;
  prim.primitive_only = true;
  const auto s = solve_form_equation(P("4*X0*X1", 2), q(24), 10, prim);
  const std::vector<std::vector<std::int64_t>> expected = {{-6, -1}, {-3, -2}, {-2, -3}, {-1, -6},
                                                           {1, 6},   {2, 3},   {3, 2},   {6, 1}};
  CHECK(s.solutions == expected);
  const auto all = solve_form_equation(P("4*X0*X1", 2), q(24), 10);
  CHECK(all.solutions == expected);

  CHECK(solve_form_equation(P("X0^2 + X1^2", 2), q(-1), 10).solutions.empty());
  const auto obs = solve_form_equation(P("X0^2 - 3*X1^2", 2), q(2), 50);
  CHECK(obs.solutions.empty());
  CHECK(obs.obstruction == std::optional<std::uint64_t>(3));

  CHECK_THROWS_AS(solve_form_equation(P("X0^2 + X1", 2), q(1), 3), NonHomogeneous);
  CHECK_THROWS_AS(solve_form_equation(P("X0*X1", 2), q(0), 3), InvalidArgument);
  CHECK_THROWS_AS(solve_form_equation(MPoly(2), q(1), 3), InvalidArgument);
}

TEST_CASE("presieve agrees with plain enumeration") {
  Rng rng(83);
  for (int k = 0; k < 150; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.range(2, 3));
    MPoly F = rng.homogeneous(n, static_cast<int>(rng.range(1, 4)), static_cast<unsigned>(rng.range(1, 3)), 4);
    if (F.is_zero()) continue;
    const auto bound = rng.range(1, 5);
    // pick c from an actual value half of the time
    std::vector<std::int64_t> x(n);
    for (auto& v : x) v = rng.range(-bound, bound);
    const Rational fx = IntegerEvaluator(F)(x);
    const Rational c = (rng.coin() && !fx.is_zero()) ? fx : rng.nonzero_rational(30, 1);
    SolveOptions on, off;
    on.primitive_only = off.primitive_only = rng.coin();
    off.presieve = false;
    CHECK(solve_form_equation(F, c, bound, on).solutions == solve_form_equation(F, c, bound, off).solutions);
  }
}
