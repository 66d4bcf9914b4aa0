#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "qsip/sunit.hpp"

using namespace qsip;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

std::set<std::pair<Rational, Rational>> as_set(const std::vector<UnitEqSolution>& v) {
  std::set<std::pair<Rational, Rational>> s;
  for (const auto& x : v) s.emplace(x.u, x.v);
  return s;
}

}  // namespace

TEST_CASE("enumerate s-units") {
  CHECK(enumerate_s_units(PrimeSet{}, 4) == std::vector<Rational>{q(1), q(-1)});
  const auto two = enumerate_s_units(PrimeSet({2}), 1);
  CHECK(two == std::vector<Rational>{q(1, 2), q(-1, 2), q(1), q(-1), q(2), q(-2)});
  const auto six = enumerate_s_units(PrimeSet({2, 3}), 2);
  CHECK(six.size() == 50);
  CHECK(std::set<Rational>(six.begin(), six.end()).size() == 50);
  for (const auto& u : six) CHECK(is_s_unit(u, PrimeSet({2, 3})));
}

TEST_CASE("unit equation examples") {
  const auto s23 = as_set(solve_unit_equation(PrimeSet({2, 3}), 3));
  CHECK(s23.count({q(9), q(8)}) == 1);
  CHECK(as_set(solve_unit_equation(PrimeSet({2, 3}), 2)).count({q(9), q(8)}) == 0);
  CHECK(solve_unit_equation(PrimeSet{}, 6).empty());
  const auto s2 = solve_unit_equation(PrimeSet({2}), 5);
  CHECK(as_set(s2) == std::set<std::pair<Rational, Rational>>{{q(2), q(1)}, {q(1, 2), q(-1, 2)}, {q(-1), q(-2)}});
}

TEST_CASE("candidate set examples") {
  const auto c = candidate_c_set(PrimeSet({2, 3}), 10);
  CHECK(c.contains(q(9, 8)));
  CHECK_FALSE(c.contains(q(5)));
  CHECK(c.contains(q(0)));
  CHECK(c.contains(q(1)));
  const auto c2 = candidate_c_set(PrimeSet({2}), 5);
  CHECK(c2.values == std::set<Rational>{q(0), q(1), q(2), q(1, 2), q(-1)});
}

TEST_CASE("solutions are exact s-unit pairs") {
  const PrimeSet S({2, 3, 5});
  for (const auto& s : solve_unit_equation(S, 4)) {
    CHECK(s.u - s.v == q(1));
    CHECK(is_s_unit(s.u, S));
    CHECK(is_s_unit(s.v, S));
    CHECK(within_bound(s.u, S, 4));
    CHECK(within_bound(s.v, S, 4));
  }
}

TEST_CASE("solution set is stable under the S3 action with doubled bound") {
  for (const auto& primes : {std::vector<std::uint64_t>{2}, {2, 3}, {2, 5}, {2, 3, 5}}) {
    const PrimeSet S(primes);
    const unsigned B = primes.size() == 3 ? 3 : 4;
    const auto wide = as_set(solve_unit_equation(S, 2 * B));
    for (const auto& s : solve_unit_equation(S, B)) {
      CHECK(wide.count({s.u.inverse(), -s.v / s.u}) == 1);
      CHECK(wide.count({-s.v, -s.u}) == 1);
    }
  }
}

TEST_CASE("candidate set closure with doubled bound") {
  const PrimeSet S({2, 3});
  const auto narrow = candidate_c_set(S, 5);
  const auto wide = candidate_c_set(S, 10);
  for (const auto& c : narrow.values) {
    CHECK(wide.contains(q(1) - c));
    if (!c.is_zero()) {
      const Rational inv = c.inverse();
      CHECK((wide.contains(inv) || inv == q(1)));
    }
    if (c != q(0) && c != q(1)) {
      CHECK(is_s_unit(c, S));
      CHECK(is_s_unit(c - q(1), S));
    }
  }
}

TEST_CASE("bounds 10 and 20 agree for {2,3}") {
  const PrimeSet S({2, 3});
  CHECK(as_set(solve_unit_equation(S, 10)) == as_set(solve_unit_equation(S, 20)));
}
