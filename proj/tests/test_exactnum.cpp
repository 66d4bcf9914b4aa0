#include <doctest.h>

#include "helpers.hpp"
#include "qsip/exactnum.hpp"

using namespace qsip;
using qsip::test::Rng;

TEST_CASE("rational canonical form") {
  const Rational a(BigInt(6), BigInt(-4));
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(Rational(BigInt(0), BigInt(7)).den() == 1);
  CHECK(Rational::parse("-10/4") == Rational(BigInt(-5), BigInt(2)));
  CHECK(Rational::parse("17").is_integer());
  CHECK(Rational(BigInt(3), BigInt(1)).fraction() == "3/1");
  CHECK(Rational(BigInt(-3), BigInt(6)).str() == "-1/2");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/x"), InvalidArgument);
}

TEST_CASE("rational arithmetic") {
  const Rational h(BigInt(1), BigInt(2)), t(BigInt(1), BigInt(3));
  CHECK(h + t == Rational(BigInt(5), BigInt(6)));
  CHECK(h - t == Rational(BigInt(1), BigInt(6)));
  CHECK(h * t == Rational(BigInt(1), BigInt(6)));
  CHECK(h / t == Rational(BigInt(3), BigInt(2)));
  CHECK(pow(h, -3) == Rational(8));
  CHECK(pow(Rational(-2), 5) == Rational(-32));
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(4, 5) == 0);
  CHECK(t < h);
}

TEST_CASE("primality and factorization") {
  CHECK(is_prime(std::uint64_t{2}));
  CHECK_FALSE(is_prime(std::uint64_t{1}));
  CHECK(is_prime(std::uint64_t{18446744073709551557ull}));
  CHECK_FALSE(is_prime(std::uint64_t{3215031751ull}));  // strong pseudoprime to bases 2,3,5,7
  CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));
  const auto f = factor_integer(BigInt(-360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<BigInt, unsigned>(BigInt(2), 3));
  CHECK(f[1] == std::pair<BigInt, unsigned>(BigInt(3), 2));
  CHECK(f[2] == std::pair<BigInt, unsigned>(BigInt(5), 1));
  const auto big = factor_integer(BigInt("1000000016000000063"));  // 1000000007 · 1000000009
  REQUIRE(big.size() == 2);
  CHECK(big[0].first == BigInt(1000000007));
  CHECK(big[1].first == BigInt(1000000009));
  const auto ds = divisors(BigInt(12));
  CHECK(ds == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("prime set validation") {
  const PrimeSet S({5, 2, 3, 2});
  CHECK(S.size() == 3);
  CHECK(S.primes()[0] == 2);
  CHECK(S.contains(5));
  CHECK_FALSE(S.contains(7));
  CHECK_THROWS_AS(PrimeSet({4}), InvalidArgument);
  CHECK_THROWS_AS(PrimeSet({1}), InvalidArgument);
}

TEST_CASE("valuation examples") {
  CHECK(valuation(Rational(12), 2) == 2);
  CHECK(valuation(Rational(BigInt(1), BigInt(9)), 3) == -2);
  CHECK(valuation(Rational(5), 2) == 0);
  CHECK_THROWS_AS(valuation(Rational(0), 2), UndefinedValuation);
}

TEST_CASE("s_unit_factor examples") {
  const PrimeSet S23({2, 3});
  auto f = s_unit_factor(Rational(72), S23);
  CHECK(f.sign == 1);
  CHECK(f.exponents == std::vector<long>{3, 2});
  CHECK(f.residual == Rational(1));

  f = s_unit_factor(Rational(BigInt(-5), BigInt(8)), S23);
  CHECK(f.sign == -1);
  CHECK(f.exponents == std::vector<long>{-3, 0});
  CHECK(f.residual == Rational(5));

  f = s_unit_factor(Rational(1), PrimeSet{});
  CHECK(f.sign == 1);
  CHECK(f.exponents.empty());
  CHECK(f.residual == Rational(1));

  CHECK_THROWS_AS(s_unit_factor(Rational(0), S23), UndefinedValuation);
}

TEST_CASE("s-unit and s-integer predicates") {
  const PrimeSet S23({2, 3});
  CHECK(is_s_unit(Rational(5184), S23));
  CHECK_FALSE(is_s_unit(Rational(5), S23));
  CHECK_FALSE(is_s_unit(Rational(0), S23));
  CHECK(is_s_integer(Rational(0), S23));
  CHECK(is_s_integer(Rational(BigInt(7), BigInt(3)), PrimeSet({3})));
  CHECK_FALSE(is_s_integer(Rational(BigInt(7), BigInt(5)), PrimeSet({3})));
}

TEST_CASE("valuation strips the prime") {
  Rng rng(11);
  const std::uint64_t primes[] = {2, 3, 5, 7};
  for (int k = 0; k < 500; ++k) {
    const Rational q = rng.nonzero_rational(5000, 3000);
    const auto p = primes[rng.range(0, 3)];
    const long v = valuation(q, p);
    CHECK(valuation(q * pow(Rational(static_cast<long>(p)), -v), p) == 0);
  }
}

TEST_CASE("reassembly recovers the input") {
  Rng rng(12);
  const PrimeSet S({2, 3, 5});
  for (int k = 0; k < 1000; ++k) {
    const Rational q = rng.nonzero_rational(100000, 100000);
    const auto f = s_unit_factor(q, S);
    CHECK(reassemble(f, S) == q);
    for (auto p : S.primes()) {
      CHECK(valuation(f.residual, p) == 0);
    }
    CHECK(f.is_unit() == is_s_unit(q, S));
    CHECK(f.is_integer() == is_s_integer(q, S));
  }
}

TEST_CASE("s-units are closed under products and inverses") {
  Rng rng(13);
  const PrimeSet S({2, 3, 5});
  auto unit = [&] {
    Rational u(rng.coin() ? 1 : -1);
    for (long p : {2L, 3L, 5L}) u *= pow(Rational(p), static_cast<long>(rng.range(-6, 6)));
    return u;
  };
  for (int k = 0; k < 300; ++k) {
    const Rational a = unit(), b = unit();
    REQUIRE(is_s_unit(a, S));
    CHECK(is_s_unit(a * b, S));
    CHECK(is_s_unit(a / b, S));
    CHECK_FALSE(is_s_unit(a * Rational(7), S));
  }
}
