#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qsip/error.hpp"

namespace qsip {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
/// Zero is stored as 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(unsigned v) : q_(v) {}
  Rational(unsigned long v) : q_(v) {}
  Rational(long long v) : q_(BigInt(std::to_string(v))) {}
  Rational(const BigInt& v) : q_(v) {}
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "n" or "n/d" (optional leading sign on n).
  static Rational parse(std::string_view text);

  const BigInt& num() const { return q_.get_num(); }
  const BigInt& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;
  double to_double() const { return q_.get_d(); }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;
  /// Always "num/den"; the serialization used in reports.
  std::string fraction() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rational pow(const Rational& base, long exponent);
BigInt binomial(unsigned n, unsigned k);

/// Finite set of rational primes, kept sorted and duplicate-free.
class PrimeSet {
 public:
  PrimeSet() = default;
  /// Throws InvalidArgument if an entry is not prime.
  explicit PrimeSet(std::vector<std::uint64_t> primes);

  std::span<const std::uint64_t> primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  bool empty() const { return primes_.empty(); }
  bool contains(std::uint64_t p) const;
  std::string str() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<std::uint64_t> primes_;
};

/// q = sign · ∏ p_i^exponents_i · residual, residual coprime to every p_i.
struct SUnitFactorization {
  int sign = 1;
  std::vector<long> exponents;
  Rational residual{1};

  bool is_unit() const { return residual.is_one(); }
  bool is_integer() const { return residual.is_integer(); }
};

/// Deterministic for 64-bit inputs (Miller–Rabin, fixed witness set);
/// GMP's BPSW plus 40 Miller–Rabin rounds beyond that.
bool is_prime(std::uint64_t n);
bool is_prime(const BigInt& n);

/// Prime factorization of |n| (n ≠ 0), ascending primes with multiplicity.
/// Uses trial division then Pollard–Brent rho.
std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n);

/// All positive divisors of |n| (n ≠ 0), ascending.
std::vector<BigInt> divisors(const BigInt& n);

/// v_p(q). Throws UndefinedValuation for q = 0.
long valuation(const Rational& q, std::uint64_t p);

/// Throws UndefinedValuation for q = 0.
SUnitFactorization s_unit_factor(const Rational& q, const PrimeSet& S);

bool is_s_unit(const Rational& q, const PrimeSet& S);
bool is_s_integer(const Rational& q, const PrimeSet& S);

/// Reassembles sign · ∏ p^e · residual.
Rational reassemble(const SUnitFactorization& f, const PrimeSet& S);

}  // namespace qsip
