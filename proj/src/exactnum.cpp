#include "qsip/exactnum.hpp"

#include <algorithm>
#include <cctype>

namespace qsip {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw InvalidArgument("empty integer in rational literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw InvalidArgument("malformed integer '" + std::string(s) + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw InvalidArgument("malformed integer '" + std::string(s) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::abs() const {
  Rational r;
  mpq_abs(r.q_.get_mpq_t(), q_.get_mpq_t());
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Rational r;
  mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::string Rational::fraction() const { return num().get_str() + "/" + den().get_str(); }

Rational& Rational::operator+=(const Rational& o) {
  mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  mpq_mul(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  mpq_div(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.q_.get_mpq_t(), q_.get_mpq_t());
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  for (auto p : primes_)
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::string PrimeSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(primes_[i]);
  }
  return out + "}";
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool fits_u64(const BigInt& n) { return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const BigInt& n) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

BigInt from_u64(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

BigInt pollard_brent(const BigInt& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  BigInt y = seed % n, c = (seed * 7 + 1) % n, g = 1, r = 1, q = 1, x, ys;
  const unsigned long m = 64;
  auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
  while (g == 1) {
    x = y;
    for (BigInt i = 0; i < r; ++i) y = f(y);
    BigInt k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (BigInt i = 0; i < m && i < r - k; ++i) {
        y = f(y);
        q = (q * abs(x - y)) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      BigInt diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void split_factor(const BigInt& n, std::vector<BigInt>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (unsigned long seed = 2;; ++seed) {
    BigInt d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      split_factor(d, out);
      split_factor(BigInt(n / d), out);
      return;
    }
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : small) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : small) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime(to_u64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n) {
  if (n == 0) throw InvalidArgument("factor_integer(0)");
  BigInt m = abs(n);
  std::vector<BigInt> primes;
  for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      primes.push_back(BigInt(p));
      m /= p;
    }
    if (BigInt(p) * p > m) break;
  }
  split_factor(m, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<BigInt, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> out{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = out.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long valuation(const Rational& q, std::uint64_t p) {
  if (q.is_zero()) throw UndefinedValuation("valuation of zero");
  const BigInt bp = from_u64(p);
  BigInt rest;
  const long vn = static_cast<long>(mpz_remove(rest.get_mpz_t(), q.num().get_mpz_t(), bp.get_mpz_t()));
  const long vd = static_cast<long>(mpz_remove(rest.get_mpz_t(), q.den().get_mpz_t(), bp.get_mpz_t()));
  return vn - vd;
}

SUnitFactorization s_unit_factor(const Rational& q, const PrimeSet& S) {
  if (q.is_zero()) throw UndefinedValuation("S-unit factorization of zero");
  SUnitFactorization out;
  out.sign = q.sign();
  BigInt num = abs(q.num()), den = q.den();
  out.exponents.reserve(S.size());
  for (auto p : S.primes()) {
    const BigInt bp = from_u64(p);
    const long vn = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), bp.get_mpz_t()));
    const long vd = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), bp.get_mpz_t()));
    out.exponents.push_back(vn - vd);
  }
  out.residual = Rational(num, den);
  return out;
}

bool is_s_unit(const Rational& q, const PrimeSet& S) {
  if (q.is_zero()) return false;
  return s_unit_factor(q, S).is_unit();
}

bool is_s_integer(const Rational& q, const PrimeSet& S) {
  if (q.is_zero()) return true;
  return s_unit_factor(q, S).is_integer();
}

Rational reassemble(const SUnitFactorization& f, const PrimeSet& S) {
  Rational out = f.residual;
  if (f.sign < 0) out = -out;
  for (std::size_t i = 0; i < S.size(); ++i)
    out *= pow(Rational(from_u64(S.primes()[i])), f.exponents[i]);
  return out;
}

}  // namespace qsip
