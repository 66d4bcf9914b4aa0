#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qsip/cli.hpp"
#include "qsip/mpoly.hpp"

namespace qsip::test {

inline std::vector<std::string> xvars(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("X" + std::to_string(i));
  return v;
}

/// Parses with variables X0 … X{arity-1}.
inline MPoly P(const std::string& text, std::size_t arity) { return cli::parse_poly(text, xvars(arity)); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(g_);
  }
  bool coin() { return range(0, 1) == 1; }

  Rational rational(std::int64_t num = 20, std::int64_t den = 9) {
    return Rational(BigInt(std::to_string(range(-num, num))), BigInt(std::to_string(range(1, den))));
  }
  Rational nonzero_rational(std::int64_t num = 20, std::int64_t den = 9) {
    for (;;) {
      Rational r = rational(num, den);
      if (!r.is_zero()) return r;
    }
  }
  std::vector<Rational> distinct_rationals(std::size_t k, std::int64_t num = 20, std::int64_t den = 9) {
    std::vector<Rational> out;
    while (out.size() < k) {
      Rational r = rational(num, den);
      bool fresh = true;
      for (const auto& o : out) fresh = fresh && !(o == r);
      if (fresh) out.push_back(r);
    }
    return out;
  }

  /// Sparse polynomial with up to `terms` terms of total degree ≤ max_deg.
  MPoly poly(std::size_t arity, int terms, unsigned max_deg) {
    std::vector<std::pair<std::vector<Exponent>, Rational>> t;
    const int count = static_cast<int>(range(0, terms));
    for (int k = 0; k < count; ++k) {
      std::vector<Exponent> e(arity, 0);
      unsigned budget = static_cast<unsigned>(range(0, max_deg));
      for (unsigned s = 0; s < budget && arity > 0; ++s) ++e[static_cast<std::size_t>(range(0, static_cast<std::int64_t>(arity) - 1))];
      t.emplace_back(std::move(e), rational());
    }
    return MPoly::from_terms(arity, std::move(t));
  }

  /// Homogeneous polynomial of the given degree (possibly zero).
  MPoly homogeneous(std::size_t arity, int terms, unsigned deg, std::int64_t coeff = 5) {
    std::vector<std::pair<std::vector<Exponent>, Rational>> t;
    for (int k = 0; k < terms; ++k) {
      std::vector<Exponent> e(arity, 0);
      for (unsigned s = 0; s < deg; ++s) ++e[static_cast<std::size_t>(range(0, static_cast<std::int64_t>(arity) - 1))];
      t.emplace_back(std::move(e), Rational(static_cast<long>(range(-coeff, coeff))));
    }
    return MPoly::from_terms(arity, std::move(t));
  }

  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

/// ∏ (X - r_i) as a univariate polynomial.
inline UPoly from_roots(const std::vector<Rational>& roots, const Rational& lead = Rational(1)) {
  UPoly u(std::vector<Rational>{lead});
  for (const auto& r : roots) u = u * UPoly(std::vector<Rational>{-r, Rational(1)});
  return u;
}

}  // namespace qsip::test
