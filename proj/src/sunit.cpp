#include "qsip/sunit.hpp"

#include <cstdlib>

namespace qsip {

std::vector<Rational> enumerate_s_units(const PrimeSet& S, unsigned bound) {
  const std::size_t k = S.size();
  const long b = static_cast<long>(bound);
  std::vector<long> e(k, -b);
  std::vector<Rational> out;
  for (;;) {
    Rational u(1);
    for (std::size_t i = 0; i < k; ++i) u *= pow(Rational(static_cast<unsigned long>(S.primes()[i])), e[i]);
    out.push_back(u);
    out.push_back(-u);
    // Odometer with the last slot moving fastest.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (e[i] < b) {
        ++e[i];
        break;
      }
      e[i] = -b;
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

bool within_bound(const Rational& q, const PrimeSet& S, unsigned bound) {
  const auto f = s_unit_factor(q, S);
  for (auto x : f.exponents)
    if (std::labs(x) > static_cast<long>(bound)) return false;
  return true;
}

std::vector<UnitEqSolution> solve_unit_equation(const PrimeSet& S, unsigned bound) {
  std::vector<UnitEqSolution> out;
  for (const auto& u : enumerate_s_units(S, bound)) {
    Rational v = u - Rational(1);
    if (v.is_zero()) continue;
    const auto f = s_unit_factor(v, S);
    if (!f.is_unit()) continue;
    bool ok = true;
    for (auto x : f.exponents) ok = ok && std::labs(x) <= static_cast<long>(bound);
    if (ok) out.push_back({u, std::move(v)});
  }
  return out;
}

CandidateSet candidate_c_set(const PrimeSet& S, unsigned bound) {
  CandidateSet c;
  c.S = S;
  c.bound = bound;
  c.values.insert(Rational(0));
  c.values.insert(Rational(1));
  for (const auto& sol : solve_unit_equation(S, bound)) c.values.insert(sol.u);
  return c;
}

}  // namespace qsip
