#pragma once

#include <set>
#include <vector>

#include "qsip/exactnum.hpp"

namespace qsip {

/// u - v = 1 with u, v S-units.
struct UnitEqSolution {
  Rational u;
  Rational v;
  friend bool operator==(const UnitEqSolution&, const UnitEqSolution&) = default;
};

/// Admissible cross-ratio constants: {0, 1} plus every c with c and c - 1
/// S-units (exponents bounded by `bound`).
struct CandidateSet {
  PrimeSet S;
  unsigned bound = 0;
  std::set<Rational> values;

  bool contains(const Rational& c) const { return values.count(c) > 0; }
};

/// ±∏ p_i^{e_i}, |e_i| ≤ bound, ordered by exponent vector (lexicographic),
/// then sign (+ before -).
std::vector<Rational> enumerate_s_units(const PrimeSet& S, unsigned bound);

/// Every exponent of the S-unit factorization lies in [-bound, bound].
bool within_bound(const Rational& q, const PrimeSet& S, unsigned bound);

/// All solutions with both exponent vectors bounded by `bound`, in the order
/// of u's enumeration. Complete relative to the bound only.
std::vector<UnitEqSolution> solve_unit_equation(const PrimeSet& S, unsigned bound);

CandidateSet candidate_c_set(const PrimeSet& S, unsigned bound);

}  // namespace qsip
