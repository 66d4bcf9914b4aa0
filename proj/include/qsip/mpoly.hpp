#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qsip/exactnum.hpp"

namespace qsip {

using Exponent = std::uint32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exps);

  std::span<const Exponent> exponents() const { return exps_; }
  std::size_t arity() const { return exps_.size(); }
  Exponent total_degree() const { return total_degree_; }
  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
  Exponent total_degree_ = 0;
};

/// Graded reverse lexicographic comparison: <0, 0, >0.
int grevlex_compare(std::span<const Exponent> a, std::span<const Exponent> b);

/// Sparse polynomial over ℚ in a fixed number of variables. Terms are kept
/// sorted descending in grevlex with nonzero coefficients and no repeats.
class MPoly {
 public:
  explicit MPoly(std::size_t arity = 0) : arity_(arity) {}
  MPoly(std::size_t arity, const Rational& constant);

  static MPoly variable(std::size_t arity, std::size_t index, Exponent power = 1);
  static MPoly term(std::size_t arity, std::span<const Exponent> exps, const Rational& c);
  /// Builds a canonical polynomial from arbitrary (possibly repeated, zero)
  /// terms.
  static MPoly from_terms(std::size_t arity,
                          std::vector<std::pair<std::vector<Exponent>, Rational>> terms);

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;

  std::span<const Exponent> exponents(std::size_t term) const {
    return {exps_.data() + term * arity_, arity_};
  }
  const Rational& coeff(std::size_t term) const { return coeffs_[term]; }
  Exponent term_degree(std::size_t term) const { return degs_[term]; }
  Monomial monomial(std::size_t term) const;

  const Rational& leading_coeff() const;
  std::span<const Exponent> leading_exponents() const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  /// -1 for the zero polynomial.
  int degree_in(std::size_t var) const;
  /// Coefficient of var^power, as a polynomial in the same ring with var absent.
  MPoly coefficient_in(std::size_t var, Exponent power) const;
  /// Coefficient of an exact monomial (zero if absent).
  Rational coefficient_of(std::span<const Exponent> exps) const;
  bool uses_variable(std::size_t var) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  MPoly operator-() const;

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(unsigned e) const;
  MPoly derivative(std::size_t var) const;
  /// Multiplies by the monomial with the given exponents and coefficient.
  MPoly mul_term(std::span<const Exponent> exps, const Rational& c) const;

  /// Moves variable i to slot var_map[i] of a ring with new_arity variables.
  MPoly embed(std::size_t new_arity, std::span<const std::size_t> var_map) const;
  /// Removes a variable slot; throws InvalidArgument if the variable occurs.
  MPoly drop_variable(std::size_t var) const;

 private:
  void check_arity(const MPoly& o) const;
  void push_term(std::span<const Exponent> exps, Exponent deg, Rational c);
  static MPoly merge(const MPoly& a, const MPoly& b, bool subtract);

  std::size_t arity_;
  std::vector<Exponent> exps_;
  std::vector<Exponent> degs_;
  std::vector<Rational> coeffs_;
};

MPoly pow(const MPoly& p, unsigned e);

/// Returns a / b if b divides a exactly, nullopt otherwise.
/// Throws DivisionByZero when b = 0.
std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b);
/// Throws DivisionByZero for b = 0 and NotDivisible when b ∤ a.
MPoly exact_divide(const MPoly& a, const MPoly& b);
bool divides(const MPoly& b, const MPoly& a);

using Binding = std::variant<MPoly, Rational>;
/// Simultaneous substitution of the bound variables; unbound variables stay.
MPoly substitute(const MPoly& f, const std::map<std::size_t, Binding>& bindings);
Rational evaluate(const MPoly& f, std::span<const Rational> point);

/// Dense univariate polynomial over ℚ, coefficients low degree first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  /// Requires that at most one variable (var) occurs in f.
  static UPoly from_mpoly(const MPoly& f, std::size_t var);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// Integer primitive polynomial with positive leading coefficient.
  std::vector<BigInt> primitive_integer() const;

  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder by Euclidean division; b ≠ 0.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);

/// Yun's algorithm: factors[k] is the squarefree part of multiplicity k+1.
std::vector<UPoly> squarefree_decomposition(const UPoly& u);

struct RootMult {
  Rational root;
  unsigned multiplicity = 1;
  friend bool operator==(const RootMult&, const RootMult&) = default;
};

/// Rational roots with multiplicities, ascending. Candidates p/q with
/// p | trailing and q | leading coefficient of the primitive integer form;
/// multiplicity by repeated deflation. Throws InvalidArgument for u = 0.
std::vector<RootMult> rational_roots(const UPoly& u);
std::vector<RootMult> rational_roots(const MPoly& u);
/// Quotient of u by ∏ (x - r)^mult over its rational roots.
UPoly deflate(const UPoly& u, const std::vector<RootMult>& roots);

/// f viewed as a univariate polynomial in the projection variable.
struct CoeffDecomposition {
  std::size_t n = 0;          // target is P^n; base ring has n + 1 variables
  unsigned m = 0;             // total degree of f
  unsigned d = 0;             // degree in the projection variable
  std::vector<MPoly> coeffs;  // f_0 … f_d in the base ring
  bool q_on_hypersurface = false;
  std::size_t proj_var = 0;   // slot of the projection variable in f's ring

  const MPoly& f(std::size_t l) const { return coeffs[l]; }
  std::size_t base_arity() const { return n + 1; }
  /// Σ f_l X^{d-l} in f's ring.
  MPoly reconstruct() const;
  /// Base-ring variable slot → slot in f's ring.
  std::vector<std::size_t> base_to_full() const;
};

/// Throws InvalidArgument (zero, d ≤ 1, bad var) or NonHomogeneous.
CoeffDecomposition coeff_decompose(const MPoly& f, std::size_t proj_var);
/// Builds a decomposition from given f_0 … f_d, with the projection variable
/// appended after the base variables. Validates the homogeneity pattern.
CoeffDecomposition decomposition_from_coeffs(std::vector<MPoly> coeffs);

}  // namespace qsip
