#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsip/construct.hpp"
#include "qsip/locus.hpp"
#include "qsip/numroots.hpp"
#include "qsip/sunit.hpp"

namespace qsip {

/// Canonical integer representative: coprime coordinates, first nonzero
/// coordinate positive. Ordered by height, then lexicographically.
class ProjectivePoint {
 public:
  ProjectivePoint() = default;
  /// Normalizes; throws InvalidArgument for the zero vector.
  explicit ProjectivePoint(std::vector<std::int64_t> coords);

  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::int64_t height() const { return height_; }
  std::size_t size() const { return coords_.size(); }
  std::vector<Rational> rationals() const;
  std::string str() const;  // "(x0:x1:…)"

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b);

 private:
  std::vector<std::int64_t> coords_;
  std::int64_t height_ = 0;
};

/// Points of P^n with height in [lo, hi], each once, in ascending order.
void for_each_point(std::size_t n, std::int64_t lo, std::int64_t hi,
                    const std::function<void(const ProjectivePoint&)>& visit);
std::vector<ProjectivePoint> enumerate_points(std::size_t n, std::int64_t height_bound);

/// Exact evaluation of a rational polynomial at integer points through a
/// scaled integer copy: value = scaled(x) / denominator.
class IntegerEvaluator {
 public:
  explicit IntegerEvaluator(const MPoly& f);
  BigInt scaled(std::span<const std::int64_t> x) const;
  Rational operator()(std::span<const std::int64_t> x) const;
  const BigInt& denominator() const { return den_; }

 private:
  std::size_t arity_ = 0;
  unsigned max_exp_ = 0;
  std::vector<std::vector<Exponent>> exps_;
  std::vector<BigInt> coeffs_;
  BigInt den_{1};
};

struct FilteredPoint {
  ProjectivePoint point;
  Rational d_form_value;
  SUnitFactorization factor;
};

/// Keeps exactly the points whose d_form value is a nonzero S-unit.
std::vector<FilteredPoint> filter_complement(std::span<const ProjectivePoint> points,
                                             const BranchData& branch, const PrimeSet& S);

/// Roots of f(x, X) for a single point.
struct FiberRoots {
  unsigned first_nonzero = 0;  // min{i : f_i(x) ≠ 0}
  std::vector<RootMult> exact;
  std::vector<ApproxRoot> approx;  // non-rational roots, with multiplicities

  unsigned count() const;  // with multiplicity
  bool split() const { return approx.empty(); }
};

/// Throws InvalidArgument when every f_i vanishes at x, and
/// NumericSeparationFailure when the irrational roots cannot be certified.
FiberRoots fiber_roots(const CoeffDecomposition& dec, std::span<const Rational> x,
                       unsigned precision_bits = 256);

struct XijEntry {
  std::size_t i = 0, j = 0;  // 1-based, i < j, ascending root labelling
  BigInt value;
  std::vector<BigInt> support;
};

struct CrossRatioMatch {
  std::vector<Rational> c;          // constants handed to the construction
  std::vector<std::size_t> order;   // witness: labelled root k is sorted root order[k]
};

struct FiberReport {
  ProjectivePoint point;
  Rational delta_value;
  SUnitFactorization delta_factor;
  Rational d_form_value;
  SUnitFactorization d_form_factor;
  bool leading_vanishes = false;  // f_0(x) = 0: handled by the primed construction
  FiberRoots roots;
  bool split_over_q = false;
  std::vector<std::pair<BigInt, BigInt>> mu_delta;  // (μ_i, δ_i)
  std::vector<XijEntry> xij;
  std::vector<BigInt> extra_primes;  // x_ij primes outside S
  std::optional<CrossRatioMatch> matched;
  std::optional<std::string> construction;  // variant name when lifted
  std::optional<bool> lift_ok;
  std::optional<CrossRatioMatch> numeric_match;  // non-split fibers only
  std::optional<std::string> numeric_failure;
  std::optional<unsigned> t_class;
  std::vector<std::string> notes;
};

struct FiberOptions {
  unsigned precision_bits = 256;
  bool numeric_evidence = true;
};

/// Throws OnBranchLocus when Δ(x) = 0.
FiberReport fiber_report(const BranchData& branch, const ProjectivePoint& point, const PrimeSet& S,
                         const CandidateSet& candidates, const FiberOptions& opt = {});

struct ScanOptions {
  std::int64_t height_lo = 1;
  std::int64_t height_hi = 1;
  unsigned threads = 1;
  FiberOptions fiber;
};

struct ScanResult {
  std::vector<FiberReport> reports;
  std::size_t enumerated = 0;
  std::size_t passed = 0;
  std::size_t split = 0;
  std::size_t matched = 0;
  std::size_t lifted = 0;
  std::size_t numeric_failures = 0;
  std::map<std::string, std::size_t> class_counts;  // "T_i" or "none"
};

ScanResult scan(const BranchData& branch, const PrimeSet& S, const CandidateSet& candidates,
                const ScanOptions& opt);
/// Concatenates results of disjoint height ranges and restores point order.
ScanResult merge_scans(std::vector<ScanResult> parts);

struct FormSolutions {
  std::vector<std::vector<std::int64_t>> solutions;  // ascending lexicographic
  std::optional<std::uint64_t> obstruction;  // p with F(x) ≢ c mod p for every x
  std::size_t sieved = 0;                    // box points rejected by the pre-sieve
  std::size_t evaluated = 0;                 // box points evaluated exactly
};

struct SolveOptions {
  bool primitive_only = false;
  bool presieve = true;
};

/// Integer x with max |x_i| ≤ bound and F(x) = c.
FormSolutions solve_form_equation(const MPoly& F, const Rational& c, std::int64_t bound,
                                  const SolveOptions& opt = {});

}  // namespace qsip
