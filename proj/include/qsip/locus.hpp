#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsip/mpoly.hpp"

namespace qsip {

/// Equations plus inequations. A point is a member iff every equation
/// vanishes, no inequation vanishes, and each not_all_zero group has a
/// nonvanishing member.
struct QuasiAffineSystem {
  bool projective = true;
  std::size_t nvars = 0;
  std::vector<MPoly> equations;
  std::vector<MPoly> inequations;
  std::vector<std::vector<MPoly>> not_all_zero;
  std::string label;

  /// A nonzero constant equation or a zero inequation.
  bool trivially_empty() const;
  bool contains(std::span<const Rational> point) const;
};

struct BranchData {
  CoeffDecomposition dec;
  MPoly delta;
  MPoly d_form;  // Δ, or f_0·Δ when f_0 is nonconstant
  std::vector<QuasiAffineSystem> t_systems;  // T_0 … T_d
};

/// Throws DegenerateInput when Δ ≡ 0.
BranchData branch_data(const CoeffDecomposition& dec);

/// T_i relations on arbitrary coefficient polynomials f_0 … f_d:
/// equations {f_l : l < i} ∪ {(d-i)^{l-i} f_i^{l-i-1} f_l - C(d-i,l-i) f_{i+1}^{l-i} : l ≥ i+2},
/// inequation f_i.
std::pair<std::vector<MPoly>, MPoly> t_relations(std::span<const MPoly> coeffs, unsigned i);

/// Throws InvalidArgument for i > d.
QuasiAffineSystem t_system(const CoeffDecomposition& dec, unsigned i);

/// V(g) ⊆ V(h) over ℚ̄, decided by g | h^{deg g}. Throws InvalidArgument for g = 0.
bool vanishing_containment(const MPoly& g, const MPoly& h);

struct FinitenessVerdict {
  bool finite = false;
  unsigned i = 0;
  unsigned j = 0;
  bool t0_empty = false;  // implied by a finite verdict
};

FinitenessVerdict finiteness_criterion(const CoeffDecomposition& dec);

/// True if some nonzero f_l with l < i divides f_i (then T_i = ∅); false is
/// inconclusive. Requires 1 ≤ i ≤ d.
bool t_emptiness_shortcut(const CoeffDecomposition& dec, unsigned i);

/// Index of the T_i whose predicate holds at the point, if any.
std::optional<unsigned> t_class(const BranchData& branch, std::span<const Rational> point);

/// Courtesy reducibility probe: restricts f to two pseudo-random lines and
/// raises the alarm when both restrictions have a rational root or a repeated
/// factor. Catches linear and repeated factors only.
bool reducibility_alarm(const MPoly& f, std::uint64_t seed = 0x5eed);

}  // namespace qsip
