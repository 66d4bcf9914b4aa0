#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsip/locus.hpp"
#include "qsip/mpoly.hpp"

namespace qsip {

enum class Variant { general_d, d2, d3_deg0, d3_deg1, d3_degGE2, delta_primed };

std::string to_string(Variant v);

/// Subsidiary hypersurface used for d = 3 when f_0 is nonconstant, together
/// with the discriminant identity Δ^Z(x, 0) = f_0^k · Δ^X it must satisfy.
struct AuxHypersurface {
  MPoly g;                // ring X_0 … X_n, Z, X_{n+1}
  unsigned z_exponent = 1;
  unsigned f0_power = 2;  // k: 2 when deg f_0 ≥ 2, 8 when deg f_0 = 1
  MPoly delta_z_at_zero;  // in X_0 … X_n
  MPoly expected;         // f_0^k · Δ^X
  bool holds = false;
};

struct ConstructionData {
  CoeffDecomposition dec;
  Variant variant = Variant::general_d;
  std::vector<Rational> c;  // (c_2, c_3, …) for four-variable constructions, {c} for d = 3
  unsigned roots = 0;       // roots encoded: d, or d - 1 for the primed variant
  std::size_t y_count = 0;  // Y variables: 4, or 2 for the low-degree constructions
  std::vector<MPoly> a, b;  // a_1 … a_r, b_1 … b_r in the Y ring
  std::vector<MPoly> A;     // A_1 … A_r
  MPoly B;
  std::size_t joint_arity = 0;      // X_0 … X_n then Y_1 … Y_{y_count}
  std::vector<MPoly> v_generators;  // in the joint ring
  std::vector<QuasiAffineSystem> u_parts;  // U_0, U_1, U_2
  QuasiAffineSystem w;
  std::optional<AuxHypersurface> aux;
};

struct AbPolys {
  std::vector<MPoly> a;
  std::vector<MPoly> b;
};

/// a_i, b_i (i = 1 … d) in Y_1 … Y_4 from c = (c_2, …, c_d) with c_2 = 0,
/// c_3 = 1. Requires d ≥ 4.
AbPolys build_ab(unsigned d, std::span<const Rational> c);

/// A_l = Σ_{|I| = l} ∏_{i∈I} a_i ∏_{j∉I} b_j (l = 1 … r) and B = ∏ b_i.
std::pair<std::vector<MPoly>, MPoly> build_AB(const AbPolys& ab);

/// A_l|_{Y3 = Y2} = C(r, l) Y2^l B|_{Y3 = Y2} for every l (four-variable
/// constructions); Y2 → Y1 for the two-variable ones.
bool specialization_identity_check(const ConstructionData& data);
bool specialization_identity_check(std::span<const MPoly> A, const MPoly& B, std::size_t y_count);

ConstructionData variety_W(const CoeffDecomposition& dec, std::span<const Rational> c);
ConstructionData variant_d2(const CoeffDecomposition& dec);
ConstructionData variant_d3(const CoeffDecomposition& dec, const Rational& c);
/// c covers the d - 1 roots: (c_2, …, c_{d-1}) when d ≥ 5, {c} when d = 4,
/// empty when d = 3.
ConstructionData variant_delta_primed(const CoeffDecomposition& dec, std::span<const Rational> c);

/// Dispatches on d: variant_d2, variant_d3 (c = {c}), or variety_W.
ConstructionData construct_for(const CoeffDecomposition& dec, std::span<const Rational> c);

struct LiftReport {
  std::vector<Rational> point;  // joint coordinates (x, y)
  std::vector<Rational> generator_values;
  bool in_v = false;
  bool in_u0 = false;
  bool in_u1 = false;
  bool in_u2 = false;
  bool w_contains = false;  // independent check through the W system

  bool member() const { return in_v && !in_u0 && !in_u1 && !in_u2; }
};

/// Lifts x with its fiber roots (labelled to match data.c) and evaluates the
/// V generators and U conditions there. Throws InvalidArgument on a root
/// count mismatch or repeated roots.
LiftReport lift_point(const ConstructionData& data, std::span<const Rational> x,
                      std::span<const Rational> roots);

/// (α_i − α_2)(α_3 − α_1) / ((α_i − α_1)(α_3 − α_2)).
Rational cross_ratio(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& ai);
/// α_i from α_1, α_2, α_3 and c_i; nullopt when the denominator vanishes.
std::optional<Rational> root_from_cross_ratio(const Rational& a1, const Rational& a2,
                                              const Rational& a3, const Rational& c);
/// c with α_3 = (α_1 − α_2) c + α_1.
Rational d3_constant(const Rational& a1, const Rational& a2, const Rational& a3);

/// x_{i1}x_{23} + x_{i2}x_{31} + x_{i3}x_{12} = 0 with x_{ab} = δ_b μ_a − δ_a μ_b,
/// checked symbolically.
bool three_term_identity_holds();

}  // namespace qsip
