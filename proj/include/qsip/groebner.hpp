#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qsip/locus.hpp"
#include "qsip/mpoly.hpp"

namespace qsip {

/// Buchberger gives up with ResourceExceeded beyond these limits.
struct GroebnerBudget {
  std::size_t max_pairs = 5000;
  unsigned max_degree = 40;
};

/// Reduced Gröbner basis in grevlex: monic, auto-reduced, sorted by
/// descending leading monomial.
struct GroebnerBasis {
  std::size_t arity = 0;
  std::vector<MPoly> generators;

  bool is_unit() const;
};

GroebnerBasis buchberger(std::span<const MPoly> gens, const GroebnerBudget& budget = {});
MPoly normal_form(const MPoly& f, const GroebnerBasis& g);
bool in_ideal(const MPoly& f, const GroebnerBasis& g);
MPoly s_polynomial(const MPoly& f, const MPoly& g);

/// (I : h^∞) via 1 - t·h with t eliminated in a block order t ≫ grevlex.
GroebnerBasis saturate(std::span<const MPoly> gens, const MPoly& h,
                       const GroebnerBudget& budget = {});

/// Krull dimension of the zero set of a monomial ideal given by exponent
/// vectors; nullopt when a generator is constant.
std::optional<int> monomial_ideal_dimension(std::span<const std::vector<Exponent>> gens,
                                            std::size_t nvars);

/// Affine dimension, or cone dimension - 1 when projective. nullopt is the
/// empty marker (unit ideal, or only the origin in the projective case).
std::optional<int> dimension(const GroebnerBasis& g, bool projective);

/// Dimension of the Zariski closure of a quasi-affine system: saturate the
/// equations by the product of the inequations, then take the dimension.
std::optional<int> quasi_affine_dimension(const QuasiAffineSystem& sys,
                                          const GroebnerBudget& budget = {});

}  // namespace qsip
