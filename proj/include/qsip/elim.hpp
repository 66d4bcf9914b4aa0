#pragma once

#include <vector>

#include "qsip/mpoly.hpp"

namespace qsip {

using PolyMatrix = std::vector<std::vector<MPoly>>;

/// Classical Sylvester arrangement: deg_g shifted rows of f's coefficients
/// followed by deg_f shifted rows of g's, leading coefficients first.
struct SylvesterMatrix {
  PolyMatrix entries;
  unsigned deg_f = 0;
  unsigned deg_g = 0;
};

/// Coefficients are taken in `var` at the nominal degrees given; missing top
/// coefficients become zero entries. Entries keep f's ring with var absent.
SylvesterMatrix sylvester_matrix(const MPoly& f, const MPoly& g, std::size_t var,
                                 unsigned deg_f, unsigned deg_g);

/// Fraction-free Bareiss elimination. Pivot: fewest terms, ties by column
/// then row index. Throws InvalidArgument for non-square input.
MPoly bareiss_det(PolyMatrix m);

/// Res_var(f, g); var is absent from the result (slot kept).
/// Throws InvalidArgument when either input has degree 0 in var.
MPoly resultant(const MPoly& f, const MPoly& g, std::size_t var);

/// (-1)^{d(d-1)/2} Res_var(f, ∂f/∂var) / lc_var(f), with ∂f taken at nominal
/// degree d - 1. The var slot is kept.
MPoly discriminant(const MPoly& f, std::size_t var);

/// Δ of the decomposition, in the base ring X_0 … X_n.
MPoly discriminant(const CoeffDecomposition& dec);

}  // namespace qsip
