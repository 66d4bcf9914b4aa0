#include "qsip/elim.hpp"

#include <limits>

namespace qsip {

SylvesterMatrix sylvester_matrix(const MPoly& f, const MPoly& g, std::size_t var,
                                 unsigned deg_f, unsigned deg_g) {
  if (f.arity() != g.arity()) throw ArityMismatch("sylvester: arity mismatch");
  if (deg_f == 0 || deg_g == 0) throw InvalidArgument("sylvester: zero nominal degree");
  if (f.degree_in(var) > static_cast<int>(deg_f) || g.degree_in(var) > static_cast<int>(deg_g))
    throw InvalidArgument("sylvester: nominal degree below actual degree");
  const std::size_t size = deg_f + deg_g;
  SylvesterMatrix s;
  s.deg_f = deg_f;
  s.deg_g = deg_g;
  s.entries.assign(size, std::vector<MPoly>(size, MPoly(f.arity())));
  std::vector<MPoly> fc, gc;  // leading first
  for (unsigned k = 0; k <= deg_f; ++k) fc.push_back(f.coefficient_in(var, deg_f - k));
  for (unsigned k = 0; k <= deg_g; ++k) gc.push_back(g.coefficient_in(var, deg_g - k));
  for (unsigned r = 0; r < deg_g; ++r)
    for (unsigned k = 0; k <= deg_f; ++k) s.entries[r][r + k] = fc[k];
  for (unsigned r = 0; r < deg_f; ++r)
    for (unsigned k = 0; k <= deg_g; ++k) s.entries[deg_g + r][r + k] = gc[k];
  return s;
}

MPoly bareiss_det(PolyMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidArgument("determinant of a non-square matrix");
  if (n == 0) throw InvalidArgument("determinant of an empty matrix");
  const std::size_t arity = m[0][0].arity();
  int sign = 1;
  MPoly prev(arity, Rational(1));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = n, pc = n, best = std::numeric_limits<std::size_t>::max();
    for (std::size_t c = k; c < n; ++c)
      for (std::size_t r = k; r < n; ++r)
        if (!m[r][c].is_zero() && m[r][c].size() < best) {
          best = m[r][c].size();
          pr = r;
          pc = c;
        }
    if (pr == n) return MPoly(arity);
    if (pr != k) {
      std::swap(m[pr], m[k]);
      sign = -sign;
    }
    if (pc != k) {
      for (auto& row : m) std::swap(row[pc], row[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly num = m[k][k] * m[i][j];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) num -= m[i][k] * m[k][j];
        m[i][j] = k == 0 ? std::move(num) : exact_divide(num, prev);
      }
      m[i][k] = MPoly(arity);
    }
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

MPoly resultant(const MPoly& f, const MPoly& g, std::size_t var) {
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("resultant of the zero polynomial");
  const int df = f.degree_in(var), dg = g.degree_in(var);
  if (df < 1 || dg < 1) throw InvalidArgument("resultant needs positive degree in the variable");
  return bareiss_det(sylvester_matrix(f, g, var, df, dg).entries);
}

MPoly discriminant(const MPoly& f, std::size_t var) {
  const int d = f.is_zero() ? -1 : f.degree_in(var);
  if (d < 2) throw InvalidArgument("discriminant needs degree at least 2");
  const MPoly lc = f.coefficient_in(var, d);
  const MPoly res =
      bareiss_det(sylvester_matrix(f, f.derivative(var), var, d, d - 1).entries);
  MPoly delta = exact_divide(res, lc);
  if ((d * (d - 1) / 2) % 2) delta = -delta;
  return delta;
}

MPoly discriminant(const CoeffDecomposition& dec) {
  if (dec.d < 2) throw InvalidArgument("discriminant needs d >= 2");
  const std::size_t base = dec.base_arity();
  std::vector<std::size_t> map(base);
  for (std::size_t i = 0; i < base; ++i) map[i] = i;
  MPoly f(base + 1);
  for (unsigned l = 0; l <= dec.d; ++l)
    f += dec.coeffs[l].embed(base + 1, map) * MPoly::variable(base + 1, base, dec.d - l);
  return discriminant(f, base).drop_variable(base);
}

}  // namespace qsip
