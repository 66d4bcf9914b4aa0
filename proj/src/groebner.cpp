#include "qsip/groebner.hpp"

#include <algorithm>
#include <set>

namespace qsip {

namespace {

struct Term {
  std::vector<Exponent> e;
  Rational c;
};
using GPoly = std::vector<Term>;  // descending in the active order

// Block order: grevlex on the last `block` variables decides first, grevlex
// on the remaining variables breaks ties. block = 0 is plain grevlex.
struct Order {
  std::size_t block = 0;

  int operator()(const std::vector<Exponent>& a, const std::vector<Exponent>& b) const {
    const std::size_t n = a.size();
    const std::size_t split = n - block;
    if (block) {
      const int c = grevlex_compare(std::span(a).subspan(split), std::span(b).subspan(split));
      if (c) return c;
    }
    return grevlex_compare(std::span(a).first(split), std::span(b).first(split));
  }
};

GPoly to_gpoly(const MPoly& p, const Order& ord) {
  GPoly out;
  out.reserve(p.size());
  for (std::size_t t = 0; t < p.size(); ++t) {
    auto e = p.exponents(t);
    out.push_back({std::vector<Exponent>(e.begin(), e.end()), p.coeff(t)});
  }
  if (ord.block)
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return ord(a.e, b.e) > 0; });
  return out;
}

MPoly to_mpoly(const GPoly& p, std::size_t arity) {
  std::vector<std::pair<std::vector<Exponent>, Rational>> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.emplace_back(t.e, t.c);
  return MPoly::from_terms(arity, std::move(terms));
}

bool lm_divides(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<Exponent> lcm_of(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
  std::vector<Exponent> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

Exponent degree(const std::vector<Exponent>& e) {
  Exponent d = 0;
  for (auto x : e) d += x;
  return d;
}

// p - c · x^m · q, assuming both inputs sorted in `ord`.
GPoly sub_scaled(const GPoly& p, std::size_t from, const Rational& c, const std::vector<Exponent>& m,
                 const GPoly& q, const Order& ord) {
  GPoly out;
  out.reserve(p.size() - from + q.size());
  std::size_t i = from, j = 0;
  std::vector<Exponent> qe(m.size());
  auto shifted = [&](std::size_t k) {
    for (std::size_t v = 0; v < m.size(); ++v) qe[v] = q[k].e[v] + m[v];
  };
  if (j < q.size()) shifted(j);
  while (i < p.size() && j < q.size()) {
    const int cmp = ord(p[i].e, qe);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({qe, -(c * q[j].c)});
      if (++j < q.size()) shifted(j);
    } else {
      Rational s = p[i].c - c * q[j].c;
      if (!s.is_zero()) out.push_back({p[i].e, std::move(s)});
      ++i;
      if (++j < q.size()) shifted(j);
    }
  }
  for (; i < p.size(); ++i) out.push_back(p[i]);
  while (j < q.size()) {
    out.push_back({qe, -(c * q[j].c)});
    if (++j < q.size()) shifted(j);
  }
  return out;
}

void make_monic(GPoly& p) {
  if (p.empty() || p[0].c.is_one()) return;
  const Rational inv = p[0].c.inverse();
  for (auto& t : p) t.c *= inv;
}

// Full reduction of p modulo the basis (skip index `skip`, if any).
GPoly reduce(GPoly p, const std::vector<GPoly>& basis, const Order& ord,
             std::size_t skip = static_cast<std::size_t>(-1)) {
  GPoly rest;
  std::size_t head = 0;
  std::vector<Exponent> m;
  while (head < p.size()) {
    const Term& t = p[head];
    std::size_t hit = basis.size();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      if (lm_divides(basis[k][0].e, t.e)) {
        hit = k;
        break;
      }
    }
    if (hit == basis.size()) {
      rest.push_back(t);
      ++head;
      continue;
    }
    const GPoly& g = basis[hit];
    m.resize(t.e.size());
    for (std::size_t v = 0; v < m.size(); ++v) m[v] = t.e[v] - g[0].e[v];
    const Rational c = t.c / g[0].c;
    p = sub_scaled(p, head, c, m, g, ord);
    head = 0;
  }
  return rest;
}

GPoly spoly(const GPoly& f, const GPoly& g, const Order& ord) {
  const auto l = lcm_of(f[0].e, g[0].e);
  std::vector<Exponent> mf(l.size()), mg(l.size());
  for (std::size_t v = 0; v < l.size(); ++v) {
    mf[v] = l[v] - f[0].e[v];
    mg[v] = l[v] - g[0].e[v];
  }
  GPoly zero;
  GPoly a = sub_scaled(zero, 0, -(f[0].c.inverse()), mf, f, ord);
  return sub_scaled(a, 0, g[0].c.inverse(), mg, g, ord);
}

std::vector<GPoly> groebner_core(std::vector<GPoly> input, const Order& ord,
                                 const GroebnerBudget& budget) {
  std::vector<GPoly> g;
  for (auto& p : input) {
    if (p.empty()) continue;
    make_monic(p);
    g.push_back(std::move(p));
  }
  if (g.empty()) throw InvalidArgument("Gröbner basis of the zero ideal requested");

  auto is_unit = [](const GPoly& p) { return p.size() == 1 && degree(p[0].e) == 0; };
  for (const auto& p : g)
    if (is_unit(p)) return {p};

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  std::size_t processed = 0;
  while (!pending.empty()) {
    // Normal strategy: the pair with the smallest lcm.
    auto best = pending.begin();
    std::vector<Exponent> best_lcm = lcm_of(g[best->first][0].e, g[best->second][0].e);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      auto l = lcm_of(g[it->first][0].e, g[it->second][0].e);
      if (ord(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    if (coprime(g[i][0].e, g[j][0].e)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = lm_divides(g[k][0].e, best_lcm) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;

    if (++processed > budget.max_pairs)
      throw ResourceExceeded("Gröbner pair budget exceeded (" + std::to_string(budget.max_pairs) + ")");
    GPoly h = reduce(spoly(g[i], g[j], ord), g, ord);
    if (h.empty()) continue;
    make_monic(h);
    if (is_unit(h)) return {h};
    Exponent hdeg = 0;
    for (const auto& t : h) hdeg = std::max(hdeg, degree(t.e));
    if (hdeg > budget.max_degree)
      throw ResourceExceeded("Gröbner degree budget exceeded (" + std::to_string(budget.max_degree) + ")");
    const std::size_t idx = g.size();
    g.push_back(std::move(h));
    for (std::size_t k = 0; k < idx; ++k) pending.emplace(k, idx);
  }

  // Minimalize, then interreduce.
  std::vector<GPoly> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      if (lm_divides(g[b][0].e, g[a][0].e)) redundant = g[b][0].e != g[a][0].e || b < a;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    GPoly tail(minimal[a].begin() + 1, minimal[a].end());
    GPoly reduced = reduce(std::move(tail), minimal, ord, a);
    reduced.insert(reduced.begin(), minimal[a][0]);
    minimal[a] = std::move(reduced);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const GPoly& x, const GPoly& y) { return ord(x[0].e, y[0].e) > 0; });
  return minimal;
}

GroebnerBasis wrap(const std::vector<GPoly>& g, std::size_t arity) {
  GroebnerBasis out;
  out.arity = arity;
  for (const auto& p : g) out.generators.push_back(to_mpoly(p, arity));
  std::sort(out.generators.begin(), out.generators.end(), [](const MPoly& a, const MPoly& b) {
    return grevlex_compare(a.leading_exponents(), b.leading_exponents()) > 0;
  });
  return out;
}

void check_ring(std::span<const MPoly> gens, std::size_t arity) {
  for (const auto& p : gens)
    if (p.arity() != arity) throw ArityMismatch("Gröbner generators live in different rings");
}

}  // namespace

bool GroebnerBasis::is_unit() const {
  return generators.size() == 1 && generators[0].is_constant() && !generators[0].is_zero();
}

GroebnerBasis buchberger(std::span<const MPoly> gens, const GroebnerBudget& budget) {
  if (gens.empty()) throw InvalidArgument("buchberger: no generators");
  const std::size_t arity = gens[0].arity();
  check_ring(gens, arity);
  const Order ord{0};
  std::vector<GPoly> in;
  for (const auto& p : gens) in.push_back(to_gpoly(p, ord));
  return wrap(groebner_core(std::move(in), ord, budget), arity);
}

MPoly normal_form(const MPoly& f, const GroebnerBasis& g) {
  if (f.arity() != g.arity) throw ArityMismatch("normal_form: arity mismatch");
  const Order ord{0};
  std::vector<GPoly> basis;
  for (const auto& p : g.generators) basis.push_back(to_gpoly(p, ord));
  return to_mpoly(reduce(to_gpoly(f, ord), basis, ord), f.arity());
}

bool in_ideal(const MPoly& f, const GroebnerBasis& g) { return normal_form(f, g).is_zero(); }

MPoly s_polynomial(const MPoly& f, const MPoly& g) {
  if (f.arity() != g.arity()) throw ArityMismatch("s_polynomial: arity mismatch");
  const Order ord{0};
  return to_mpoly(spoly(to_gpoly(f, ord), to_gpoly(g, ord), ord), f.arity());
}

GroebnerBasis saturate(std::span<const MPoly> gens, const MPoly& h, const GroebnerBudget& budget) {
  if (h.is_zero()) throw InvalidArgument("saturation by the zero polynomial");
  if (gens.empty()) throw InvalidArgument("saturate: no generators");
  const std::size_t n = h.arity();
  check_ring(gens, n);
  std::vector<std::size_t> map(n);
  for (std::size_t v = 0; v < n; ++v) map[v] = v;
  const Order ord{1};
  std::vector<GPoly> in;
  for (const auto& p : gens) in.push_back(to_gpoly(p.embed(n + 1, map), ord));
  const MPoly t = MPoly::variable(n + 1, n);
  in.push_back(to_gpoly(MPoly(n + 1, Rational(1)) - t * h.embed(n + 1, map), ord));
  std::vector<GPoly> out;
  for (auto& p : groebner_core(std::move(in), ord, budget)) {
    bool has_t = false;
    for (const auto& term : p) has_t = has_t || term.e[n] != 0;
    if (has_t) continue;
    for (auto& term : p) term.e.pop_back();
    out.push_back(std::move(p));
  }
  return wrap(out, n);
}

namespace {

// Minimum number of variables meeting every support (a vertex cover of the
// support hypergraph), by branching on the variables of one uncovered
// generator.
std::size_t min_cover(const std::vector<std::vector<std::size_t>>& supports, std::vector<bool>& zeroed,
                      std::size_t depth, std::size_t best) {
  if (depth >= best) return best;
  const std::vector<std::size_t>* open = nullptr;
  for (const auto& s : supports) {
    bool hit = false;
    for (auto v : s) hit = hit || zeroed[v];
    if (!hit) {
      if (!open || s.size() < open->size()) open = &s;
    }
  }
  if (!open) return depth;
  for (auto v : *open) {
    zeroed[v] = true;
    best = std::min(best, min_cover(supports, zeroed, depth + 1, best));
    zeroed[v] = false;
  }
  return best;
}

}  // namespace

std::optional<int> monomial_ideal_dimension(std::span<const std::vector<Exponent>> gens,
                                            std::size_t nvars) {
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& e : gens) {
    if (e.size() != nvars) throw ArityMismatch("monomial has wrong arity");
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < nvars; ++v)
      if (e[v]) s.push_back(v);
    if (s.empty()) return std::nullopt;
    supports.push_back(std::move(s));
  }
  std::vector<bool> zeroed(nvars, false);
  return static_cast<int>(nvars - min_cover(supports, zeroed, 0, nvars + 1));
}

std::optional<int> dimension(const GroebnerBasis& g, bool projective) {
  std::vector<std::vector<Exponent>> lms;
  for (const auto& p : g.generators) {
    if (p.is_zero()) continue;
    auto e = p.leading_exponents();
    lms.emplace_back(e.begin(), e.end());
  }
  auto affine = monomial_ideal_dimension(lms, g.arity);
  if (!affine) return std::nullopt;
  if (!projective) return affine;
  if (*affine == 0) return std::nullopt;
  return *affine - 1;
}

std::optional<int> quasi_affine_dimension(const QuasiAffineSystem& sys, const GroebnerBudget& budget) {
  if (sys.trivially_empty()) return std::nullopt;
  std::vector<MPoly> eqs;
  for (const auto& e : sys.equations)
    if (!e.is_zero()) eqs.push_back(e);
  MPoly h(sys.nvars, Rational(1));
  for (const auto& q : sys.inequations) h *= q;
  if (eqs.empty()) {
    const int full = static_cast<int>(sys.nvars);
    return sys.projective ? full - 1 : full;
  }
  GroebnerBasis g = h.is_constant() ? buchberger(eqs, budget) : saturate(eqs, h, budget);
  return dimension(g, sys.projective);
}

}  // namespace qsip
