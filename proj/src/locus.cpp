#include "qsip/locus.hpp"

#include <random>

#include "qsip/elim.hpp"

namespace qsip {

bool QuasiAffineSystem::trivially_empty() const {
  for (const auto& e : equations)
    if (e.is_constant() && !e.is_zero()) return true;
  for (const auto& h : inequations)
    if (h.is_zero()) return true;
  for (const auto& group : not_all_zero) {
    bool all_zero = true;
    for (const auto& g : group) all_zero = all_zero && g.is_zero();
    if (all_zero) return true;
  }
  return false;
}

bool QuasiAffineSystem::contains(std::span<const Rational> point) const {
  if (point.size() != nvars) throw ArityMismatch("point has wrong length for system " + label);
  for (const auto& e : equations)
    if (!evaluate(e, point).is_zero()) return false;
  for (const auto& h : inequations)
    if (evaluate(h, point).is_zero()) return false;
  for (const auto& group : not_all_zero) {
    bool some = false;
    for (const auto& g : group)
      if (!evaluate(g, point).is_zero()) {
        some = true;
        break;
      }
    if (!some) return false;
  }
  return true;
}

std::pair<std::vector<MPoly>, MPoly> t_relations(std::span<const MPoly> coeffs, unsigned i) {
  if (coeffs.size() < 2) throw InvalidArgument("t_relations needs at least f_0, f_1");
  const unsigned d = static_cast<unsigned>(coeffs.size() - 1);
  if (i > d) throw InvalidArgument("T_i index out of range");
  std::vector<MPoly> eqs;
  for (unsigned l = 0; l < i; ++l) eqs.push_back(coeffs[l]);
  for (unsigned l = i + 2; l <= d; ++l) {
    const unsigned k = l - i;
    const Rational scale = pow(Rational(static_cast<unsigned long>(d - i)), k);
    MPoly lhs = coeffs[i].pow(k - 1) * coeffs[l] * scale;
    MPoly rhs = coeffs[i + 1].pow(k) * Rational(binomial(d - i, k));
    eqs.push_back(lhs - rhs);
  }
  return {std::move(eqs), coeffs[i]};
}

QuasiAffineSystem t_system(const CoeffDecomposition& dec, unsigned i) {
  if (i > dec.d) throw InvalidArgument("T_i index out of range");
  auto [eqs, ineq] = t_relations(dec.coeffs, i);
  QuasiAffineSystem sys;
  sys.projective = true;
  sys.nvars = dec.base_arity();
  sys.equations = std::move(eqs);
  sys.inequations.push_back(std::move(ineq));
  sys.label = "T_" + std::to_string(i);
  return sys;
}

BranchData branch_data(const CoeffDecomposition& dec) {
  BranchData out;
  out.dec = dec;
  out.delta = discriminant(dec);
  if (out.delta.is_zero())
    throw DegenerateInput("discriminant vanishes identically: f is not squarefree in the projection variable");
  out.d_form = dec.q_on_hypersurface ? dec.f(0) * out.delta : out.delta;
  for (unsigned i = 0; i <= dec.d; ++i) out.t_systems.push_back(t_system(dec, i));
  return out;
}

bool vanishing_containment(const MPoly& g, const MPoly& h) {
  if (g.is_zero()) throw InvalidArgument("vanishing_containment: g = 0");
  return divides(g, h.pow(static_cast<unsigned>(g.total_degree())));
}

FinitenessVerdict finiteness_criterion(const CoeffDecomposition& dec) {
  FinitenessVerdict v;
  for (unsigned i = 1; i <= dec.d; ++i) {
    if (!dec.f(i).is_zero()) continue;
    for (unsigned j = 1; j <= dec.d; ++j) {
      // f_j ≡ 0 vanishes everywhere while f_0 does not, so it cannot qualify.
      if (dec.f(j).is_zero()) continue;
      if (vanishing_containment(dec.f(j), dec.f(0))) {
        v.finite = true;
        v.i = i;
        v.j = j;
        v.t0_empty = true;
        return v;
      }
    }
  }
  return v;
}

bool t_emptiness_shortcut(const CoeffDecomposition& dec, unsigned i) {
  if (i < 1 || i > dec.d) throw InvalidArgument("emptiness shortcut needs 1 <= i <= d");
  for (unsigned l = 0; l < i; ++l)
    if (!dec.f(l).is_zero() && divides(dec.f(l), dec.f(i))) return true;
  return false;
}

std::optional<unsigned> t_class(const BranchData& branch, std::span<const Rational> point) {
  for (unsigned i = 0; i < branch.t_systems.size(); ++i)
    if (branch.t_systems[i].contains(point)) return i;
  return std::nullopt;
}

namespace {

UPoly restrict_to_line(const MPoly& f, const std::vector<long>& p, const std::vector<long>& q) {
  const std::size_t n = f.arity();
  std::map<std::size_t, Binding> bind;
  for (std::size_t v = 0; v < n; ++v) {
    MPoly line = MPoly(n, Rational(p[v])) + MPoly::variable(n, 0) * Rational(q[v]);
    bind.emplace(v, std::move(line));
  }
  return UPoly::from_mpoly(substitute(f, bind), 0);
}

}  // namespace

bool reducibility_alarm(const MPoly& f, std::uint64_t seed) {
  if (f.is_zero() || f.total_degree() < 2) return false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-9, 9);
  const std::size_t n = f.arity();
  int hits = 0, lines = 0;
  for (int attempt = 0; attempt < 50 && lines < 2; ++attempt) {
    std::vector<long> p(n), q(n);
    for (auto& x : p) x = coord(rng);
    for (auto& x : q) x = coord(rng);
    UPoly u = restrict_to_line(f, p, q);
    if (u.degree() != f.total_degree()) continue;
    ++lines;
    const bool repeated = gcd(u, u.derivative()).degree() > 0;
    if (repeated || !rational_roots(u).empty()) ++hits;
  }
  return lines == 2 && hits == 2;
}

}  // namespace qsip
