#include "qsip/construct.hpp"

#include <numeric>

#include "qsip/elim.hpp"
#include "qsip/error.hpp"

namespace qsip {

namespace {

MPoly Y(std::size_t arity, std::size_t k) { return MPoly::variable(arity, k); }

// Root encoding for r roots: a_i/b_i = α_i at the lift.
struct Encoding {
  std::size_t y_count = 0;
  AbPolys ab;
};

Encoding encode_roots(unsigned r, std::span<const Rational> c) {
  Encoding e;
  if (r == 2) {
    if (!c.empty()) throw InvalidArgument("two roots take no constants");
    e.y_count = 2;
    e.ab.a = {Y(2, 0), Y(2, 1)};
    e.ab.b = {MPoly(2, 1), MPoly(2, 1)};
  } else if (r == 3) {
    if (c.size() != 1) throw InvalidArgument("three roots take exactly one constant");
    e.y_count = 2;
    const MPoly y1 = Y(2, 0), y2 = Y(2, 1);
    e.ab.a = {y1, y2, (y1 - y2) * c[0] + y1};
    e.ab.b = {MPoly(2, 1), MPoly(2, 1), MPoly(2, 1)};
  } else {
    e.y_count = 4;
    e.ab = build_ab(r, c);
  }
  return e;
}

std::vector<std::size_t> identity_map(std::size_t n, std::size_t offset = 0) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), offset);
  return m;
}

// Base-ring and Y-ring embeddings into the joint ring.
struct Joint {
  std::size_t base = 0;
  std::size_t arity = 0;
  std::vector<std::size_t> xmap, ymap;

  Joint(std::size_t base_arity, std::size_t y_count)
      : base(base_arity),
        arity(base_arity + y_count),
        xmap(identity_map(base_arity)),
        ymap(identity_map(y_count, base_arity)) {}

  MPoly x(const MPoly& p) const { return p.embed(arity, xmap); }
  MPoly y(const MPoly& p) const { return p.embed(arity, ymap); }
  std::vector<MPoly> x_vars() const {
    std::vector<MPoly> v;
    for (std::size_t i = 0; i < base; ++i) v.push_back(MPoly::variable(arity, i));
    return v;
  }
};

QuasiAffineSystem system_with(std::size_t arity, std::vector<MPoly> eqs, std::string label) {
  QuasiAffineSystem s;
  s.projective = true;
  s.nvars = arity;
  s.equations = std::move(eqs);
  s.label = std::move(label);
  return s;
}

// U_0, U_1, U_2 and W from V. `lead` is the coefficient whose vanishing
// defines U_2 (f_0, or f_1 for the primed variant). With `conjunction` U_1
// requires B and every A_l to vanish; otherwise B alone.
void attach_u_and_w(ConstructionData& data, const Joint& J, const MPoly& lead, bool conjunction,
                    const std::string& suffix) {
  const auto& v = data.v_generators;
  std::vector<MPoly> ba = {J.y(data.B)};
  if (conjunction)
    for (const auto& a : data.A) ba.push_back(J.y(a));

  auto u0 = v;
  for (auto& x : J.x_vars()) u0.push_back(x);
  auto u1 = v;
  u1.insert(u1.end(), ba.begin(), ba.end());
  auto u2 = v;
  u2.push_back(J.x(lead));
  data.u_parts = {system_with(J.arity, std::move(u0), "U_0" + suffix),
                  system_with(J.arity, std::move(u1), "U_1" + suffix),
                  system_with(J.arity, std::move(u2), "U_2" + suffix)};

  data.w = system_with(J.arity, v, "W" + suffix);
  data.w.inequations.push_back(J.x(lead));
  data.w.not_all_zero.push_back(J.x_vars());
  if (conjunction)
    data.w.not_all_zero.push_back(ba);
  else
    data.w.inequations.push_back(J.y(data.B));
}

// Generators B·f_{l+shift} − (−1)^l f_shift·A_l for l = 1 … r.
std::vector<MPoly> v_from(const ConstructionData& data, const Joint& J, unsigned shift) {
  std::vector<MPoly> out;
  const MPoly B = J.y(data.B);
  const MPoly lead = J.x(data.dec.f(shift));
  for (std::size_t l = 1; l <= data.A.size(); ++l) {
    MPoly term = lead * J.y(data.A[l - 1]);
    MPoly g = B * J.x(data.dec.f(l + shift));
    if (l % 2 == 0)
      g -= term;
    else
      g += term;
    out.push_back(std::move(g));
  }
  return out;
}

void fill_encoding(ConstructionData& data, unsigned r, std::span<const Rational> c) {
  auto enc = encode_roots(r, c);
  data.roots = r;
  data.y_count = enc.y_count;
  data.c.assign(c.begin(), c.end());
  auto [A, B] = build_AB(enc.ab);
  data.a = std::move(enc.ab.a);
  data.b = std::move(enc.ab.b);
  data.A = std::move(A);
  data.B = std::move(B);
  data.joint_arity = data.dec.base_arity() + data.y_count;
}

ConstructionData direct(const CoeffDecomposition& dec, Variant v, std::span<const Rational> c) {
  ConstructionData data;
  data.dec = dec;
  data.variant = v;
  fill_encoding(data, dec.d, c);
  const Joint J(dec.base_arity(), data.y_count);
  data.v_generators = v_from(data, J, 0);
  attach_u_and_w(data, J, dec.f(0), true, "");
  return data;
}

AuxHypersurface aux_for(const CoeffDecomposition& dec) {
  const std::size_t base = dec.base_arity();
  const std::size_t ring = base + 1;  // base variables, then Z
  const auto up = identity_map(base);
  const int deg0 = dec.f(0).total_degree();

  AuxHypersurface aux;
  std::vector<MPoly> g_coeffs;
  if (deg0 >= 2) {
    aux.z_exponent = static_cast<unsigned>(deg0 - 1);
    aux.f0_power = 2;
    g_coeffs.push_back(MPoly::variable(ring, base, aux.z_exponent));
    for (const auto& f : dec.coeffs) g_coeffs.push_back(f.embed(ring, up));
  } else {
    aux.z_exponent = 1;
    aux.f0_power = 8;
    const MPoly f0 = dec.f(0).embed(ring, up);
    g_coeffs.push_back(MPoly::variable(ring, base));
    for (const auto& f : dec.coeffs) g_coeffs.push_back(f0 * f.embed(ring, up));
  }
  const auto gdec = decomposition_from_coeffs(g_coeffs);
  aux.g = gdec.reconstruct();

  const MPoly dz = discriminant(gdec);
  aux.delta_z_at_zero = substitute(dz, {{base, Rational(0)}}).drop_variable(base);
  aux.expected = dec.f(0).pow(aux.f0_power) * discriminant(dec);
  aux.holds = aux.delta_z_at_zero == aux.expected;
  return aux;
}

void require_distinct(std::span<const Rational> roots) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j]) throw InvalidArgument("repeated fiber roots: point lies on D");
}

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::general_d: return "general_d";
    case Variant::d2: return "d2";
    case Variant::d3_deg0: return "d3_deg0";
    case Variant::d3_deg1: return "d3_deg1";
    case Variant::d3_degGE2: return "d3_degGE2";
    case Variant::delta_primed: return "delta_primed";
  }
  return "unknown";
}

AbPolys build_ab(unsigned d, std::span<const Rational> c) {
  if (d < 4) throw InvalidArgument("build_ab needs d >= 4");
  if (c.size() != d - 1) throw InvalidArgument("c must list c_2 ... c_d");
  if (!c[0].is_zero() || !c[1].is_one()) throw InvalidArgument("c_2 must be 0 and c_3 must be 1");
  const MPoly y1 = Y(4, 0), y2 = Y(4, 1), y3 = Y(4, 2), y4 = Y(4, 3);
  AbPolys out;
  const Rational& c4 = c[2];
  out.a.push_back(y4 * (y2 - y3) * c4 + y3 * (y4 - y2));
  out.b.push_back((y2 - y3) * c4 + y4 - y2);
  for (unsigned i = 2; i <= d; ++i) {
    const Rational& ci = c[i - 2];
    out.a.push_back(y1 * (y2 - y3) * ci + y2 * (y3 - y1));
    out.b.push_back((y2 - y3) * ci + y3 - y1);
  }
  return out;
}

std::pair<std::vector<MPoly>, MPoly> build_AB(const AbPolys& ab) {
  if (ab.a.empty() || ab.a.size() != ab.b.size()) throw InvalidArgument("a and b must pair up");
  const std::size_t r = ab.a.size();
  const std::size_t arity = ab.a[0].arity();
  // ∏ (b_i + a_i T) = Σ_l coef[l] T^l.
  std::vector<MPoly> coef(r + 1, MPoly(arity));
  coef[0] = MPoly(arity, 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t l = i + 1; l > 0; --l) coef[l] = coef[l] * ab.b[i] + coef[l - 1] * ab.a[i];
    coef[0] = coef[0] * ab.b[i];
  }
  MPoly B = coef[0];
  coef.erase(coef.begin());
  return {std::move(coef), std::move(B)};
}

bool specialization_identity_check(std::span<const MPoly> A, const MPoly& B, std::size_t y_count) {
  if (y_count != 2 && y_count != 4) throw InvalidArgument("Y ring must have 2 or 4 variables");
  const std::size_t arity = B.arity();
  // Four variables: Y3 → Y2, marker Y2. Two variables: Y2 → Y1, marker Y1.
  const std::size_t from = y_count == 4 ? 2 : 1;
  const std::size_t to = y_count == 4 ? 1 : 0;
  const std::map<std::size_t, Binding> sub{{from, MPoly::variable(arity, to)}};
  const MPoly Bs = substitute(B, sub);
  const unsigned r = static_cast<unsigned>(A.size());
  for (unsigned l = 1; l <= r; ++l) {
    const MPoly lhs = substitute(A[l - 1], sub);
    const MPoly rhs = MPoly::variable(arity, to, l) * Bs * Rational(binomial(r, l));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool specialization_identity_check(const ConstructionData& data) {
  return specialization_identity_check(data.A, data.B, data.y_count);
}

ConstructionData variety_W(const CoeffDecomposition& dec, std::span<const Rational> c) {
  if (dec.d < 4) throw InvalidArgument("variety_W needs d >= 4; use the low-degree variants");
  return direct(dec, Variant::general_d, c);
}

ConstructionData variant_d2(const CoeffDecomposition& dec) {
  if (dec.d != 2) throw InvalidArgument("variant_d2 needs d = 2");
  return direct(dec, Variant::d2, {});
}

ConstructionData variant_d3(const CoeffDecomposition& dec, const Rational& c) {
  if (dec.d != 3) throw InvalidArgument("variant_d3 needs d = 3");
  const int deg0 = dec.f(0).total_degree();
  const Variant v = deg0 == 0 ? Variant::d3_deg0 : (deg0 == 1 ? Variant::d3_deg1 : Variant::d3_degGE2);
  const Rational cs[1] = {c};
  auto data = direct(dec, v, cs);
  if (deg0 >= 1) data.aux = aux_for(dec);
  return data;
}

ConstructionData variant_delta_primed(const CoeffDecomposition& dec, std::span<const Rational> c) {
  if (dec.d < 3) throw InvalidArgument("the primed construction needs d >= 3");
  ConstructionData data;
  data.dec = dec;
  data.variant = Variant::delta_primed;
  fill_encoding(data, dec.d - 1, c);
  const Joint J(dec.base_arity(), data.y_count);
  data.v_generators.push_back(J.x(dec.f(0)));
  for (auto& g : v_from(data, J, 1)) data.v_generators.push_back(std::move(g));
  attach_u_and_w(data, J, dec.f(1), false, "'");
  return data;
}

ConstructionData construct_for(const CoeffDecomposition& dec, std::span<const Rational> c) {
  if (dec.d == 2) return variant_d2(dec);
  if (dec.d == 3) {
    if (c.size() != 1) throw InvalidArgument("d = 3 takes exactly one constant");
    return variant_d3(dec, c[0]);
  }
  return variety_W(dec, c);
}

LiftReport lift_point(const ConstructionData& data, std::span<const Rational> x,
                      std::span<const Rational> roots) {
  if (x.size() != data.dec.base_arity()) throw ArityMismatch("point has the wrong number of coordinates");
  if (roots.size() != data.roots) throw InvalidArgument("root count does not match the construction");
  require_distinct(roots);

  LiftReport rep;
  rep.point.assign(x.begin(), x.end());
  for (std::size_t k = 0; k < data.y_count; ++k) rep.point.push_back(roots[k]);

  rep.in_v = true;
  for (const auto& g : data.v_generators) {
    rep.generator_values.push_back(evaluate(g, rep.point));
    rep.in_v = rep.in_v && rep.generator_values.back().is_zero();
  }
  // U conditions as extra equations on top of V.
  auto triggered = [&](const QuasiAffineSystem& u) {
    for (std::size_t k = data.v_generators.size(); k < u.equations.size(); ++k)
      if (!evaluate(u.equations[k], rep.point).is_zero()) return false;
    return true;
  };
  rep.in_u0 = rep.in_v && triggered(data.u_parts[0]);
  rep.in_u1 = rep.in_v && triggered(data.u_parts[1]);
  rep.in_u2 = rep.in_v && triggered(data.u_parts[2]);
  rep.w_contains = data.w.contains(rep.point);
  return rep;
}

Rational cross_ratio(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& ai) {
  const Rational den = (ai - a1) * (a3 - a2);
  if (den.is_zero()) throw DivisionByZero("cross-ratio of coincident roots");
  return (ai - a2) * (a3 - a1) / den;
}

std::optional<Rational> root_from_cross_ratio(const Rational& a1, const Rational& a2,
                                              const Rational& a3, const Rational& c) {
  const Rational den = (a2 - a3) * c + a3 - a1;
  if (den.is_zero()) return std::nullopt;
  return (a1 * (a2 - a3) * c + a2 * (a3 - a1)) / den;
}

Rational d3_constant(const Rational& a1, const Rational& a2, const Rational& a3) {
  if (a1 == a2) throw DivisionByZero("d = 3 constant needs alpha_1 != alpha_2");
  return (a3 - a1) / (a1 - a2);
}

bool three_term_identity_holds() {
  // Variables μ_1 … μ_4 then δ_1 … δ_4.
  auto mu = [](std::size_t i) { return MPoly::variable(8, i - 1); };
  auto de = [](std::size_t i) { return MPoly::variable(8, i + 3); };
  auto x = [&](std::size_t a, std::size_t b) { return de(b) * mu(a) - de(a) * mu(b); };
  const MPoly s = x(4, 1) * x(2, 3) + x(4, 2) * x(3, 1) + x(4, 3) * x(1, 2);
  return s.is_zero();
}

}  // namespace qsip
