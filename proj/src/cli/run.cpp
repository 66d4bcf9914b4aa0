#include <algorithm>
#include <sstream>

#include "qsip/cli.hpp"
#include "qsip/construct.hpp"
#include "qsip/elim.hpp"
#include "qsip/error.hpp"
#include "qsip/groebner.hpp"
#include "qsip/locus.hpp"
#include "qsip/search.hpp"
#include "qsip/sunit.hpp"

namespace qsip::cli {

namespace {

constexpr unsigned kDefaultExpBound = 3;
constexpr std::int64_t kDefaultHeight = 10;
constexpr unsigned kDefaultPrecision = 256;

const char* const kIrreducible = "results assume f is irreducible over Q";
const char* const kQuasiIntegral =
    "points are taken as quasi-S-integral when their coprime integer coordinates give an "
    "S-unit d_form value";

Report skeleton() {
  Report r;
  for (const char* k : {"input", "decomposition", "delta", "d_form", "t_systems", "verdicts",
                        "constants", "generators", "identities", "points", "solutions"})
    r[k] = nullptr;
  r["warnings"] = Report::array();
  return r;
}

// Shifts a SyntaxError raised inside a file value to file coordinates.
template <class F>
auto located(const ProblemFile& pf, const std::string& key, F&& body) {
  try {
    return body();
  } catch (const SyntaxError& e) {
    const auto it = pf.origins.find(key);
    if (it == pf.origins.end()) throw;
    const auto [line, col] = it->second;
    std::string msg = e.what();
    msg = msg.substr(0, msg.rfind(" at line "));
    if (e.line() == 1) throw SyntaxError(key + ": " + msg, line, col + e.column() - 1);
    throw SyntaxError(key + ": " + msg, line + e.line() - 1, e.column());
  }
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  std::string cur;
  for (char c : s + " ") {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(Rational::parse(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

Report factor_json(const Rational& v, const SUnitFactorization& f) {
  Report j;
  j["value"] = v.fraction();
  j["sign"] = f.sign;
  j["exponents"] = f.exponents;
  j["residual"] = f.residual.fraction();
  j["s_unit"] = f.is_unit();
  return j;
}

Report strings(const std::vector<MPoly>& ps, const std::vector<std::string>& names) {
  Report a = Report::array();
  for (const auto& p : ps) a.push_back(print_poly(p, names));
  return a;
}

Report fractions(std::span<const Rational> qs) {
  Report a = Report::array();
  for (const auto& q : qs) a.push_back(q.fraction());
  return a;
}

struct Problem {
  std::vector<std::string> vars;
  MPoly f;
  std::size_t proj = 0;
  CoeffDecomposition dec;
  std::vector<std::string> base_names;
};

Problem load(const ProblemFile& pf) {
  Problem p;
  if (pf.vars.empty()) throw InvalidArgument("missing 'vars'");
  if (pf.f_text.empty()) throw InvalidArgument("missing 'f'");
  if (pf.proj.empty()) throw InvalidArgument("missing 'proj'");
  p.vars = pf.vars;
  const auto it = std::find(p.vars.begin(), p.vars.end(), pf.proj);
  if (it == p.vars.end()) throw InvalidArgument("projection variable " + pf.proj + " is not declared");
  p.proj = static_cast<std::size_t>(it - p.vars.begin());
  p.f = located(pf, "f", [&] { return parse_poly(pf.f_text, p.vars); });
  p.dec = coeff_decompose(p.f, p.proj);
  for (auto slot : p.dec.base_to_full()) p.base_names.push_back(p.vars[slot]);
  return p;
}

Report input_json(const std::string& command, const ProblemFile& pf, const Problem* p) {
  Report j;
  j["command"] = command;
  j["vars"] = pf.vars;
  if (p) j["f"] = print_poly(p->f, p->vars);
  if (!pf.proj.empty()) j["proj"] = pf.proj;
  j["primes"] = pf.primes;
  if (pf.height) j["height"] = *pf.height;
  if (pf.expbound) j["expbound"] = *pf.expbound;
  if (pf.precision) j["precision"] = *pf.precision;
  if (pf.primitive) j["primitive"] = *pf.primitive;
  if (pf.c_text) j["c"] = *pf.c_text;
  if (pf.form_text) j["form"] = *pf.form_text;
  if (pf.cvals) j["cvals"] = *pf.cvals;
  return j;
}

Report decomposition_json(const Problem& p) {
  Report j;
  j["n"] = p.dec.n;
  j["m"] = p.dec.m;
  j["d"] = p.dec.d;
  j["q_on_hypersurface"] = p.dec.q_on_hypersurface;
  j["coefficients"] = strings(p.dec.coeffs, p.base_names);
  return j;
}

Report system_json(const QuasiAffineSystem& s, const std::vector<std::string>& names) {
  Report j;
  j["label"] = s.label;
  j["equations"] = strings(s.equations, names);
  j["inequations"] = strings(s.inequations, names);
  Report groups = Report::array();
  for (const auto& g : s.not_all_zero) groups.push_back(strings(g, names));
  j["not_all_zero"] = groups;
  j["trivially_empty"] = s.trivially_empty();
  return j;
}

Report verdict_json(const FinitenessVerdict& v) {
  Report j;
  j["status"] = v.finite ? "finite" : "inapplicable";
  if (v.finite) {
    j["i"] = v.i;
    j["j"] = v.j;
  }
  j["t0_empty"] = v.t0_empty;
  return j;
}

Report dim_json(const std::optional<int>& d) {
  if (!d) return "empty";
  return *d;
}

// Y-variable names that avoid the user's letters.
std::vector<std::string> joint_names(const std::vector<std::string>& base, std::size_t y_count) {
  char letter = 'Y';
  for (char cand : {'Y', 'U', 'V', 'W', 'T', 'S', 'R'}) {
    const bool clash = std::any_of(base.begin(), base.end(), [&](const std::string& v) { return v[0] == cand; });
    if (!clash) {
      letter = cand;
      break;
    }
  }
  auto out = base;
  for (std::size_t k = 1; k <= y_count; ++k) out.push_back(std::string(1, letter) + std::to_string(k));
  return out;
}

Report construction_json(const ConstructionData& data, const std::vector<std::string>& base,
                         const std::string& proj) {
  const auto names = joint_names(base, data.y_count);
  const std::vector<std::string> ynames(names.begin() + static_cast<long>(base.size()), names.end());
  Report j;
  j["variant"] = to_string(data.variant);
  j["ring"] = names;
  j["c"] = fractions(data.c);
  j["a"] = strings(data.a, ynames);
  j["b"] = strings(data.b, ynames);
  j["A"] = strings(data.A, ynames);
  j["B"] = print_poly(data.B, ynames);
  j["V"] = strings(data.v_generators, names);
  Report u = Report::array();
  for (const auto& s : data.u_parts) u.push_back(system_json(s, names));
  j["U"] = u;
  j["W"] = system_json(data.w, names);
  if (data.aux) {
    auto znames = base;
    znames.push_back(std::find(base.begin(), base.end(), "Z") == base.end() ? "Z" : "Z0");
    znames.push_back(proj);
    j["aux"] = {{"g", print_poly(data.aux->g, znames)},
                {"z_exponent", data.aux->z_exponent},
                {"f0_power", data.aux->f0_power},
                {"delta_z_at_zero", print_poly(data.aux->delta_z_at_zero, base)},
                {"expected", print_poly(data.aux->expected, base)},
                {"holds", data.aux->holds}};
  }
  return j;
}

std::vector<Rational> default_constants(unsigned roots) {
  if (roots <= 2) return {};
  if (roots == 3) return {Rational(1)};
  std::vector<Rational> c;
  for (unsigned i = 2; i <= roots; ++i) c.emplace_back(static_cast<long>(i) - 2);
  return c;
}

Report fiber_json(const FiberReport& r) {
  Report j;
  j["point"] = r.point.str();
  j["coords"] = r.point.coords();
  j["height"] = r.point.height();
  j["delta"] = factor_json(r.delta_value, r.delta_factor);
  if (r.leading_vanishes)
    j["d_form"] = {{"value", r.d_form_value.fraction()}};
  else
    j["d_form"] = factor_json(r.d_form_value, r.d_form_factor);
  j["leading_vanishes"] = r.leading_vanishes;
  j["t_class"] = r.t_class ? Report("T_" + std::to_string(*r.t_class)) : Report(nullptr);
  j["first_nonzero"] = r.roots.first_nonzero;
  Report exact = Report::array();
  for (const auto& e : r.roots.exact) exact.push_back({{"root", e.root.fraction()}, {"multiplicity", e.multiplicity}});
  Report approx = Report::array();
  for (const auto& a : r.roots.approx)
    approx.push_back({{"re", a.re_text},
                      {"im", a.im_text},
                      {"radius", to_decimal(a.radius, 6)},
                      {"real", a.real},
                      {"multiplicity", a.multiplicity}});
  j["roots"] = {{"exact", exact}, {"approx", approx}, {"count", r.roots.count()}};
  j["split_over_q"] = r.split_over_q;
  Report md = Report::array();
  for (const auto& [mu, de] : r.mu_delta) md.push_back({mu.get_str(), de.get_str()});
  j["mu_delta"] = md;
  Report xs = Report::array();
  for (const auto& x : r.xij) {
    Report sup = Report::array();
    for (const auto& p : x.support) sup.push_back(p.get_str());
    xs.push_back({{"i", x.i}, {"j", x.j}, {"value", x.value.get_str()}, {"support", sup}});
  }
  j["xij"] = xs;
  Report extra = Report::array();
  for (const auto& p : r.extra_primes) extra.push_back(p.get_str());
  j["extra_primes"] = extra;
  auto match = [](const std::optional<CrossRatioMatch>& m) -> Report {
    if (!m) return nullptr;
    return {{"c", fractions(m->c)}, {"order", m->order}};
  };
  j["matched_c"] = match(r.matched);
  j["construction"] = r.construction ? Report(*r.construction) : Report(nullptr);
  j["lift_ok"] = r.lift_ok ? Report(*r.lift_ok) : Report(nullptr);
  j["numeric_match"] = match(r.numeric_match);
  j["numeric_failure"] = r.numeric_failure ? Report(*r.numeric_failure) : Report(nullptr);
  j["notes"] = r.notes;
  return j;
}

PrimeSet primes_of(const ProblemFile& pf) { return PrimeSet(pf.primes); }

GroebnerBudget budget_of(const Flags& fl) { return {fl.max_pairs, fl.max_degree}; }

// ---------------------------------------------------------------- commands

int cmd_analyze(Report& rep, const ProblemFile& pf, const Flags& fl) {
  const Problem p = load(pf);
  rep["input"] = input_json("analyze", pf, &p);
  rep["decomposition"] = decomposition_json(p);
  const BranchData br = branch_data(p.dec);
  rep["delta"] = print_poly(br.delta, p.base_names);
  rep["d_form"] = print_poly(br.d_form, p.base_names);

  int code = kOk;
  std::vector<std::optional<int>> dims;
  Report ts = Report::array();
  for (unsigned i = 0; i < br.t_systems.size(); ++i) {
    Report s = system_json(br.t_systems[i], p.base_names);
    s["emptiness_shortcut"] = i >= 1 ? Report(t_emptiness_shortcut(p.dec, i)) : Report(nullptr);
    s["dimension"] = nullptr;
    if (fl.dims && i <= 1) {
      try {
        dims.push_back(quasi_affine_dimension(br.t_systems[i], budget_of(fl)));
        s["dimension"] = dim_json(dims.back());
      } catch (const ResourceExceeded& e) {
        s["dimension"] = "budget exceeded";
        rep["warnings"].push_back(std::string("dimension of ") + br.t_systems[i].label + ": " + e.what());
        code = kBudgetExceeded;
      }
    }
    ts.push_back(s);
  }
  rep["t_systems"] = ts;

  Report v;
  v["finiteness"] = verdict_json(finiteness_criterion(p.dec));
  v["dim_T0"] = nullptr;
  v["dim_T0_union_T1"] = nullptr;
  if (fl.dims && code == kOk && dims.size() == 2) {
    v["dim_T0"] = dim_json(dims[0]);
    std::optional<int> u = dims[0];
    if (dims[1] && (!u || *dims[1] > *u)) u = dims[1];
    v["dim_T0_union_T1"] = dim_json(u);
  }
  const bool alarm = reducibility_alarm(p.f);
  v["reducibility_alarm"] = alarm;
  rep["verdicts"] = v;
  rep["warnings"].push_back(kIrreducible);
  if (alarm) rep["warnings"].push_back("reducibility probe found a linear or repeated factor on test lines");
  return code;
}

int cmd_sunit(Report& rep, const ProblemFile& pf, const Flags&) {
  rep["input"] = input_json("sunit", pf, nullptr);
  const PrimeSet S = primes_of(pf);
  const unsigned bound = pf.expbound.value_or(kDefaultExpBound);
  const auto sols = solve_unit_equation(S, bound);
  const auto cand = candidate_c_set(S, bound);
  Report c;
  c["S"] = pf.primes;
  c["bound"] = bound;
  Report us = Report::array();
  for (const auto& s : sols) us.push_back({{"u", s.u.fraction()}, {"v", s.v.fraction()}});
  c["unit_equation"] = us;
  std::vector<Rational> vals(cand.values.begin(), cand.values.end());
  c["candidates"] = fractions(vals);
  rep["constants"] = c;
  return kOk;
}

// Identity suite for the construction(s) attached to the decomposition.
int construct_suite(Report& rep, const Problem& p, const ProblemFile& pf, bool emit_generators) {
  std::vector<Rational> c =
      pf.cvals ? parse_rationals(*pf.cvals) : default_constants(p.dec.d);
  const auto main = construct_for(p.dec, c);
  Report ids;
  bool ok = true;
  auto record = [&](const std::string& name, bool holds) {
    ids[name] = holds;
    ok = ok && holds;
  };
  record("specialization", specialization_identity_check(main));
  record("three_term", three_term_identity_holds());
  if (main.aux) record("aux_discriminant", main.aux->holds);

  Report gens;
  gens["main"] = emit_generators ? construction_json(main, p.base_names, p.vars[p.proj]) : Report(to_string(main.variant));
  if (p.dec.d >= 3) {
    const auto primed = variant_delta_primed(p.dec, default_constants(p.dec.d - 1));
    record("primed_specialization", specialization_identity_check(primed));
    // W requires f_0 ≠ 0 while V′ contains f_0.
    auto lift = [&](const ConstructionData& d) {
      std::vector<std::size_t> up(p.dec.base_arity());
      for (std::size_t i = 0; i < up.size(); ++i) up[i] = i;
      return p.dec.f(0).embed(d.joint_arity, up);
    };
    const auto& ineq = main.w.inequations;
    const auto& eqs = primed.v_generators;
    const bool disjoint = std::find(ineq.begin(), ineq.end(), lift(main)) != ineq.end() &&
                          std::find(eqs.begin(), eqs.end(), lift(primed)) != eqs.end();
    record("w_w_primed_disjoint", disjoint);
    if (emit_generators) gens["primed"] = construction_json(primed, p.base_names, p.vars[p.proj]);
  }
  rep["identities"] = ids;
  rep["generators"] = gens;
  return ok ? kOk : kIdentityFailure;
}

int cmd_construct(Report& rep, const ProblemFile& pf, const Flags&) {
  const Problem p = load(pf);
  rep["input"] = input_json("construct", pf, &p);
  rep["decomposition"] = decomposition_json(p);
  const BranchData br = branch_data(p.dec);
  rep["delta"] = print_poly(br.delta, p.base_names);
  rep["d_form"] = print_poly(br.d_form, p.base_names);
  rep["warnings"].push_back(kIrreducible);
  rep["warnings"].push_back("U_1 is the conjunction B = 0 and all A_l = 0");
  return construct_suite(rep, p, pf, true);
}

int cmd_scan(Report& rep, const ProblemFile& pf, const Flags& fl) {
  const Problem p = load(pf);
  rep["input"] = input_json("scan", pf, &p);
  rep["decomposition"] = decomposition_json(p);
  const BranchData br = branch_data(p.dec);
  rep["delta"] = print_poly(br.delta, p.base_names);
  rep["d_form"] = print_poly(br.d_form, p.base_names);
  rep["warnings"].push_back(kIrreducible);
  rep["warnings"].push_back(kQuasiIntegral);

  if (fl.check_only) return construct_suite(rep, p, pf, false);

  const PrimeSet S = primes_of(pf);
  const unsigned bound = pf.expbound.value_or(kDefaultExpBound);
  const auto cand = candidate_c_set(S, bound);
  ScanOptions opt;
  opt.height_hi = pf.height.value_or(kDefaultHeight);
  opt.threads = fl.threads;
  opt.fiber.precision_bits = pf.precision.value_or(kDefaultPrecision);
  const auto res = scan(br, S, cand, opt);

  rep["constants"] = {{"S", pf.primes}, {"bound", bound}, {"candidates", cand.values.size()}};
  Report pts = Report::array();
  for (const auto& r : res.reports) pts.push_back(fiber_json(r));
  rep["points"] = pts;
  Report summary;
  summary["enumerated"] = res.enumerated;
  summary["passed"] = res.passed;
  summary["split"] = res.split;
  summary["matched"] = res.matched;
  summary["lifted"] = res.lifted;
  summary["numeric_failures"] = res.numeric_failures;
  summary["classes"] = res.class_counts;
  rep["verdicts"] = {{"finiteness", verdict_json(finiteness_criterion(p.dec))}, {"scan", summary}};
  return kOk;
}

int cmd_solve(Report& rep, const ProblemFile& pf, const Flags&) {
  rep["input"] = input_json("solve", pf, nullptr);
  if (pf.vars.empty()) throw InvalidArgument("missing 'vars'");
  if (!pf.c_text) throw InvalidArgument("missing 'c'");
  const std::string key = pf.form_text ? "form" : "f";
  const std::string text = pf.form_text ? *pf.form_text : pf.f_text;
  if (text.empty()) throw InvalidArgument("missing 'form' or 'f'");
  const MPoly F = located(pf, key, [&] { return parse_poly(text, pf.vars); });
  const Rational c = Rational::parse(*pf.c_text);
  const std::int64_t bound = pf.height.value_or(kDefaultHeight);
  SolveOptions opt;
  opt.primitive_only = pf.primitive.value_or(false);
  const auto sol = solve_form_equation(F, c, bound, opt);
  Report s;
  s["F"] = print_poly(F, pf.vars);
  s["c"] = c.fraction();
  s["bound"] = bound;
  s["primitive"] = opt.primitive_only;
  s["tuples"] = sol.solutions;
  s["obstruction"] = sol.obstruction ? Report(*sol.obstruction) : Report(nullptr);
  s["sieved"] = sol.sieved;
  s["evaluated"] = sol.evaluated;
  rep["solutions"] = s;
  return kOk;
}

std::vector<ProjectivePoint> parse_points(const std::string& text, std::size_t size) {
  std::vector<ProjectivePoint> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    for (char& ch : line)
      if (ch == '(' || ch == ')' || ch == ':' || ch == ',') ch = ' ';
    std::istringstream ls(line);
    std::vector<std::int64_t> xs;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        xs.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw SyntaxError("expected integer coordinates", lineno, 1);
      }
    }
    if (xs.empty()) continue;
    if (xs.size() != size)
      throw SyntaxError("point needs " + std::to_string(size) + " coordinates", lineno, 1);
    out.emplace_back(std::move(xs));
  }
  return out;
}

int cmd_verify(Report& rep, const ProblemFile& pf, const Flags& fl) {
  const Problem p = load(pf);
  rep["input"] = input_json("verify", pf, &p);
  rep["decomposition"] = decomposition_json(p);
  if (!fl.points_text) throw InvalidArgument("verify needs --points");
  const BranchData br = branch_data(p.dec);
  rep["delta"] = print_poly(br.delta, p.base_names);
  rep["d_form"] = print_poly(br.d_form, p.base_names);
  rep["warnings"].push_back(kIrreducible);
  rep["warnings"].push_back(kQuasiIntegral);
  const PrimeSet S = primes_of(pf);
  const unsigned bound = pf.expbound.value_or(kDefaultExpBound);
  const auto cand = candidate_c_set(S, bound);
  FiberOptions opt;
  opt.precision_bits = pf.precision.value_or(kDefaultPrecision);
  Report pts = Report::array();
  for (const auto& pt : parse_points(*fl.points_text, p.dec.base_arity())) {
    try {
      pts.push_back(fiber_json(fiber_report(br, pt, S, cand, opt)));
    } catch (const OnBranchLocus& e) {
      pts.push_back({{"point", pt.str()}, {"error", e.what()}});
    }
  }
  rep["points"] = pts;
  rep["constants"] = {{"S", pf.primes}, {"bound", bound}, {"candidates", cand.values.size()}};
  return kOk;
}

}  // namespace

RunResult run(const std::string& command, const ProblemFile& problem, const Flags& flags) {
  RunResult out;
  out.report = skeleton();
  try {
    if (command == "analyze")
      out.exit_code = cmd_analyze(out.report, problem, flags);
    else if (command == "sunit")
      out.exit_code = cmd_sunit(out.report, problem, flags);
    else if (command == "construct")
      out.exit_code = cmd_construct(out.report, problem, flags);
    else if (command == "scan")
      out.exit_code = cmd_scan(out.report, problem, flags);
    else if (command == "solve")
      out.exit_code = cmd_solve(out.report, problem, flags);
    else if (command == "verify")
      out.exit_code = cmd_verify(out.report, problem, flags);
    else
      throw InvalidArgument("unknown command '" + command + "'");
  } catch (const ResourceExceeded& e) {
    out.report["warnings"].push_back(std::string("error: ") + e.what());
    out.exit_code = kBudgetExceeded;
  } catch (const Error& e) {
    out.report["warnings"].push_back(std::string("error: ") + e.what());
    out.exit_code = kInputError;
  }
  return out;
}

}  // namespace qsip::cli
