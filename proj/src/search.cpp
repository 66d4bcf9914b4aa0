#include "qsip/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "qsip/error.hpp"

namespace qsip {

// ---------------------------------------------------------------- points

ProjectivePoint::ProjectivePoint(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  std::int64_t g = 0;
  for (auto v : coords_) g = std::gcd(g, v < 0 ? -v : v);
  if (g == 0) throw InvalidArgument("projective point cannot be the zero vector");
  const auto first = std::find_if(coords_.begin(), coords_.end(), [](auto v) { return v != 0; });
  const std::int64_t s = *first < 0 ? -g : g;
  for (auto& v : coords_) {
    v /= s;
    height_ = std::max(height_, v < 0 ? -v : v);
  }
}

std::vector<Rational> ProjectivePoint::rationals() const {
  std::vector<Rational> out;
  for (auto v : coords_) out.emplace_back(static_cast<long long>(v));
  return out;
}

std::string ProjectivePoint::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ':';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (auto c = a.height_ <=> b.height_; c != 0) return c;
  return a.coords_ <=> b.coords_;
}

namespace {

void points_rec(std::vector<std::int64_t>& x, std::size_t k, std::int64_t h, bool reached,
                bool all_zero, const std::function<void(const ProjectivePoint&)>& visit) {
  const std::size_t N = x.size();
  if (k == N) {
    std::int64_t g = 0;
    for (auto v : x) g = std::gcd(g, v < 0 ? -v : v);
    if (g == 1) visit(ProjectivePoint(x));
    return;
  }
  auto step = [&](std::int64_t v) {
    x[k] = v;
    const bool at_h = v == h || v == -h;
    points_rec(x, k + 1, h, reached || at_h, all_zero && v == 0, visit);
  };
  if (k + 1 == N && !reached) {
    // The last slot must reach the height.
    if (!all_zero) step(-h);
    step(h);
    return;
  }
  for (std::int64_t v = all_zero ? 0 : -h; v <= h; ++v) step(v);
}

}  // namespace

void for_each_point(std::size_t n, std::int64_t lo, std::int64_t hi,
                    const std::function<void(const ProjectivePoint&)>& visit) {
  std::vector<std::int64_t> x(n + 1);
  for (std::int64_t h = std::max<std::int64_t>(lo, 1); h <= hi; ++h) points_rec(x, 0, h, false, true, visit);
}

std::vector<ProjectivePoint> enumerate_points(std::size_t n, std::int64_t height_bound) {
  if (height_bound < 1) throw InvalidArgument("height bound must be at least 1");
  std::vector<ProjectivePoint> out;
  for_each_point(n, 1, height_bound, [&](const ProjectivePoint& p) { out.push_back(p); });
  return out;
}

// ---------------------------------------------------------------- evaluation

IntegerEvaluator::IntegerEvaluator(const MPoly& f) : arity_(f.arity()) {
  for (std::size_t t = 0; t < f.size(); ++t)
    mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), f.coeff(t).den().get_mpz_t());
  for (std::size_t t = 0; t < f.size(); ++t) {
    const auto e = f.exponents(t);
    exps_.emplace_back(e.begin(), e.end());
    for (auto v : e) max_exp_ = std::max<unsigned>(max_exp_, v);
    coeffs_.push_back(f.coeff(t).num() * (den_ / f.coeff(t).den()));
  }
}

BigInt IntegerEvaluator::scaled(std::span<const std::int64_t> x) const {
  if (x.size() != arity_) throw ArityMismatch("evaluation point has the wrong length");
  std::int64_t h = 1;
  for (auto v : x) h = std::max(h, v < 0 ? -v : v);
  // Fast path when every term fits comfortably in 128 bits.
  long double bound = 0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    long double term = std::fabs(coeffs_[t].get_d());
    for (auto e : exps_[t]) term *= std::pow(static_cast<long double>(h), e);
    bound += term;
  }
  if (bound < 1e36L) {
    std::vector<std::vector<__int128>> pw(arity_, std::vector<__int128>(max_exp_ + 1, 1));
    for (std::size_t i = 0; i < arity_; ++i)
      for (unsigned e = 1; e <= max_exp_; ++e) pw[i][e] = pw[i][e - 1] * x[i];
    __int128 s = 0;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
      __int128 term = static_cast<__int128>(coeffs_[t].get_si());
      for (std::size_t i = 0; i < arity_; ++i) term *= pw[i][exps_[t][i]];
      s += term;
    }
    const bool neg = s < 0;
    unsigned __int128 m = neg ? -static_cast<unsigned __int128>(s) : static_cast<unsigned __int128>(s);
    BigInt hi_part(static_cast<unsigned long>(m >> 64));
    BigInt out = (hi_part << 64) + BigInt(static_cast<unsigned long>(m & 0xffffffffffffffffULL));
    return neg ? BigInt(-out) : out;
  }
  std::vector<std::vector<BigInt>> pw(arity_, std::vector<BigInt>(max_exp_ + 1, 1));
  for (std::size_t i = 0; i < arity_; ++i) {
    const BigInt xi(std::to_string(x[i]));
    for (unsigned e = 1; e <= max_exp_; ++e) pw[i][e] = pw[i][e - 1] * xi;
  }
  BigInt s = 0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    BigInt term = coeffs_[t];
    for (std::size_t i = 0; i < arity_; ++i) term *= pw[i][exps_[t][i]];
    s += term;
  }
  return s;
}

Rational IntegerEvaluator::operator()(std::span<const std::int64_t> x) const {
  return Rational(scaled(x), den_);
}

namespace {

// Nonzero S-unit test on an integer without a full factorization.
bool integer_s_unit(BigInt v, const PrimeSet& S) {
  if (v == 0) return false;
  if (v < 0) v = -v;
  for (auto p : S.primes()) {
    const BigInt bp(static_cast<unsigned long>(p));
    mpz_remove(v.get_mpz_t(), v.get_mpz_t(), bp.get_mpz_t());
  }
  return v == 1;
}

struct ComplementTest {
  IntegerEvaluator eval;
  bool den_unit;

  ComplementTest(const MPoly& d_form, const PrimeSet& S)
      : eval(d_form), den_unit(integer_s_unit(eval.denominator(), S)) {}

  bool passes(const ProjectivePoint& p, const PrimeSet& S) const {
    const BigInt v = eval.scaled(p.coords());
    if (den_unit) return integer_s_unit(v, S);
    return is_s_unit(Rational(v, eval.denominator()), S);
  }
};

}  // namespace

std::vector<FilteredPoint> filter_complement(std::span<const ProjectivePoint> points,
                                             const BranchData& branch, const PrimeSet& S) {
  const ComplementTest test(branch.d_form, S);
  std::vector<FilteredPoint> out;
  for (const auto& p : points) {
    if (p.size() != branch.dec.base_arity()) throw ArityMismatch("point dimension does not match n");
    if (!test.passes(p, S)) continue;
    Rational v = test.eval(p.coords());
    auto f = s_unit_factor(v, S);
    out.push_back({p, std::move(v), std::move(f)});
  }
  return out;
}

// ---------------------------------------------------------------- fibers

unsigned FiberRoots::count() const {
  unsigned c = 0;
  for (const auto& r : exact) c += r.multiplicity;
  for (const auto& r : approx) c += r.multiplicity;
  return c;
}

FiberRoots fiber_roots(const CoeffDecomposition& dec, std::span<const Rational> x,
                       unsigned precision_bits) {
  if (x.size() != dec.base_arity()) throw ArityMismatch("point dimension does not match n");
  const unsigned d = dec.d;
  std::vector<Rational> c(d + 1);
  FiberRoots out;
  bool found = false;
  for (unsigned l = 0; l <= d; ++l) {
    c[d - l] = evaluate(dec.f(l), x);
    if (!found && !c[d - l].is_zero()) {
      out.first_nonzero = l;
      found = true;
    }
  }
  if (!found) throw InvalidArgument("fiber polynomial vanishes identically at the point");
  const UPoly u(std::move(c));
  if (u.degree() == 0) return out;
  out.exact = rational_roots(u);
  const UPoly rest = deflate(u, out.exact);
  if (rest.degree() >= 1) {
    const auto parts = squarefree_decomposition(rest);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (parts[k].degree() < 1) continue;
      for (auto r : approximate_roots(parts[k], precision_bits)) {
        r.multiplicity = static_cast<unsigned>(k + 1);
        out.approx.push_back(std::move(r));
      }
    }
  }
  return out;
}

namespace {

std::optional<CrossRatioMatch> match_exact(const std::vector<Rational>& a, const CandidateSet& cand) {
  const std::size_t r = a.size();
  if (r < 2) return std::nullopt;
  std::vector<std::size_t> p(r);
  std::iota(p.begin(), p.end(), 0);
  if (r == 2) return CrossRatioMatch{{}, p};
  do {
    if (r == 3) {
      const Rational c = d3_constant(a[p[0]], a[p[1]], a[p[2]]);
      if (cand.contains(-c)) return CrossRatioMatch{{c}, p};
      continue;
    }
    std::vector<Rational> c = {Rational(0), Rational(1)};
    bool ok = true;
    for (std::size_t i = 3; i < r && ok; ++i) {
      c.push_back(cross_ratio(a[p[0]], a[p[1]], a[p[2]], a[p[i]]));
      ok = cand.contains(c.back());
    }
    if (ok) return CrossRatioMatch{std::move(c), p};
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

struct CRat {
  Rational re, im;
};

CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
CRat operator*(const CRat& a, const CRat& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
std::optional<CRat> quotient(const CRat& a, const CRat& b) {
  const Rational n = b.re * b.re + b.im * b.im;
  if (n.is_zero()) return std::nullopt;
  const CRat t = a * CRat{b.re, -b.im};
  return CRat{t.re / n, t.im / n};
}

// Candidate within tol·max(1, |z|) of z, if any.
std::optional<Rational> near_candidate(const CRat& z, const CandidateSet& cand, const Rational& tol) {
  const Rational scale = std::max(Rational(1), z.re.abs());
  const Rational t = tol * scale;
  if (z.im.abs() > t) return std::nullopt;
  auto it = cand.values.lower_bound(z.re - t);
  if (it != cand.values.end() && *it <= z.re + t) return *it;
  return std::nullopt;
}

std::optional<CrossRatioMatch> match_numeric(const std::vector<CRat>& a, const CandidateSet& cand,
                                             unsigned precision_bits) {
  const std::size_t r = a.size();
  if (r < 3) return std::nullopt;
  const Rational tol(BigInt(1), BigInt(1) << (precision_bits / 2));
  std::vector<std::size_t> p(r);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (r == 3) {
      auto c = quotient(a[p[2]] - a[p[0]], a[p[0]] - a[p[1]]);
      if (!c) continue;
      auto m = near_candidate(CRat{-c->re, -c->im}, cand, tol);
      if (m) return CrossRatioMatch{{-*m}, p};
      continue;
    }
    std::vector<Rational> cs = {Rational(0), Rational(1)};
    bool ok = true;
    for (std::size_t i = 3; i < r && ok; ++i) {
      auto c = quotient((a[p[i]] - a[p[1]]) * (a[p[2]] - a[p[0]]),
                        (a[p[i]] - a[p[0]]) * (a[p[2]] - a[p[1]]));
      auto m = c ? near_candidate(*c, cand, tol) : std::nullopt;
      ok = m.has_value();
      if (ok) cs.push_back(*m);
    }
    if (ok) return CrossRatioMatch{std::move(cs), p};
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

}  // namespace

FiberReport fiber_report(const BranchData& branch, const ProjectivePoint& point, const PrimeSet& S,
                         const CandidateSet& candidates, const FiberOptions& opt) {
  const auto& dec = branch.dec;
  if (point.size() != dec.base_arity()) throw ArityMismatch("point dimension does not match n");
  const auto x = point.rationals();

  FiberReport rep;
  rep.point = point;
  rep.delta_value = evaluate(branch.delta, x);
  if (rep.delta_value.is_zero())
    throw OnBranchLocus("point " + point.str() + " lies on the branch locus");
  rep.delta_factor = s_unit_factor(rep.delta_value, S);
  rep.d_form_value = evaluate(branch.d_form, x);
  rep.leading_vanishes = evaluate(dec.f(0), x).is_zero();
  if (rep.leading_vanishes)
    rep.notes.push_back("leading coefficient vanishes: fiber has d - 1 roots, primed construction");
  else
    rep.d_form_factor = s_unit_factor(rep.d_form_value, S);
  rep.t_class = t_class(branch, x);

  try {
    rep.roots = fiber_roots(dec, x, opt.precision_bits);
  } catch (const NumericSeparationFailure& e) {
    rep.numeric_failure = e.what();
    rep.notes.push_back("numeric root separation failed; no roots reported");
    return rep;
  }
  rep.split_over_q = rep.roots.split();

  if (!rep.split_over_q) {
    rep.notes.push_back("verification heuristic only");
    if (opt.numeric_evidence) {
      std::vector<CRat> all;
      for (const auto& r : rep.roots.exact) all.push_back({r.root, Rational(0)});
      for (const auto& r : rep.roots.approx) all.push_back({r.re, r.im});
      rep.numeric_match = match_numeric(all, candidates, opt.precision_bits);
    }
    return rep;
  }

  std::vector<Rational> alpha;
  for (const auto& r : rep.roots.exact) alpha.push_back(r.root);
  for (const auto& a : alpha) rep.mu_delta.emplace_back(a.num(), a.den());
  std::vector<BigInt> extra;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = i + 1; j < alpha.size(); ++j) {
      XijEntry e;
      e.i = i + 1;
      e.j = j + 1;
      e.value = rep.mu_delta[j].second * rep.mu_delta[i].first -
                rep.mu_delta[i].second * rep.mu_delta[j].first;
      for (const auto& [p, m] : factor_integer(BigInt(abs(e.value)))) {
        e.support.push_back(p);
        if (!p.fits_ulong_p() || !S.contains(p.get_ui())) extra.push_back(p);
      }
      rep.xij.push_back(std::move(e));
    }
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  rep.extra_primes = std::move(extra);

  if (alpha.size() < 2) {
    rep.lift_ok = false;
    rep.notes.push_back("no construction for a single root");
    return rep;
  }
  rep.matched = match_exact(alpha, candidates);
  if (!rep.matched) {
    rep.lift_ok = false;
    rep.notes.push_back("no root ordering matches the candidate set");
    return rep;
  }
  const auto data = rep.leading_vanishes ? variant_delta_primed(dec, rep.matched->c)
                                         : construct_for(dec, rep.matched->c);
  std::vector<Rational> labelled;
  for (auto k : rep.matched->order) labelled.push_back(alpha[k]);
  const auto lift = lift_point(data, x, labelled);
  rep.construction = to_string(data.variant);
  rep.lift_ok = lift.member() && lift.w_contains;
  return rep;
}

// ---------------------------------------------------------------- scan

namespace {

void tally(ScanResult& res, const FiberReport& r) {
  ++res.passed;
  if (r.split_over_q) ++res.split;
  if (r.matched) ++res.matched;
  if (r.lift_ok.value_or(false)) ++res.lifted;
  if (r.numeric_failure) ++res.numeric_failures;
  ++res.class_counts[r.t_class ? "T_" + std::to_string(*r.t_class) : "none"];
}

ScanResult scan_heights(const BranchData& branch, const PrimeSet& S, const CandidateSet& cand,
                        const FiberOptions& fopt, const std::vector<std::int64_t>& heights) {
  ScanResult res;
  const ComplementTest test(branch.d_form, S);
  for (auto h : heights)
    for_each_point(branch.dec.n, h, h, [&](const ProjectivePoint& p) {
      ++res.enumerated;
      if (!test.passes(p, S)) return;
      res.reports.push_back(fiber_report(branch, p, S, cand, fopt));
      tally(res, res.reports.back());
    });
  return res;
}

}  // namespace

ScanResult merge_scans(std::vector<ScanResult> parts) {
  ScanResult out;
  for (auto& p : parts) {
    out.enumerated += p.enumerated;
    out.passed += p.passed;
    out.split += p.split;
    out.matched += p.matched;
    out.lifted += p.lifted;
    out.numeric_failures += p.numeric_failures;
    for (const auto& [k, v] : p.class_counts) out.class_counts[k] += v;
    for (auto& r : p.reports) out.reports.push_back(std::move(r));
  }
  std::stable_sort(out.reports.begin(), out.reports.end(),
                   [](const FiberReport& a, const FiberReport& b) { return a.point < b.point; });
  return out;
}

ScanResult scan(const BranchData& branch, const PrimeSet& S, const CandidateSet& candidates,
                const ScanOptions& opt) {
  if (opt.height_lo < 1 || opt.height_hi < opt.height_lo) throw InvalidArgument("bad height range");
  const unsigned workers = std::max(1u, opt.threads);
  std::vector<std::vector<std::int64_t>> share(workers);
  // Round-robin so the costly large heights spread across workers.
  for (std::int64_t h = opt.height_lo; h <= opt.height_hi; ++h)
    share[static_cast<std::size_t>(h - opt.height_lo) % workers].push_back(h);

  std::vector<ScanResult> parts(workers);
  if (workers == 1) {
    parts[0] = scan_heights(branch, S, candidates, opt.fiber, share[0]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          parts[w] = scan_heights(branch, S, candidates, opt.fiber, share[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return merge_scans(std::move(parts));
}

// ---------------------------------------------------------------- F(x) = c

namespace {

struct SieveTable {
  std::uint64_t p = 0;
  std::vector<bool> allowed;  // indexed by residues, first coordinate most significant
};

std::size_t residue_index(std::span<const std::int64_t> x, std::uint64_t p) {
  std::size_t idx = 0;
  const auto m = static_cast<std::int64_t>(p);
  for (auto v : x) idx = idx * p + static_cast<std::size_t>(((v % m) + m) % m);
  return idx;
}

}  // namespace

FormSolutions solve_form_equation(const MPoly& F, const Rational& c, std::int64_t bound,
                                  const SolveOptions& opt) {
  if (F.is_zero()) throw InvalidArgument("F must be nonzero");
  if (!F.is_homogeneous()) throw NonHomogeneous("F must be homogeneous");
  if (c.is_zero()) throw InvalidArgument("c must be nonzero");
  if (bound < 0) throw InvalidArgument("bound must be nonnegative");

  FormSolutions out;
  const IntegerEvaluator eval(F);
  const Rational target_q = c * Rational(eval.denominator());
  if (!target_q.is_integer()) return out;  // the scaled value is always an integer
  const BigInt target = target_q.num();
  const std::size_t N = F.arity();

  std::vector<SieveTable> tables;
  if (opt.presieve) {
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
      std::size_t size = 1;
      bool small = true;
      for (std::size_t i = 0; i < N && small; ++i) small = (size *= p) <= (1u << 20);
      if (!small) continue;
      SieveTable t{p, std::vector<bool>(size)};
      std::vector<std::int64_t> r(N, 0);
      bool any = false;
      const BigInt bp(static_cast<unsigned long>(p));
      for (std::size_t idx = 0; idx < size; ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = N; i-- > 0;) {
          r[i] = static_cast<std::int64_t>(rest % p);
          rest /= p;
        }
        // A primitive tuple is never ≡ 0 in every coordinate.
        if (opt.primitive_only && idx == 0) continue;
        BigInt diff = eval.scaled(r) - target;
        const bool ok = mpz_divisible_p(diff.get_mpz_t(), bp.get_mpz_t()) != 0;
        t.allowed[idx] = ok;
        any = any || ok;
      }
      if (!any) {
        out.obstruction = p;
        return out;
      }
      tables.push_back(std::move(t));
    }
  }

  std::vector<std::int64_t> x(N, -bound);
  for (;;) {
    bool skip = false;
    if (opt.primitive_only) {
      std::int64_t g = 0;
      for (auto v : x) g = std::gcd(g, v < 0 ? -v : v);
      skip = g != 1;
    }
    if (!skip) {
      bool pass = true;
      for (const auto& t : tables)
        if (!t.allowed[residue_index(x, t.p)]) {
          pass = false;
          break;
        }
      if (!pass) {
        ++out.sieved;
      } else {
        ++out.evaluated;
        if (eval.scaled(x) == target) out.solutions.push_back(x);
      }
    }
    std::size_t i = N;
    while (i > 0) {
      --i;
      if (x[i] < bound) {
        ++x[i];
        break;
      }
      x[i] = -bound;
      if (i == 0) return out;
    }
    if (N == 0) return out;
  }
}

}  // namespace qsip
