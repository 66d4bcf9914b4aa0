#include "qsip/mpoly.hpp"

#include <algorithm>
#include <numeric>

namespace qsip {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  total_degree_ = std::accumulate(exps_.begin(), exps_.end(), Exponent{0});
}

bool Monomial::divides(const Monomial& other) const {
  if (other.arity() != arity()) throw ArityMismatch("monomial arity mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

namespace {

Exponent degree_of(std::span<const Exponent> e) {
  return std::accumulate(e.begin(), e.end(), Exponent{0});
}

// Same as grevlex_compare with degrees already known.
int grevlex_compare_deg(std::span<const Exponent> a, Exponent da, std::span<const Exponent> b,
                        Exponent db) {
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int grevlex_compare(std::span<const Exponent> a, std::span<const Exponent> b) {
  return grevlex_compare_deg(a, degree_of(a), b, degree_of(b));
}

MPoly::MPoly(std::size_t arity, const Rational& constant) : arity_(arity) {
  if (!constant.is_zero()) {
    exps_.assign(arity, 0);
    degs_.push_back(0);
    coeffs_.push_back(constant);
  }
}

MPoly MPoly::variable(std::size_t arity, std::size_t index, Exponent power) {
  if (index >= arity) throw InvalidArgument("variable index out of range");
  std::vector<Exponent> e(arity, 0);
  e[index] = power;
  return term(arity, e, Rational(1));
}

MPoly MPoly::term(std::size_t arity, std::span<const Exponent> exps, const Rational& c) {
  if (exps.size() != arity) throw ArityMismatch("term arity mismatch");
  MPoly p(arity);
  if (!c.is_zero()) p.push_term(exps, degree_of(exps), c);
  return p;
}

MPoly MPoly::from_terms(std::size_t arity,
                        std::vector<std::pair<std::vector<Exponent>, Rational>> terms) {
  for (const auto& t : terms)
    if (t.first.size() != arity) throw ArityMismatch("term arity mismatch");
  std::vector<Exponent> degs(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) degs[i] = degree_of(terms[i].first);
  std::vector<std::size_t> idx(terms.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return grevlex_compare_deg(terms[a].first, degs[a], terms[b].first, degs[b]) > 0;
  });
  MPoly p(arity);
  for (std::size_t k = 0; k < idx.size();) {
    std::size_t j = k;
    Rational c;
    while (j < idx.size() && terms[idx[j]].first == terms[idx[k]].first) {
      c += terms[idx[j]].second;
      ++j;
    }
    if (!c.is_zero()) p.push_term(terms[idx[k]].first, degs[idx[k]], std::move(c));
    k = j;
  }
  return p;
}

bool MPoly::is_constant() const {
  return is_zero() || (size() == 1 && degs_[0] == 0);
}

Rational MPoly::constant_term() const {
  if (!is_zero() && degs_.back() == 0) return coeffs_.back();
  return Rational();
}

Monomial MPoly::monomial(std::size_t term) const {
  auto e = exponents(term);
  return Monomial(std::vector<Exponent>(e.begin(), e.end()));
}

const Rational& MPoly::leading_coeff() const {
  if (is_zero()) throw InvalidArgument("leading coefficient of zero polynomial");
  return coeffs_.front();
}

std::span<const Exponent> MPoly::leading_exponents() const {
  if (is_zero()) throw InvalidArgument("leading monomial of zero polynomial");
  return exponents(0);
}

int MPoly::total_degree() const { return is_zero() ? -1 : static_cast<int>(degs_.front()); }

bool MPoly::is_homogeneous() const {
  return std::all_of(degs_.begin(), degs_.end(), [&](Exponent d) { return d == degs_.front(); });
}

int MPoly::degree_in(std::size_t var) const {
  if (var >= arity_) throw InvalidArgument("variable index out of range");
  int best = -1;
  for (std::size_t t = 0; t < size(); ++t) best = std::max(best, static_cast<int>(exponents(t)[var]));
  return best;
}

MPoly MPoly::coefficient_in(std::size_t var, Exponent power) const {
  if (var >= arity_) throw InvalidArgument("variable index out of range");
  MPoly out(arity_);
  std::vector<Exponent> e(arity_);
  for (std::size_t t = 0; t < size(); ++t) {
    auto src = exponents(t);
    if (src[var] != power) continue;
    std::copy(src.begin(), src.end(), e.begin());
    e[var] = 0;
    // Removing the same power of one variable preserves the relative grevlex order.
    out.push_term(e, degs_[t] - power, coeffs_[t]);
  }
  return out;
}

Rational MPoly::coefficient_of(std::span<const Exponent> exps) const {
  if (exps.size() != arity_) throw ArityMismatch("monomial arity mismatch");
  const Exponent deg = degree_of(exps);
  auto it = std::partition_point(degs_.begin(), degs_.end(), [&](Exponent d) { return d > deg; });
  for (auto t = static_cast<std::size_t>(it - degs_.begin()); t < size() && degs_[t] == deg; ++t) {
    auto e = exponents(t);
    if (std::equal(e.begin(), e.end(), exps.begin())) return coeffs_[t];
  }
  return Rational();
}

bool MPoly::uses_variable(std::size_t var) const { return degree_in(var) > 0; }

void MPoly::check_arity(const MPoly& o) const {
  if (o.arity_ != arity_)
    throw ArityMismatch("ring arity mismatch: " + std::to_string(arity_) + " vs " +
                        std::to_string(o.arity_));
}

void MPoly::push_term(std::span<const Exponent> exps, Exponent deg, Rational c) {
  exps_.insert(exps_.end(), exps.begin(), exps.end());
  degs_.push_back(deg);
  coeffs_.push_back(std::move(c));
}

MPoly MPoly::merge(const MPoly& a, const MPoly& b, bool subtract) {
  MPoly out(a.arity_);
  out.exps_.reserve(a.exps_.size() + b.exps_.size());
  out.degs_.reserve(a.size() + b.size());
  out.coeffs_.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = grevlex_compare_deg(a.exponents(i), a.degs_[i], b.exponents(j), b.degs_[j]);
    if (c > 0) {
      out.push_term(a.exponents(i), a.degs_[i], a.coeffs_[i]);
      ++i;
    } else if (c < 0) {
      out.push_term(b.exponents(j), b.degs_[j], subtract ? -b.coeffs_[j] : b.coeffs_[j]);
      ++j;
    } else {
      Rational s = subtract ? a.coeffs_[i] - b.coeffs_[j] : a.coeffs_[i] + b.coeffs_[j];
      if (!s.is_zero()) out.push_term(a.exponents(i), a.degs_[i], std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_term(a.exponents(i), a.degs_[i], a.coeffs_[i]);
  for (; j < b.size(); ++j)
    out.push_term(b.exponents(j), b.degs_[j], subtract ? -b.coeffs_[j] : b.coeffs_[j]);
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_arity(o);
  *this = merge(*this, o, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_arity(o);
  *this = merge(*this, o, true);
  return *this;
}

MPoly MPoly::mul_term(std::span<const Exponent> exps, const Rational& c) const {
  if (exps.size() != arity_) throw ArityMismatch("term arity mismatch");
  MPoly out(arity_);
  if (c.is_zero()) return out;
  const Exponent dm = degree_of(exps);
  out.exps_.resize(exps_.size());
  out.degs_.resize(size());
  out.coeffs_.reserve(size());
  for (std::size_t t = 0; t < size(); ++t) {
    for (std::size_t v = 0; v < arity_; ++v) out.exps_[t * arity_ + v] = exps_[t * arity_ + v] + exps[v];
    out.degs_[t] = degs_[t] + dm;
    out.coeffs_.push_back(coeffs_[t] * c);
  }
  return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_arity(b);
  if (a.is_zero() || b.is_zero()) return MPoly(a.arity_);
  const MPoly& small = a.size() <= b.size() ? a : b;
  const MPoly& large = a.size() <= b.size() ? b : a;
  // Each row small_t · large is already sorted; merge the rows pairwise.
  std::vector<MPoly> rows;
  rows.reserve(small.size());
  for (std::size_t t = 0; t < small.size(); ++t)
    rows.push_back(large.mul_term(small.exponents(t), small.coeffs_[t]));
  while (rows.size() > 1) {
    std::vector<MPoly> next;
    next.reserve((rows.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2)
      next.push_back(MPoly::merge(rows[i], rows[i + 1], false));
    if (rows.size() % 2) next.push_back(std::move(rows.back()));
    rows = std::move(next);
  }
  return std::move(rows.front());
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    exps_.clear();
    degs_.clear();
    coeffs_.clear();
  } else {
    for (auto& x : coeffs_) x *= c;
  }
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
  return a.arity_ == b.arity_ && a.exps_ == b.exps_ && a.coeffs_ == b.coeffs_;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(arity_, Rational(1));
  MPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MPoly pow(const MPoly& p, unsigned e) { return p.pow(e); }

MPoly MPoly::derivative(std::size_t var) const {
  if (var >= arity_) throw InvalidArgument("variable index out of range");
  std::vector<std::pair<std::vector<Exponent>, Rational>> terms;
  for (std::size_t t = 0; t < size(); ++t) {
    auto e = exponents(t);
    if (e[var] == 0) continue;
    std::vector<Exponent> ne(e.begin(), e.end());
    const Exponent k = ne[var]--;
    terms.emplace_back(std::move(ne), coeffs_[t] * Rational(static_cast<unsigned long>(k)));
  }
  return from_terms(arity_, std::move(terms));
}

MPoly MPoly::embed(std::size_t new_arity, std::span<const std::size_t> var_map) const {
  if (var_map.size() != arity_) throw ArityMismatch("embedding map has wrong length");
  std::vector<std::pair<std::vector<Exponent>, Rational>> terms;
  terms.reserve(size());
  for (std::size_t t = 0; t < size(); ++t) {
    std::vector<Exponent> ne(new_arity, 0);
    auto e = exponents(t);
    for (std::size_t v = 0; v < arity_; ++v) {
      if (var_map[v] >= new_arity) throw InvalidArgument("embedding target out of range");
      ne[var_map[v]] += e[v];
    }
    terms.emplace_back(std::move(ne), coeffs_[t]);
  }
  return from_terms(new_arity, std::move(terms));
}

MPoly MPoly::drop_variable(std::size_t var) const {
  if (uses_variable(var)) throw InvalidArgument("cannot drop a variable that occurs");
  std::vector<std::size_t> map(arity_);
  for (std::size_t v = 0; v < arity_; ++v) map[v] = v < var ? v : (v == var ? 0 : v - 1);
  // The dropped slot carries exponent 0 everywhere, so mapping it onto slot 0 is harmless.
  return embed(arity_ - 1, map);
}

std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b) {
  if (a.arity() != b.arity()) throw ArityMismatch("division arity mismatch");
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const std::size_t n = a.arity();
  std::vector<std::pair<std::vector<Exponent>, Rational>> quotient;
  MPoly r = a;
  auto lb = b.leading_exponents();
  const Rational& lc = b.leading_coeff();
  std::vector<Exponent> e(n);
  while (!r.is_zero()) {
    auto lr = r.leading_exponents();
    for (std::size_t v = 0; v < n; ++v) {
      if (lr[v] < lb[v]) return std::nullopt;
      e[v] = lr[v] - lb[v];
    }
    const Rational c = r.leading_coeff() / lc;
    r -= b.mul_term(e, c);
    quotient.emplace_back(e, c);
  }
  return MPoly::from_terms(n, std::move(quotient));
}

MPoly exact_divide(const MPoly& a, const MPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw NotDivisible("polynomial is not divisible");
  return std::move(*q);
}

bool divides(const MPoly& b, const MPoly& a) { return try_divide(a, b).has_value(); }

MPoly substitute(const MPoly& f, const std::map<std::size_t, Binding>& bindings) {
  const std::size_t n = f.arity();
  for (const auto& [var, value] : bindings) {
    if (var >= n) throw InvalidArgument("substitution variable out of range");
    if (auto p = std::get_if<MPoly>(&value); p && p->arity() != n)
      throw ArityMismatch("substituted polynomial lives in a different ring");
  }
  // Powers of each bound value, memoised by exponent.
  std::map<std::pair<std::size_t, Exponent>, MPoly> cache;
  auto power_of = [&](std::size_t var, Exponent e) -> const MPoly& {
    auto key = std::make_pair(var, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const Binding& b = bindings.at(var);
    MPoly p = std::holds_alternative<MPoly>(b) ? std::get<MPoly>(b).pow(e)
                                               : MPoly(n, pow(std::get<Rational>(b), e));
    return cache.emplace(key, std::move(p)).first->second;
  };
  MPoly out(n);
  std::vector<Exponent> kept(n);
  for (std::size_t t = 0; t < f.size(); ++t) {
    auto e = f.exponents(t);
    MPoly piece(n, Rational(1));
    for (std::size_t v = 0; v < n; ++v) {
      if (bindings.count(v)) {
        kept[v] = 0;
        if (e[v]) piece *= power_of(v, e[v]);
      } else {
        kept[v] = e[v];
      }
    }
    out += piece.mul_term(kept, f.coeff(t));
  }
  return out;
}

Rational evaluate(const MPoly& f, std::span<const Rational> point) {
  if (point.size() != f.arity()) throw ArityMismatch("evaluation point has wrong length");
  Rational sum;
  for (std::size_t t = 0; t < f.size(); ++t) {
    Rational term = f.coeff(t);
    auto e = f.exponents(t);
    for (std::size_t v = 0; v < e.size() && !term.is_zero(); ++v)
      if (e[v]) term *= pow(point[v], e[v]);
    sum += term;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Univariate

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_mpoly(const MPoly& f, std::size_t var) {
  const int deg = f.is_zero() ? -1 : f.degree_in(var);
  std::vector<Rational> c(static_cast<std::size_t>(deg + 1));
  for (std::size_t t = 0; t < f.size(); ++t) {
    auto e = f.exponents(t);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (v != var && e[v] != 0) throw InvalidArgument("polynomial is not univariate");
    c[e[var]] = f.coeff(t);
  }
  return UPoly(std::move(c));
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<unsigned long>(i)));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = c_;
  const Rational lc = leading();
  for (auto& x : c) x /= lc;
  return UPoly(std::move(c));
}

std::vector<BigInt> UPoly::primitive_integer() const {
  BigInt l = 1, g = 0;
  for (const auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  std::vector<BigInt> out;
  for (const auto& x : c_) {
    out.push_back(x.num() * (l / x.den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g == 0) return out;
  if (out.back() < 0) g = -g;
  for (auto& x : out) x /= g;
  return out;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero("univariate division by zero");
  std::vector<Rational> r = a.coeffs();
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = r[k + db] / b.leading();
    if (q[k].is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= q[k] * b[j];
  }
  r.resize(db);
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& u) {
  std::vector<UPoly> out;
  if (u.degree() < 1) return out;
  const UPoly du = u.derivative();
  const UPoly a0 = gcd(u, du);
  UPoly b = divmod(u, a0).first;
  UPoly c = divmod(du, a0).first;
  UPoly d = UPoly(c.coeffs());
  {
    // d = c - b'
    std::vector<Rational> dc = c.coeffs();
    const UPoly db = b.derivative();
    dc.resize(std::max(dc.size(), db.coeffs().size()));
    for (std::size_t i = 0; i < db.coeffs().size(); ++i) dc[i] -= db[i];
    d = UPoly(std::move(dc));
  }
  while (b.degree() >= 1) {
    UPoly a = gcd(b, d);
    out.push_back(a);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    std::vector<Rational> dc = c.coeffs();
    const UPoly db = b.derivative();
    dc.resize(std::max(dc.size(), db.coeffs().size()));
    for (std::size_t i = 0; i < db.coeffs().size(); ++i) dc[i] -= db[i];
    d = UPoly(std::move(dc));
  }
  // Drop trailing trivial factors (multiplicities that do not occur at the top).
  while (!out.empty() && out.back().degree() < 1) out.pop_back();
  return out;
}

namespace {

// Divides the integer polynomial c (low first) by (q X - p). Returns false if
// the division is not exact, i.e. p/q is not a root.
bool divide_linear(const std::vector<BigInt>& c, const BigInt& p, const BigInt& q,
                   std::vector<BigInt>& quotient) {
  const std::size_t n = c.size() - 1;
  quotient.assign(n, 0);
  BigInt s = c[n];
  if (!mpz_divisible_p(s.get_mpz_t(), q.get_mpz_t())) return false;
  quotient[n - 1] = s / q;
  for (std::size_t k = n - 1; k >= 1; --k) {
    BigInt t = c[k] + p * quotient[k];
    if (!mpz_divisible_p(t.get_mpz_t(), q.get_mpz_t())) return false;
    quotient[k - 1] = t / q;
  }
  return c[0] == -p * quotient[0];
}

}  // namespace

std::vector<RootMult> rational_roots(const UPoly& u) {
  if (u.is_zero()) throw InvalidArgument("rational roots of the zero polynomial");
  std::vector<RootMult> out;
  if (u.degree() < 1) return out;
  std::vector<BigInt> c = u.primitive_integer();
  unsigned zero_mult = 0;
  while (c.front() == 0) {
    c.erase(c.begin());
    ++zero_mult;
  }
  if (zero_mult) out.push_back({Rational(0), zero_mult});
  if (c.size() < 2) return out;

  // Cauchy bound on root modulus.
  Rational bound(0);
  const Rational lead(c.back());
  for (std::size_t i = 0; i + 1 < c.size(); ++i) bound = std::max(bound, (Rational(c[i]) / lead).abs());
  bound += Rational(1);

  const auto ps = divisors(c.front());
  const auto qs = divisors(c.back());
  std::vector<Rational> candidates;
  for (const auto& q : qs) {
    for (const auto& p : ps) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      Rational r(p, q);
      if (r > bound) continue;
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<BigInt> quotient;
  for (const auto& r : candidates) {
    if (c.size() < 2) break;
    unsigned mult = 0;
    while (c.size() >= 2 && divide_linear(c, r.num(), r.den(), quotient)) {
      c = quotient;
      ++mult;
    }
    if (mult) out.push_back({r, mult});
  }
  std::sort(out.begin(), out.end(), [](const RootMult& a, const RootMult& b) { return a.root < b.root; });
  return out;
}

std::vector<RootMult> rational_roots(const MPoly& u) {
  if (u.is_zero()) throw InvalidArgument("rational roots of the zero polynomial");
  std::size_t var = 0;
  for (std::size_t v = 0; v < u.arity(); ++v)
    if (u.uses_variable(v)) var = v;
  if (u.arity() == 0) return {};
  return rational_roots(UPoly::from_mpoly(u, var));
}

UPoly deflate(const UPoly& u, const std::vector<RootMult>& roots) {
  UPoly q = u;
  for (const auto& r : roots)
    for (unsigned k = 0; k < r.multiplicity; ++k) {
      auto [quot, rem] = divmod(q, UPoly({-r.root, Rational(1)}));
      if (!rem.is_zero()) throw InvalidArgument("deflation by a non-root");
      q = std::move(quot);
    }
  return q;
}

// ---------------------------------------------------------------------------
// Coefficient decomposition

std::vector<std::size_t> CoeffDecomposition::base_to_full() const {
  std::vector<std::size_t> map(n + 1);
  for (std::size_t i = 0; i <= n; ++i) map[i] = i < proj_var ? i : i + 1;
  return map;
}

MPoly CoeffDecomposition::reconstruct() const {
  const std::size_t full = n + 2;
  const auto map = base_to_full();
  MPoly f(full);
  for (unsigned l = 0; l <= d; ++l)
    f += coeffs[l].embed(full, map) * MPoly::variable(full, proj_var, d - l);
  return f;
}

CoeffDecomposition coeff_decompose(const MPoly& f, std::size_t proj_var) {
  if (f.is_zero()) throw InvalidArgument("cannot decompose the zero polynomial");
  if (f.arity() < 2) throw InvalidArgument("form needs at least two variables");
  if (proj_var >= f.arity()) throw InvalidArgument("projection variable out of range");
  if (!f.is_homogeneous()) throw NonHomogeneous("form is not homogeneous");
  CoeffDecomposition dec;
  dec.n = f.arity() - 2;
  dec.m = static_cast<unsigned>(f.total_degree());
  dec.d = static_cast<unsigned>(f.degree_in(proj_var));
  dec.proj_var = proj_var;
  if (dec.d <= 1)
    throw InvalidArgument("degree in the projection variable must be at least 2 (got " +
                          std::to_string(dec.d) + ")");
  for (unsigned l = 0; l <= dec.d; ++l)
    dec.coeffs.push_back(f.coefficient_in(proj_var, dec.d - l).drop_variable(proj_var));
  dec.q_on_hypersurface = dec.d < dec.m;
  return dec;
}

CoeffDecomposition decomposition_from_coeffs(std::vector<MPoly> coeffs) {
  if (coeffs.size() < 3) throw InvalidArgument("need d >= 2");
  if (coeffs.front().is_zero()) throw InvalidArgument("f_0 must be nonzero");
  const std::size_t arity = coeffs.front().arity();
  if (arity < 1) throw InvalidArgument("base ring needs a variable");
  CoeffDecomposition dec;
  dec.d = static_cast<unsigned>(coeffs.size() - 1);
  dec.n = arity - 1;
  dec.proj_var = arity;
  if (!coeffs.front().is_homogeneous()) throw NonHomogeneous("f_0 is not homogeneous");
  dec.m = static_cast<unsigned>(coeffs.front().total_degree()) + dec.d;
  for (unsigned l = 0; l <= dec.d; ++l) {
    const MPoly& fl = coeffs[l];
    if (fl.arity() != arity) throw ArityMismatch("coefficients live in different rings");
    if (fl.is_zero()) continue;
    if (!fl.is_homogeneous() || fl.total_degree() != static_cast<int>(dec.m - dec.d + l))
      throw NonHomogeneous("f_" + std::to_string(l) + " has the wrong degree");
  }
  dec.coeffs = std::move(coeffs);
  dec.q_on_hypersurface = dec.d < dec.m;
  return dec;
}

}  // namespace qsip
