#include "qsip/numroots.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qsip/error.hpp"

namespace qsip {

namespace {

// Owning mpfr_t with its own precision; no global precision state.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

Real from_rational(const Rational& q, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.get(), q.raw().get_mpq_t(), MPFR_RNDN);
  return r;
}

Rational to_rational(const Real& x) {
  if (mpfr_zero_p(x.get())) return Rational(0);
  mpz_class m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.get());
  mpz_class p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(m, p2) : Rational(BigInt(m * p2));
}

std::string format(const Real& x, unsigned digits) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits > 0 ? digits - 1 : 0), x.get());
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

struct Complex {
  Real re, im;
  explicit Complex(mpfr_prec_t p) : re(p), im(p) {}
};

mpfr_prec_t P(const Complex& z) { return z.re.prec(); }

Complex add(const Complex& a, const Complex& b) {
  Complex r(P(a));
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Complex sub(const Complex& a, const Complex& b) {
  Complex r(P(a));
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Complex mul(const Complex& a, const Complex& b) {
  Complex r(P(a));
  Real t(P(a));
  mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
  return r;
}

Real norm2(const Complex& a) {
  Real r(P(a)), t(P(a));
  mpfr_sqr(r.get(), a.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), a.im.get(), MPFR_RNDN);
  mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDN);
  return r;
}

Real abs(const Complex& a, mpfr_rnd_t rnd = MPFR_RNDN) {
  Real r(P(a));
  mpfr_hypot(r.get(), a.re.get(), a.im.get(), rnd);
  return r;
}

bool is_zero(const Complex& a) { return mpfr_zero_p(a.re.get()) && mpfr_zero_p(a.im.get()); }

Complex div(const Complex& a, const Complex& b) {
  const Real n = norm2(b);
  Complex conj(P(b));
  mpfr_set(conj.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_neg(conj.im.get(), b.im.get(), MPFR_RNDN);
  Complex r = mul(a, conj);
  mpfr_div(r.re.get(), r.re.get(), n.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), n.get(), MPFR_RNDN);
  return r;
}

Complex one(mpfr_prec_t p) {
  Complex r(p);
  mpfr_set_ui(r.re.get(), 1, MPFR_RNDN);
  return r;
}

// p(z) and p'(z) by Horner.
std::pair<Complex, Complex> horner(const std::vector<Real>& a, const Complex& z) {
  const mpfr_prec_t p = P(z);
  Complex v(p), dv(p);
  mpfr_set(v.re.get(), a.back().get(), MPFR_RNDN);
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    dv = add(mul(dv, z), v);
    v = mul(v, z);
    mpfr_add(v.re.get(), v.re.get(), a[k].get(), MPFR_RNDN);
  }
  return {std::move(v), std::move(dv)};
}

}  // namespace

std::string to_decimal(const Rational& q, unsigned digits) {
  const auto prec = static_cast<mpfr_prec_t>(digits * 4 + 64);
  return format(from_rational(q, prec), digits);
}

std::vector<ApproxRoot> approximate_roots(const UPoly& u, unsigned precision_bits) {
  if (u.degree() < 1) throw InvalidArgument("approximate_roots needs degree >= 1");
  if (precision_bits < 32) throw InvalidArgument("precision must be at least 32 bits");
  const unsigned digits = static_cast<unsigned>(precision_bits * 0.30103) - 2;

  if (u.degree() == 1) {
    const Rational r = -u[0] / u[1];
    return {ApproxRoot{r, Rational(0), Rational(0), to_decimal(r, digits), "0", true}};
  }

  const std::size_t n = static_cast<std::size_t>(u.degree());
  const auto wp = static_cast<mpfr_prec_t>(precision_bits + 32);
  std::vector<Real> a;
  for (const auto& c : u.coeffs()) a.push_back(from_rational(c, wp));

  // Start on a circle of Cauchy-bound radius with an irrational offset.
  double bound = 0;
  for (std::size_t k = 0; k < n; ++k)
    bound = std::max(bound, std::fabs((u[k] / u.leading()).to_double()));
  bound = std::min(1.0 + bound, 1e300);
  std::vector<Complex> z;
  for (std::size_t k = 0; k < n; ++k) {
    const double th = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.7;
    Complex c(wp);
    mpfr_set_d(c.re.get(), bound * std::cos(th), MPFR_RNDN);
    mpfr_set_d(c.im.get(), bound * std::sin(th), MPFR_RNDN);
    z.push_back(std::move(c));
  }

  Real tol(wp);
  mpfr_set_ui_2exp(tol.get(), 1, -static_cast<mpfr_exp_t>(precision_bits), MPFR_RNDN);
  const unsigned max_iter = 200 + 4 * precision_bits;
  unsigned settled = 0;
  for (unsigned it = 0; it < max_iter && settled < 3; ++it) {
    bool small = true;
    for (std::size_t k = 0; k < n; ++k) {
      auto [v, dv] = horner(a, z[k]);
      if (is_zero(v)) continue;
      if (is_zero(dv)) {
        mpfr_nextabove(z[k].re.get());
        small = false;
        continue;
      }
      const Complex N = div(v, dv);
      Complex S(wp);
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) S = add(S, div(one(wp), sub(z[k], z[j])));
      const Complex den = sub(one(wp), mul(N, S));
      const Complex w = is_zero(den) ? N : div(N, den);
      z[k] = sub(z[k], w);
      Real scale = abs(z[k]);
      if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, MPFR_RNDN);
      mpfr_mul(scale.get(), scale.get(), tol.get(), MPFR_RNDN);
      if (mpfr_cmp(abs(w).get(), scale.get()) > 0) small = false;
    }
    settled = small ? settled + 1 : 0;
  }

  // Inclusion radii n·(|p(z_k)| + eval error) / (|a_n| ∏ |z_k − z_j|).
  Real unit(wp);
  mpfr_set_ui_2exp(unit.get(), 1, -static_cast<mpfr_exp_t>(wp) + 1, MPFR_RNDU);
  Real lead(wp);
  mpfr_abs(lead.get(), a.back().get(), MPFR_RNDD);
  std::vector<Real> radius;
  for (std::size_t k = 0; k < n; ++k) {
    auto [v, dv] = horner(a, z[k]);
    const Real az = abs(z[k], MPFR_RNDU);
    Real sum(wp), pw(wp), t(wp);
    mpfr_set_ui(pw.get(), 1, MPFR_RNDN);
    for (std::size_t j = 0; j <= n; ++j) {
      mpfr_abs(t.get(), a[j].get(), MPFR_RNDU);
      mpfr_mul(t.get(), t.get(), pw.get(), MPFR_RNDU);
      mpfr_add(sum.get(), sum.get(), t.get(), MPFR_RNDU);
      mpfr_mul(pw.get(), pw.get(), az.get(), MPFR_RNDU);
    }
    mpfr_mul(sum.get(), sum.get(), unit.get(), MPFR_RNDU);
    mpfr_mul_ui(sum.get(), sum.get(), static_cast<unsigned long>(8 * n + 8), MPFR_RNDU);
    Real num = abs(v, MPFR_RNDU);
    mpfr_add(num.get(), num.get(), sum.get(), MPFR_RNDU);

    Real den(wp);
    mpfr_set(den.get(), lead.get(), MPFR_RNDD);
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) mpfr_mul(den.get(), den.get(), abs(sub(z[k], z[j]), MPFR_RNDD).get(), MPFR_RNDD);
    if (mpfr_zero_p(den.get())) throw NumericSeparationFailure("coincident root approximations");
    Real r(wp);
    mpfr_div(r.get(), num.get(), den.get(), MPFR_RNDU);
    mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(n), MPFR_RNDU);
    // Slack for the rounding in the quotient above.
    mpfr_mul_d(r.get(), r.get(), 1.0 + 1e-6, MPFR_RNDU);
    radius.push_back(std::move(r));
  }

  Real max_r(wp);
  for (const auto& r : radius)
    if (mpfr_cmp(r.get(), max_r.get()) > 0) mpfr_set(max_r.get(), r.get(), MPFR_RNDU);
  Real twice(wp);
  mpfr_mul_ui(twice.get(), max_r.get(), 2, MPFR_RNDU);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (mpfr_cmp(abs(sub(z[i], z[j]), MPFR_RNDD).get(), twice.get()) <= 0)
        throw NumericSeparationFailure("root disks not separated at " +
                                       std::to_string(precision_bits) + " bits");

  std::vector<ApproxRoot> out;
  for (std::size_t k = 0; k < n; ++k) {
    ApproxRoot r;
    r.re = to_rational(z[k].re);
    r.im = to_rational(z[k].im);
    r.radius = to_rational(radius[k]);
    r.re_text = format(z[k].re, digits);
    r.im_text = format(z[k].im, digits);
    r.real = r.im.abs() <= r.radius;
    out.push_back(std::move(r));
  }
  // Real roots first by real part, then the rest by (re, im).
  std::sort(out.begin(), out.end(), [](const ApproxRoot& x, const ApproxRoot& y) {
    if (x.real != y.real) return x.real;
    if (x.re != y.re) return x.re < y.re;
    return x.im < y.im;
  });
  return out;
}

}  // namespace qsip
