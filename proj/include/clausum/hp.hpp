#pragma once

#include <mpfr.h>

#include <cmath>
#include <string>
#include <utility>

#include "clausum/errors.hpp"
#include "clausum/rational.hpp"

namespace clausum {

// Requested decimal accuracy plus internal guard digits. All computations run
// at digits + guard_digits decimal digits worth of binary precision; results
// are rendered at `digits` significant digits.
struct PrecisionContext {
  int digits;
  int guard_digits;

  explicit PrecisionContext(int requested_digits, int guard = 15)
      : digits(requested_digits), guard_digits(guard) {
    if (digits < 10) throw argument_error("precision needs at least 10 digits");
    if (guard_digits < 10) throw argument_error("guard needs at least 10 digits");
  }

  int working_digits() const { return digits + guard_digits; }

  mpfr_prec_t working_bits() const {
    // log2(10) per decimal digit, plus slack for accumulated roundoff.
    return static_cast<mpfr_prec_t>(std::ceil(working_digits() * 3.3219280948873626)) + 8;
  }
};

// Arbitrary-precision real value (RAII over an mpfr_t). The binary precision
// is fixed at construction; binary operations take the max of both operands.
class HPReal {
 public:
  HPReal() : digits_(10) {
    mpfr_init2(v_, 64);
    mpfr_set_zero(v_, 1);
  }
  explicit HPReal(const PrecisionContext& ctx) : digits_(ctx.digits) {
    mpfr_init2(v_, ctx.working_bits());
    mpfr_set_zero(v_, 1);
  }
  HPReal(const HPReal& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  HPReal(HPReal&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, 64);
    mpfr_swap(v_, o.v_);
  }
  HPReal& operator=(const HPReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
      digits_ = o.digits_;
    }
    return *this;
  }
  HPReal& operator=(HPReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    digits_ = o.digits_;
    return *this;
  }
  ~HPReal() { mpfr_clear(v_); }

  static HPReal zero(const PrecisionContext& ctx) { return HPReal(ctx); }
  static HPReal from(long n, const PrecisionContext& ctx) {
    HPReal r(ctx);
    mpfr_set_si(r.v_, n, MPFR_RNDN);
    return r;
  }
  static HPReal from(const mpz_class& n, const PrecisionContext& ctx) {
    HPReal r(ctx);
    mpfr_set_z(r.v_, n.get_mpz_t(), MPFR_RNDN);
    return r;
  }
  static HPReal from(const Rational& q, const PrecisionContext& ctx) {
    HPReal r(ctx);
    mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec_bits() const { return mpfr_get_prec(v_); }
  int digits() const { return digits_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  HPReal operator-() const {
    HPReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }
  HPReal abs() const {
    HPReal r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

  friend HPReal operator+(const HPReal& a, const HPReal& b) {
    return binop(a, b, mpfr_add);
  }
  friend HPReal operator-(const HPReal& a, const HPReal& b) {
    return binop(a, b, mpfr_sub);
  }
  friend HPReal operator*(const HPReal& a, const HPReal& b) {
    return binop(a, b, mpfr_mul);
  }
  friend HPReal operator/(const HPReal& a, const HPReal& b) {
    if (b.is_zero()) throw domain_error("division by exact zero");
    return binop(a, b, mpfr_div);
  }

  friend HPReal operator*(const HPReal& a, const Rational& q) {
    HPReal r(a);
    mpfr_mul_q(r.v_, a.v_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
  }
  friend HPReal operator/(const HPReal& a, const Rational& q) {
    if (q.is_zero()) throw domain_error("division by exact zero");
    HPReal r(a);
    mpfr_div_q(r.v_, a.v_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
  }
  friend HPReal operator+(const HPReal& a, const Rational& q) {
    HPReal r(a);
    mpfr_add_q(r.v_, a.v_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
  }
  friend HPReal operator-(const HPReal& a, const Rational& q) {
    HPReal r(a);
    mpfr_sub_q(r.v_, a.v_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
  }

  // Three-way numeric comparison of stored values.
  friend int cmp(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const HPReal& a, const HPReal& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const HPReal& a, const HPReal& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const HPReal& a, const HPReal& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const HPReal& a, const HPReal& b) { return cmp(a, b) >= 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Decimal rendering with exactly `sig` significant digits (of the stored
  // value, correctly rounded). Plain notation for moderate exponents,
  // scientific otherwise.
  std::string str(int sig) const {
    if (sig < 1) throw argument_error("significant digit count must be positive");
    if (is_nan()) return "nan";
    if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
    if (is_zero()) return "0";
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(sig), v_, MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    bool neg = !m.empty() && m[0] == '-';
    if (neg) m.erase(0, 1);
    // Value is 0.m * 10^e.
    std::string out;
    if (e > 0 && e <= sig) {
      out = m.substr(0, static_cast<std::size_t>(e));
      if (static_cast<std::size_t>(e) < m.size()) out += "." + m.substr(static_cast<std::size_t>(e));
    } else if (e <= 0 && e >= -5) {
      out = "0." + std::string(static_cast<std::size_t>(-e), '0') + m;
    } else {
      out = m.substr(0, 1);
      if (m.size() > 1) out += "." + m.substr(1);
      out += "e" + std::to_string(static_cast<long>(e) - 1);
    }
    return (neg ? "-" : "") + out;
  }
  std::string str() const { return str(digits_); }

 private:
  using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static HPReal binop(const HPReal& a, const HPReal& b, BinFn fn) {
    HPReal r;
    mpfr_set_prec(r.v_, std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
    r.digits_ = std::max(a.digits_, b.digits_);
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
  int digits_;
};

inline HPReal const_pi(const PrecisionContext& ctx) {
  HPReal r(ctx);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

// Euler-Mascheroni constant; mpfr_const_euler carries a proven error bound.
inline HPReal const_gamma(const PrecisionContext& ctx) {
  HPReal r(ctx);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}

inline HPReal eval_sqrt(const HPReal& x) {
  if (x.sign() < 0) throw domain_error("square root of a negative value");
  HPReal r(x);
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

inline HPReal eval_ln(const HPReal& x) {
  if (x.sign() <= 0) throw domain_error("logarithm of a nonpositive value");
  HPReal r(x);
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

inline HPReal eval_ln(const mpz_class& n, const PrecisionContext& ctx) {
  if (n <= 0) throw domain_error("logarithm of a nonpositive value");
  return eval_ln(HPReal::from(n, ctx));
}

namespace detail {

// cos(pi * t) for exact rational t in [0, 2), folded so the final mpfr call
// sees an argument in [0, pi/4]. The folds are exact rational identities, so
// accuracy is limited only by the final sin/cos rounding.
inline HPReal cos_pi_frac(Rational t, const PrecisionContext& ctx) {
  const Rational half(1, 2), quarter(1, 4), one(1), two(2);
  if (t > one) t = two - t;
  bool negate = false;
  if (t > half) {
    t = one - t;
    negate = true;
  }
  HPReal r(ctx);
  if (t == half) {
    return r;  // exact zero
  }
  if (t.is_zero()) {
    mpfr_set_si(r.raw(), negate ? -1 : 1, MPFR_RNDN);
    return r;
  }
  HPReal pi = const_pi(ctx);
  if (t <= quarter) {
    mpfr_mul_q(r.raw(), pi.raw(), t.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_cos(r.raw(), r.raw(), MPFR_RNDN);
  } else {
    Rational u = half - t;
    mpfr_mul_q(r.raw(), pi.raw(), u.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_sin(r.raw(), r.raw(), MPFR_RNDN);
  }
  if (negate) mpfr_neg(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

}  // namespace detail

// sin(pi * a) for a normalized angle a in [0, 1); always >= 0 there.
inline HPReal eval_sin_pi(const Angle& a, const PrecisionContext& ctx) {
  Rational t = a.value();
  const Rational half(1, 2), quarter(1, 4), one(1);
  HPReal r(ctx);
  if (t.is_zero()) return r;
  if (t > half) t = one - t;
  if (t == half) {
    mpfr_set_si(r.raw(), 1, MPFR_RNDN);
    return r;
  }
  HPReal pi = const_pi(ctx);
  if (t <= quarter) {
    mpfr_mul_q(r.raw(), pi.raw(), t.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_sin(r.raw(), r.raw(), MPFR_RNDN);
  } else {
    Rational u = half - t;
    mpfr_mul_q(r.raw(), pi.raw(), u.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_cos(r.raw(), r.raw(), MPFR_RNDN);
  }
  return r;
}

// cos(2 * pi * a) for a normalized angle.
inline HPReal eval_cos_2pi(const Angle& a, const PrecisionContext& ctx) {
  return detail::cos_pi_frac(a.value() * Rational(2), ctx);
}

// cot(pi * a) for a normalized angle; a = 0 is a pole.
inline HPReal eval_cot_pi(const Angle& a, const PrecisionContext& ctx) {
  const Rational& t = a.value();
  if (t.is_zero()) throw pole_error("cot(pi x) pole at integer x");
  if (t == Rational(1, 2)) return HPReal(ctx);  // exact zero
  HPReal c = detail::cos_pi_frac(t, ctx);
  HPReal s = eval_sin_pi(a, ctx);
  return c / s;
}

// Strict comparison |a - b| < 10^-k, with the threshold rounded down so a
// `true` answer is conservative.
inline bool within(const HPReal& a, const HPReal& b, int k) {
  HPReal d = (a - b).abs();
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_set_ui(t, 10, MPFR_RNDN);
  mpfr_pow_si(t, t, -static_cast<long>(k), MPFR_RNDD);
  bool ok = mpfr_cmp(d.raw(), t) < 0;
  mpfr_clear(t);
  return ok;
}

// 10^k as an HPReal (k may be negative).
inline HPReal pow10(long k, const PrecisionContext& ctx) {
  HPReal r(ctx);
  mpfr_set_ui(r.raw(), 10, MPFR_RNDN);
  mpfr_pow_si(r.raw(), r.raw(), k, MPFR_RNDN);
  return r;
}

}  // namespace clausum
