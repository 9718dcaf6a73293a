#pragma once

#include <string>

#include "clausum/closed_form.hpp"
#include "clausum/errors.hpp"
#include "clausum/hp.hpp"
#include "clausum/rational.hpp"
#include "clausum/series_accel.hpp"

namespace clausum {

// Which finite closed form of psi at a rational point to assemble. The two
// routes produce different (numerically equal) atom combinations, which is
// exactly what makes them useful as independent cross-checks.
enum class PsiRoute { murty, gauss };

namespace detail {

// Loop guard: closed forms are linear in q (and in the integer shift), so cap
// them at a size where assembly is still instant.
inline constexpr long kMaxClosedLoop = 1000000;

inline void check_pq(const mpz_class& p, const mpz_class& q) {
  if (q < 2 || p < 1 || p >= q)
    throw argument_error("psi closed form needs 1 <= p < q");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw argument_error("psi closed form needs gcd(p, q) = 1");
  if (q > kMaxClosedLoop)
    throw argument_error("denominator too large for closed-form assembly");
}

}  // namespace detail

// psi(p/q) as an exact atom combination, via the form
//   psi(p/q) = -gamma - ln(2q) - (pi/2) cot(pi p/q)
//              + 2 sum_{0 < j < q/2} cos(2 pi j p/q) ln sin(pi j/q).
// For even q the j = q/2 term vanishes (ln sin(pi/2) = 0), so the sum stops
// below q/2 outright.
inline ClosedForm psi_murty(const mpz_class& p, const mpz_class& q) {
  detail::check_pq(p, q);
  ClosedForm cf;
  cf.add_gamma(Rational(-1));
  cf.add_ln_nat(2 * q, Rational(-1));
  cf.add_pi_cot(Rational(p, q), Rational(-1, 2));
  for (mpz_class j = 1; 2 * j < q; ++j)
    cf.add_cos_ln_sin(Rational(j * p, q), Rational(j, q), Rational(2));
  return cf;
}

// psi(p/q) via the variant
//   psi(p/q) = -gamma - ln(q) - (pi/2) cot(pi p/q)
//              + sum'_{j=1}^{floor(q/2)} cos(2 pi j p/q) ln(2 - 2 cos(2 pi j/q)),
// where the prime halves the j = q/2 term when q is even. Using
// 2 - 2 cos(2 pi x) = 4 sin^2(pi x) and ln 4 = -2 ln sin(pi/6), each summand
// becomes a pair of cos_ln_sin atoms with rational coefficients.
inline ClosedForm psi_gauss(const mpz_class& p, const mpz_class& q) {
  detail::check_pq(p, q);
  ClosedForm cf;
  cf.add_gamma(Rational(-1));
  cf.add_ln_nat(q, Rational(-1));
  cf.add_pi_cot(Rational(p, q), Rational(-1, 2));
  for (mpz_class j = 1; 2 * j <= q; ++j) {
    Rational w = (2 * j == q) ? Rational(1, 2) : Rational(1);
    Rational alpha(j * p, q);
    cf.add_cos_ln_sin(alpha, Rational(1, 6), Rational(-2) * w);
    cf.add_cos_ln_sin(alpha, Rational(j, q), Rational(2) * w);
  }
  return cf;
}

// psi(r) for any rational r that is not a pole (poles: integers <= 0).
// Integer r >= 1 gives -gamma + H_{r-1}; otherwise the fractional part goes
// through the selected finite form and the recurrence psi(x+1) = psi(x) + 1/x
// moves the argument, accumulating the corrections in the unit atom.
inline ClosedForm psi_closed(const Rational& r, PsiRoute route = PsiRoute::murty) {
  if (r.is_integer()) {
    if (r.sign() <= 0)
      throw pole_error("psi has a pole at nonpositive integer " + r.str());
    if (r > Rational(detail::kMaxClosedLoop))
      throw argument_error("integer argument too large for closed-form assembly");
    ClosedForm cf;
    cf.add_gamma(Rational(-1));
    Rational h(0);
    long m = r.num().get_si();
    for (long i = 1; i < m; ++i) h += Rational(1, i);
    cf.add_unit(h);
    return cf;
  }
  Rational f = r.frac();
  mpz_class shift = r.floor();
  if (abs(shift) > detail::kMaxClosedLoop)
    throw argument_error("argument too far from (0,1) for closed-form assembly");
  ClosedForm cf = route == PsiRoute::murty ? psi_murty(f.num(), f.den())
                                           : psi_gauss(f.num(), f.den());
  Rational corr(0);
  if (shift > 0) {
    for (mpz_class i = 0; i < shift; ++i) corr += Rational(1) / (f + Rational(i));
  } else if (shift < 0) {
    for (mpz_class i = 1; i <= -shift; ++i) corr -= Rational(1) / (f - Rational(i));
  }
  cf.add_unit(corr);
  return cf;
}

namespace detail {

// Decimal magnitude of |r|, used to pad certified targets before scaling.
inline int magnitude_digits(const Rational& r) {
  mpz_class f = r.abs().floor();
  return static_cast<int>(f.get_str().size());
}

}  // namespace detail

// psi(r) by certified summation of psi(z) = -1/z - gamma + sum z/(n(n+z)),
// accelerated; independent of the closed-form route. The result's
// error_bound is rigorous and at most 10^-target_digits.
inline CertifiedValue psi_series(const Rational& r, const PrecisionContext& ctx,
                                 int target_digits) {
  if (r.is_integer() && r.sign() <= 0)
    throw pole_error("psi has a pole at nonpositive integer " + r.str());
  if (target_digits < 1) throw argument_error("target digits must be positive");
  if (target_digits > ctx.digits - ctx.guard_digits)
    throw argument_error("target digits exceed context digits minus guard");

  int u1_target = target_digits + 2 + detail::magnitude_digits(r);
  CertifiedValue u1 = detail::accel_u1(r, ctx, u1_target);

  HPReal value = HPReal::from(-(Rational(1) / r), ctx) - const_gamma(ctx) + u1.value * r;
  HPReal eps = u1.error_bound * r.abs() +
               pow10(-(ctx.working_digits() - 6), ctx) * (HPReal::from(1L, ctx) + value.abs());
  if (!within(eps, HPReal(ctx), target_digits))
    throw accuracy_error("psi series missed its certified target", eps.str(3));
  return CertifiedValue{value, eps};
}

}  // namespace clausum
