#pragma once

#include <vector>

#include "clausum/digamma.hpp"

namespace clausum {

namespace detail {

inline void check_clausen_c(const Rational& c) {
  if (c.is_integer() && c.sign() <= 0)
    throw pole_error("parameter c = " + c.str() + " is a nonpositive integer pole");
}

}  // namespace detail

// m-th series coefficient of 3F2[1,1,c; 2,c+1; 1], computed both as the
// pochhammer quotient and as the reduced form c/((m+1)(m+c)); the two must
// agree exactly, which doubles as a permanent self-check of the reduction.
inline Rational term_3f2(const Rational& c, unsigned long m) {
  detail::check_clausen_c(c);
  const Rational one(1);
  Rational mr(static_cast<long>(m));
  Rational quotient = pochhammer(one, m) * pochhammer(c, m) /
                      (pochhammer(Rational(2), m) * pochhammer(c + one, m));
  Rational reduced = c / ((mr + one) * (mr + c));
  if (quotient != reduced) throw error("3F2 term identity violated (internal)");
  return reduced;
}

// Exact closed form of 3F2[1,1,c; 2,c+1; 1] via the telescoped identity
//   3F2 = ((1+z)/z) * (psi(z) + gamma + 1/z),  z = c - 1.
// The gamma atoms cancel exactly; that cancellation is asserted rather than
// assumed. c = 1 is the removable Basel case served by basel_case().
inline ClosedForm closed_3f2(const Rational& c, PsiRoute route = PsiRoute::murty) {
  if (c == Rational(1))
    throw singular_case_error("c = 1 collapses to the Basel sum; call basel_case()");
  detail::check_clausen_c(c);
  Rational z = c - Rational(1);
  ClosedForm cf = psi_closed(z, route);
  cf.add_gamma(Rational(1));
  cf.add_unit(Rational(1) / z);
  cf = cf_scale(cf, (Rational(1) + z) / z);
  if (!cf.gamma_coeff().is_zero())
    throw error("gamma atom failed to cancel in 3F2 closed form (internal)");
  return cf;
}

// Value of the c = 1 sum: sum 1/(m+1)^2 = pi^2/6.
inline HPReal basel_case(const PrecisionContext& ctx) {
  HPReal pi = const_pi(ctx);
  return pi * pi / Rational(6);
}

// 3F2[1,1,c; 2,c+1; 1] by certified accelerated summation; works for every
// valid c including c = 1, since the sum is c * U1(c - 1) and U1(0) is the
// Basel sum itself.
inline CertifiedValue series_3f2(const Rational& c, const PrecisionContext& ctx,
                                 int target_digits) {
  detail::check_clausen_c(c);
  if (target_digits < 1) throw argument_error("target digits must be positive");
  if (target_digits > ctx.digits - ctx.guard_digits)
    throw argument_error("target digits exceed context digits minus guard");

  int u1_target = target_digits + 2 + detail::magnitude_digits(c);
  CertifiedValue u1 = detail::accel_u1(c - Rational(1), ctx, u1_target);
  HPReal value = u1.value * c;
  HPReal eps = u1.error_bound * c.abs() +
               pow10(-(ctx.working_digits() - 6), ctx) * (HPReal::from(1L, ctx) + value.abs());
  if (!within(eps, HPReal(ctx), target_digits))
    throw accuracy_error("3F2 series missed its certified target", eps.str(3));
  return CertifiedValue{value, eps};
}

// Third route: 3F2 = (c/(c-1)) * (psi_series(c) + gamma). Shares no code
// with closed_3f2's atom assembly and exercises psi at c instead of c - 1.
inline HPReal telescoped_3f2(const Rational& c, const PrecisionContext& ctx) {
  if (c == Rational(1))
    throw singular_case_error("c = 1 collapses to the Basel sum; call basel_case()");
  detail::check_clausen_c(c);
  Rational scale = c / (c - Rational(1));
  int target = ctx.digits + detail::magnitude_digits(scale) + 2;
  PrecisionContext inner(target + ctx.guard_digits, ctx.guard_digits);
  CertifiedValue ps = psi_series(c, inner, target);
  return (ps.value + const_gamma(inner)) * scale;
}

// Exact partial sum of a general pFq at rational argument: N leading terms of
// sum_m prod(upper)_m / prod(lower)_m * x^m / m!. A lower parameter hitting
// zero before the series terminates is an error; a terminated series (an
// upper parameter was a nonpositive integer) just stops early.
inline Rational pfq_partial(const std::vector<Rational>& upper,
                            const std::vector<Rational>& lower, const Rational& x,
                            unsigned long n_terms) {
  Rational sum(0);
  Rational term(1);
  for (unsigned long m = 0; m < n_terms; ++m) {
    sum += term;
    if (term.is_zero()) break;
    Rational mr(static_cast<long>(m));
    Rational num(1), den(1);
    for (const Rational& a : upper) num *= a + mr;
    for (const Rational& b : lower) {
      Rational bf = b + mr;
      if (bf.is_zero())
        throw argument_error("lower parameter " + b.str() + " vanishes at term " +
                             std::to_string(m + 1));
      den *= bf;
    }
    den *= mr + Rational(1);
    term = term * num * x / den;
  }
  return sum;
}

// psi(r) through the hypergeometric representation
//   psi(r) = -1/r - gamma + (r/(1+r)) * 3F2[1,1,1+r; 2,2+r; 1],
// evaluated via the closed form at shifted parameter. Round-trips the master
// identity in the opposite direction from closed_3f2.
inline HPReal psi_hyp(const Rational& r, const PrecisionContext& ctx,
                      PsiRoute route = PsiRoute::murty) {
  if (r.is_integer() && r.sign() <= 0)
    throw pole_error("psi has a pole at nonpositive integer " + r.str());
  HPReal f = cf_eval(closed_3f2(r + Rational(1), route), ctx);
  return HPReal::from(-(Rational(1) / r), ctx) - const_gamma(ctx) +
         f * (r / (Rational(1) + r));
}

}  // namespace clausum
