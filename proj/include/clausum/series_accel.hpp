#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "clausum/errors.hpp"
#include "clausum/hp.hpp"
#include "clausum/rational.hpp"

namespace clausum {

// A numeric result paired with a rigorous bound on its absolute error.
struct CertifiedValue {
  HPReal value;
  HPReal error_bound;
};

namespace detail {

inline constexpr int kMaxAccelOrder = 64;
inline constexpr long kMaxResidualTerms = 1000000;

// U1(z) = sum_{n>=1} 1/(n(n+z)), certified to |error| <= 10^-target.
//
// Iterated Kummer acceleration via telescoping comparison sums:
//   U1(z) = sum_{j=1}^{k} P_j/(j*j!)  +  P_{k+1} * R_k(z),
//   P_j = prod_{i=1}^{j-1} (i-z),
//   R_k(z) = sum_{n>=1} 1/(n(n+1)...(n+k)(n+z)).
// The extracted sum is exact rational arithmetic. R_k converges like
// N^-(k+1); for N >= 2|z| its tail after N terms is at most 2/(k*N^(k+1))
// because |n+z| >= n/2 there and the z-free product telescopes. When z is a
// positive integer <= k, P_{k+1} = 0 and the expansion terminates exactly.
//
// The returned bound is the truncation bound plus a working-precision
// rounding allowance, so it is truthful (and nonzero) even when the
// expansion terminates.
inline CertifiedValue accel_u1(const Rational& z, const PrecisionContext& ctx, int target) {
  if (z.is_integer() && z.sign() < 0)
    throw pole_error("series sum 1/(n(n+z)) has a pole at negative integer z = " + z.str());
  if (target < 1) throw argument_error("certified target must be at least 1 digit");
  if (target > ctx.working_digits() - 8)
    throw argument_error("certified target exceeds working precision headroom");

  const double zd = z.to_double();
  if (!std::isfinite(zd) || std::fabs(zd) > 1e15)
    throw argument_error("series argument magnitude is out of supported range");

  const long n_min = std::max<long>(8, static_cast<long>(std::ceil(2.0 * std::fabs(zd))) + 2);
  const bool terminating = z.is_integer() && z.sign() > 0 && z <= Rational(kMaxAccelOrder);

  // Pick the extraction order k and residual length N with least estimated
  // cost meeting the truncation target (one spare digit of slack). The plan
  // uses doubles; the certification below is exact and catches shortfalls.
  int k = -1;
  long n_len = 0;
  if (terminating) {
    k = static_cast<int>(z.num().get_si());
  } else {
    double lp = 0.0;
    double best_cost = 0.0;
    double best_reachable = -1.0;
    const double l_cap = std::log10(static_cast<double>(kMaxResidualTerms));
    for (int kk = 1; kk <= kMaxAccelOrder; ++kk) {
      lp += std::log10(std::max(std::fabs(static_cast<double>(kk) - zd), 1e-300));
      double reachable = (kk + 1) * l_cap - lp - std::log10(2.0 / kk) - 1;
      best_reachable = std::max(best_reachable, reachable);
      double ln_needed = (lp + std::log10(2.0 / kk) + target + 1) / (kk + 1);
      if (ln_needed > l_cap) continue;
      long nn = std::max(n_min, static_cast<long>(std::ceil(std::pow(10.0, std::max(0.0, ln_needed)))));
      if (nn > kMaxResidualTerms) continue;
      double cost = static_cast<double>(nn) + 40.0 * kk;
      if (k < 0 || cost < best_cost) {
        k = kk;
        n_len = nn;
        best_cost = cost;
      }
    }
    if (k < 0) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "1e-%ld", std::lround(std::max(0.0, best_reachable)));
      throw accuracy_error("series target of " + std::to_string(target) +
                               " digits is unreachable within the term budget",
                           buf);
    }
  }

  const mpfr_prec_t wp = ctx.working_bits();

  for (int attempt = 0;; ++attempt) {
    // Extracted part and remainder coefficient P_{k+1}, both exact.
    Rational extracted(0);
    Rational p(1);  // P_j, starting at P_1 = 1
    mpz_class jfact(1);
    for (int j = 1; j <= k; ++j) {
      jfact *= j;  // j!
      if (!p.is_zero()) extracted += p / Rational(mpz_class(mpz_class(j) * jfact));
      p *= Rational(j) - z;  // now P_{j+1}
    }

    HPReal value(ctx);
    HPReal sum_abs(ctx);
    mpfr_set_q(value.raw(), extracted.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_abs(sum_abs.raw(), value.raw(), MPFR_RNDN);

    HPReal bound(ctx);  // truncation part, accumulated upward
    if (!p.is_zero()) {
      // Residual: t_1 = 1/((k+1)! (1+z)); t_{n+1} = t_n * n(n+z)/((n+k+1)(n+1+z)).
      mpfr_t t, acc, ab;
      mpfr_init2(t, wp);
      mpfr_init2(acc, wp);
      mpfr_init2(ab, wp);
      mpz_class kp1fact = jfact * (k + 1);
      Rational t1(z.den(), kp1fact * (z.den() + z.num()));
      mpfr_set_q(t, t1.raw().get_mpq_t(), MPFR_RNDN);
      mpfr_set(acc, t, MPFR_RNDN);
      mpz_class num, den;
      for (long n = 1; n < n_len; ++n) {
        // The z denominator cancels between n+z and n+1+z, leaving integers.
        num = z.den() * n + z.num();
        num *= n;
        den = z.den() * (n + 1) + z.num();
        den *= (n + k + 1);
        mpfr_mul_z(t, t, num.get_mpz_t(), MPFR_RNDN);
        mpfr_div_z(t, t, den.get_mpz_t(), MPFR_RNDN);
        mpfr_add(acc, acc, t, MPFR_RNDN);
        mpfr_abs(ab, t, MPFR_RNDN);
        mpfr_add(sum_abs.raw(), sum_abs.raw(), ab, MPFR_RNDN);
      }
      mpfr_mul_q(acc, acc, p.raw().get_mpq_t(), MPFR_RNDN);
      mpfr_add(value.raw(), value.raw(), acc, MPFR_RNDN);
      mpfr_abs(ab, acc, MPFR_RNDN);
      mpfr_add(sum_abs.raw(), sum_abs.raw(), ab, MPFR_RNDN);

      // Tail bound |P_{k+1}| * 2 / (k * N^(k+1)), rounded upward throughout.
      mpfr_set_q(bound.raw(), p.raw().get_mpq_t(), MPFR_RNDU);
      mpfr_abs(bound.raw(), bound.raw(), MPFR_RNDU);
      mpfr_mul_ui(bound.raw(), bound.raw(), 2, MPFR_RNDU);
      mpfr_div_ui(bound.raw(), bound.raw(), static_cast<unsigned long>(k), MPFR_RNDU);
      mpfr_ui_pow_ui(t, static_cast<unsigned long>(n_len),
                     static_cast<unsigned long>(k) + 1, MPFR_RNDD);
      mpfr_div(bound.raw(), bound.raw(), t, MPFR_RNDU);
      mpfr_clear(t);
      mpfr_clear(acc);
      mpfr_clear(ab);
    }

    // Rounding allowance: O(N + k) half-ulp roundings at working precision,
    // each scaled by at most the absolute-value mass that flowed through.
    HPReal allowance = pow10(-(ctx.working_digits() - 7), ctx);
    allowance = allowance * (HPReal::from(1L, ctx) + sum_abs);
    HPReal total = bound + allowance;

    if (within(total, HPReal(ctx), target)) {
      return CertifiedValue{value, total};
    }
    // The double-based plan can fall marginally short when z sits very close
    // to an integer; extend the residual and retry.
    if (terminating || attempt >= 3 || n_len >= kMaxResidualTerms) {
      throw accuracy_error("series target of " + std::to_string(target) +
                               " digits was not met by the certified bound",
                           total.str(3));
    }
    n_len = std::min(kMaxResidualTerms, n_len * 2);
  }
}

}  // namespace detail
}  // namespace clausum
