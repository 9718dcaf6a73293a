#pragma once

#include <string>
#include <string_view>

#include "clausum/hp.hpp"
#include "clausum/rational.hpp"

namespace clausum::testing {

// Exact read of a decimal fixture string like "-10.42375494041107679516" into
// an HPReal via the rational digits/10^k, so the only error versus the true
// constant is the fixture's own final-digit rounding.
inline HPReal hp_dec(std::string_view s, const PrecisionContext& ctx) {
  bool neg = !s.empty() && s[0] == '-';
  if (neg) s.remove_prefix(1);
  std::string digits;
  std::size_t frac = 0;
  bool seen_dot = false;
  for (char c : s) {
    if (c == '.') {
      seen_dot = true;
      continue;
    }
    digits += c;
    if (seen_dot) ++frac;
  }
  mpz_class n(digits, 10);
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, static_cast<unsigned long>(frac));
  Rational r(n, d);
  if (neg) r = -r;
  return HPReal::from(r, ctx);
}

}  // namespace clausum::testing
