// Prints exact closed forms of psi at a few rational points, by both
// assembly routes, together with 40-digit values and the certified series
// cross-check.

#include <iostream>

#include "clausum/clausum.hpp"

int main() {
  using namespace clausum;
  PrecisionContext ctx(40);

  for (const char* text : {"1/2", "1/3", "2/3", "1/4", "1/10", "-3/2", "7/2"}) {
    Rational r = make_rational(text);
    ClosedForm murty = psi_closed(r, PsiRoute::murty);
    ClosedForm gauss = psi_closed(r, PsiRoute::gauss);
    CertifiedValue series = psi_series(r, ctx, 20);

    std::cout << "psi(" << r.str() << ")\n";
    std::cout << "  murty : " << murty.render() << "\n";
    std::cout << "  gauss : " << gauss.render() << "\n";
    std::cout << "  value : " << cf_eval(murty, ctx).str() << "\n";
    std::cout << "  series: " << series.value.str() << "  (eps <= "
              << series.error_bound.str(3) << ")\n\n";
  }
  return 0;
}
