// Runs the full verification suite at 30 digits and prints the text report:
// every new/corrected identity must pass, every erroneous one must be
// refuted by more than the fail floor.

#include <iostream>

#include "clausum/clausum.hpp"

int main() {
  using namespace clausum;
  PrecisionContext ctx(30);
  std::vector<VerifyReport> reports = verify_all(ctx);
  std::cout << verify_report_text(reports);
  return all_verdicts_expected(reports) ? 0 : 1;
}
