// Acceptance gate: exercises the headline guarantees end to end and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "clausum/clausum.hpp"
#include "decimal_fixture.hpp"

namespace {

using namespace clausum;
using clausum::testing::hp_dec;

int g_failures = 0;
bool g_ok = true;
std::string g_detail;

void check(bool ok, const std::string& what) {
  if (!ok && g_ok) {
    g_ok = false;
    g_detail = what;
  }
}

template <typename Fn>
void criterion(int n, const char* title, Fn&& body) {
  g_ok = true;
  g_detail.clear();
  try {
    body();
  } catch (const std::exception& e) {
    check(false, std::string("exception: ") + e.what());
  }
  if (g_ok) {
    std::printf("criterion %d: pass  %s\n", n, title);
  } else {
    std::printf("criterion %d: FAIL  %s [%s]\n", n, title, g_detail.c_str());
    ++g_failures;
  }
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1,
            "full database verifies at 50 digits: 23 genuine records within 1e-40, "
            "3 refuted, under a minute",
            [] {
              auto t0 = std::chrono::steady_clock::now();
              PrecisionContext ctx(50);
              std::vector<VerifyReport> reps = verify_all(ctx, VerifyOptions{});
              double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                .count();
              check(reps.size() == 26, "expected 26 records");
              HPReal zero = HPReal::zero(ctx);
              int genuine = 0;
              for (const VerifyReport& r : reps) {
                if (r.status == TheoremStatus::erroneous) {
                  check(r.verdict == Verdict::expected_fail, "record " + r.id + " not refuted");
                  continue;
                }
                ++genuine;
                check(r.verdict == Verdict::pass, "record " + r.id + " did not pass");
                check(within(r.diff_closed, zero, 40),
                      "record " + r.id + " misses the 1e-40 budget");
              }
              check(genuine == 23, "expected 23 genuine records");
              check(all_verdicts_expected(reps), "unexpected verdict in the report");
              check(secs < 60.0, "runtime over budget: " + std::to_string(secs) + " s");
            });

  criterion(2,
            "erroneous records are refuted with gaps > 0.05 matching the frozen "
            "fixtures to 3 significant figures",
            [] {
              PrecisionContext ctx(50);
              const struct {
                const char* id;
                const char* gap;
              } kGaps[] = {{"5.1", "3.383354739878289822238418"},
                           {"5.2", "4.063111924150799724363495"},
                           {"5.3", "4.534498410585544626485196"}};
              HPReal floor = HPReal::from(Rational(1, 20), ctx);
              for (const auto& g : kGaps) {
                VerifyReport rep = verify_one(g.id, ctx);
                check(rep.verdict == Verdict::expected_fail,
                      std::string("record ") + g.id + " not refuted");
                check(floor < rep.diff_closed,
                      std::string("record ") + g.id + " gap not above 0.05");
                check(within(rep.diff_closed, hp_dec(g.gap, ctx), 2),
                      std::string("record ") + g.id + " gap drifted from its fixture");
              }
            });

  criterion(3,
            "independent replay: psi(1/10) equals its radical-log expression to 1e-40 "
            "and feeds record 4.13 through the master identity",
            [] {
              PrecisionContext ctx(60);
              HPReal psi_val = cf_eval(psi_closed(Rational(1, 10), PsiRoute::murty), ctx);
              ExprPtr replay = ast_parse(
                  "-ln(20) - (sqrt(10 + 2*sqrt(5))/(sqrt(5) - 1))*pi/2"
                  " + (1/2)*(sqrt(5)*ln(sqrt(5) - 2) - ln(sqrt(5)))");
              check(within(psi_val + const_gamma(ctx), ast_eval(replay, ctx), 40),
                    "psi(1/10) disagrees with the replayed expression");

              const TheoremRecord& rec = find_theorem("4.13");
              check(rec.c == Rational(11, 10), "record 4.13 should have c = 11/10");
              // Master identity at c = 11/10, z = 1/10: F = 11 * (psi(1/10) + gamma + 10).
              HPReal f = (psi_val + const_gamma(ctx) + Rational(10)) * Rational(11);
              check(within(f, ast_eval(rec.rhs, ctx), 40),
                    "master identity does not reproduce the 4.13 closed form");
            });

  criterion(4,
            "murty and gauss closed forms agree to 1e-45 for every reduced p/q "
            "with q <= 60",
            [] {
              PrecisionContext ctx(50);
              int pairs = 0;
              for (long q = 2; q <= 60; ++q) {
                for (long p = 1; p < q; ++p) {
                  if (std::gcd(p, q) != 1) continue;
                  HPReal m = cf_eval(psi_murty(p, q), ctx);
                  HPReal g = cf_eval(psi_gauss(p, q), ctx);
                  if (!within(m, g, 45)) {
                    check(false,
                          "routes disagree at " + std::to_string(p) + "/" + std::to_string(q));
                    return;
                  }
                  ++pairs;
                }
              }
              check(pairs > 1000, "pair sweep unexpectedly small");
            });

  criterion(5,
            "certified series match closed forms: 50 random c in (-3,5) for the sum, "
            "100 random rationals for psi, eps <= 1e-10",
            [] {
              std::mt19937_64 rng(0x20260819ull);
              PrecisionContext ctx(30);
              HPReal eps_cap = HPReal::from(Rational(1, 10000000000L), ctx);

              std::uniform_int_distribution<long> den(1, 24);
              int done = 0;
              while (done < 50) {
                long q = den(rng);
                std::uniform_int_distribution<long> num(-3 * q + 1, 5 * q - 1);
                Rational c(num(rng), q);
                if (c == Rational(0) || c == Rational(-1) || c == Rational(-2) ||
                    c == Rational(1))
                  continue;
                CertifiedValue s = series_3f2(c, ctx, 10);
                check(s.error_bound <= eps_cap, "series bound too loose at c = " + c.str());
                check(within(s.value, cf_eval(closed_3f2(c), ctx), 9),
                      "series and closed form disagree at c = " + c.str());
                ++done;
              }

              std::uniform_int_distribution<long> pd(1, 20);
              std::uniform_int_distribution<long> pn(-200, 200);
              done = 0;
              while (done < 100) {
                Rational r(pn(rng), pd(rng));
                if (r.is_integer() && r.sign() <= 0) continue;
                CertifiedValue s = psi_series(r, ctx, 10);
                check(s.error_bound <= eps_cap, "psi series bound too loose at " + r.str());
                check(within(s.value, cf_eval(psi_closed(r), ctx), 9),
                      "psi series and closed form disagree at " + r.str());
                ++done;
              }
            });

  criterion(6,
            "forced values: closed sum at c = 2 is the exact unit atom 2, c = 1 gives "
            "pi^2/6, psi(1) = -gamma with the 39 reference digits",
            [] {
              PrecisionContext ctx(50);
              ClosedForm two = closed_3f2(Rational(2));
              ClosedForm expect_two;
              expect_two.add_unit(Rational(2));
              check(two == expect_two && two.term_count() == 1,
                    "closed sum at c = 2 is not the single unit atom 2");

              HPReal basel = basel_case(ctx);
              HPReal pi = const_pi(ctx);
              check(within(basel, pi * pi / Rational(6), 48), "Basel value drifted");
              CertifiedValue s = series_3f2(Rational(1), ctx, 30);
              check(within(s.value, basel, 29), "series route misses pi^2/6 at c = 1");

              ClosedForm psi1 = psi_closed(Rational(1));
              ClosedForm expect_psi1;
              expect_psi1.add_gamma(Rational(-1));
              check(psi1 == expect_psi1, "psi(1) is not exactly -gamma");
              check(const_gamma(ctx).str(39) == "0.577215664901532860606512090082402431042",
                    "gamma reference digits drifted");
            });

  criterion(7,
            "structural invariants: gamma cancels in every closed sum, canonical "
            "forms are idempotent, the database round-trips syntactically",
            [] {
              // Gamma must cancel exactly in the 3F2 closed form, both routes,
              // over every database c and a denominator sweep around it.
              std::vector<Rational> cs;
              for (const TheoremRecord& rec : theorem_database()) cs.push_back(rec.c);
              for (long k = -17; k <= 29; ++k) {
                Rational c(k, 6);
                if (c == Rational(0) || c == Rational(-1) || c == Rational(-2) ||
                    c == Rational(1))
                  continue;
                cs.push_back(c);
              }
              for (const Rational& c : cs) {
                for (PsiRoute route : {PsiRoute::murty, PsiRoute::gauss}) {
                  ClosedForm cf = closed_3f2(c, route);
                  for (const auto& [atom, coeff] : cf.terms())
                    check(atom.kind != Atom::Kind::euler_gamma,
                          "gamma atom survives at c = " + c.str());
                }
              }

              // Re-inserting every stored term through the canonicalizing API
              // must reproduce the form exactly.
              auto rebuild = [](const ClosedForm& cf) {
                ClosedForm out;
                for (const auto& [atom, coeff] : cf.terms()) {
                  switch (atom.kind) {
                    case Atom::Kind::unit:
                      out.add_unit(coeff);
                      break;
                    case Atom::Kind::euler_gamma:
                      out.add_gamma(coeff);
                      break;
                    case Atom::Kind::pi_cot:
                      out.add_pi_cot(atom.a, coeff);
                      break;
                    case Atom::Kind::cos_ln_sin:
                      out.add_cos_ln_sin(atom.a, atom.b, coeff);
                      break;
                    case Atom::Kind::ln_nat:
                      out.add_ln_nat(atom.n, coeff);
                      break;
                  }
                }
                return out;
              };
              for (const Rational& c : cs) {
                ClosedForm cf = closed_3f2(c);
                check(rebuild(cf) == cf, "canonical form not idempotent at c = " + c.str());
                ClosedForm pf = psi_closed(c - Rational(1), PsiRoute::gauss);
                check(rebuild(pf) == pf,
                      "canonical psi form not idempotent at " + (c - Rational(1)).str());
              }

              // Database round-trip: reloading the embedded table reproduces the
              // records, and each right-hand side re-parses from its rendering.
              const std::vector<TheoremRecord>& db = theorem_database();
              std::vector<TheoremRecord> again = load_theorem_table(kTheoremTableText);
              check(again.size() == db.size(), "reloaded table size differs");
              for (std::size_t i = 0; i < db.size(); ++i) {
                check(again[i].id == db[i].id && again[i].c == db[i].c &&
                          again[i].status == db[i].status &&
                          again[i].rhs_text == db[i].rhs_text,
                      "reloaded record " + db[i].id + " differs");
                check(expr_equal(db[i].rhs, ast_parse(ast_render(db[i].rhs))),
                      "record " + db[i].id + " rhs does not round-trip");
              }
            });

  if (g_failures == 0) {
    std::printf("acceptance: all 7 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
