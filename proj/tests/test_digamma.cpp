#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <vector>

#include "clausum/digamma.hpp"
#include "decimal_fixture.hpp"

using namespace clausum;
using clausum::testing::hp_dec;

namespace {

const PrecisionContext kCtx(60);

struct PsiFixture {
  Rational r;
  const char* value;
};

// Reference digamma values at reduced rationals (45 significant digits).
const PsiFixture kPsiFixtures[] = {
    {Rational(1, 2), "-1.96351002602142347944097633299875556719315960"},
    {Rational(1, 3), "-3.13203378002080632299641907428726885415542830"},
    {Rational(2, 3), "-1.31823441578658847240234081664511312187136205"},
    {Rational(1, 4), "-4.22745353337626540808953014609668357736724444"},
    {Rational(3, 4), "-1.08586087978647216962688676281718069317007504"},
    {Rational(1, 6), "-6.33212750537491479242496157484577772259049481"},
    {Rational(5, 6), "-0.890729412672261240642726801919310525738296069"},
    {Rational(1, 10), "-10.4237549404110767951682162190100254042916426"},
    {Rational(5, 2), "0.703156640645243187225690333667911099473507062"},
    {Rational(-5, 2), "1.10315664064524318722569033366791109947350706"},
    {Rational(-1, 3), "1.68176558421341152759765918335488687812863795"},
};

}  // namespace

TEST_CASE("closed forms match reference values on both routes") {
  for (const auto& fx : kPsiFixtures) {
    HPReal ref = hp_dec(fx.value, kCtx);
    REQUIRE(within(cf_eval(psi_closed(fx.r, PsiRoute::murty), kCtx), ref, 42));
    REQUIRE(within(cf_eval(psi_closed(fx.r, PsiRoute::gauss), kCtx), ref, 42));
  }
}

TEST_CASE("unit argument collapses to minus gamma") {
  ClosedForm expected;
  expected.add_gamma(Rational(-1));
  REQUIRE(psi_closed(Rational(1)) == expected);
  REQUIRE(psi_closed(Rational(1), PsiRoute::gauss) == expected);
  REQUIRE(within(cf_eval(psi_closed(Rational(1)), kCtx), -const_gamma(kCtx), 60));
}

TEST_CASE("integer arguments carry exact harmonic numbers") {
  ClosedForm psi4 = psi_closed(Rational(4));
  REQUIRE(psi4.gamma_coeff() == Rational(-1));
  REQUIRE(psi4.unit_coeff() == Rational(11, 6));  // 1 + 1/2 + 1/3
  REQUIRE(psi4.term_count() == 2);
}

TEST_CASE("half-integer shifts stay exact") {
  // psi(5/2) = -gamma - 2 ln 2 + 8/3, built from psi(1/2) by two recurrence steps.
  ClosedForm expected;
  expected.add_gamma(Rational(-1));
  expected.add_ln_nat(mpz_class(4), Rational(-1));
  expected.add_unit(Rational(8, 3));
  REQUIRE(psi_closed(Rational(5, 2)) == expected);
}

TEST_CASE("the two finite forms differ syntactically but agree in value") {
  ClosedForm murty = psi_murty(mpz_class(1), mpz_class(2));
  ClosedForm expected;
  expected.add_gamma(Rational(-1));
  expected.add_ln_nat(mpz_class(4), Rational(-1));
  REQUIRE(murty == expected);

  ClosedForm gauss = psi_gauss(mpz_class(1), mpz_class(2));
  REQUIRE_FALSE(gauss == murty);
  REQUIRE(within(gauss.eval(kCtx), murty.eval(kCtx), 58));
}

TEST_CASE("routes agree for every reduced fraction with small denominator") {
  for (long q = 2; q <= 25; ++q) {
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      HPReal m = cf_eval(psi_murty(mpz_class(p), mpz_class(q)), kCtx);
      HPReal g = cf_eval(psi_gauss(mpz_class(p), mpz_class(q)), kCtx);
      REQUIRE(within(m, g, 45));
    }
  }
}

TEST_CASE("recurrence steps are exact at the atom level") {
  for (const Rational& r : {Rational(1, 3), Rational(7, 5), Rational(-5, 3),
                            Rational(9, 4), Rational(-13, 10)}) {
    ClosedForm stepped = psi_closed(r);
    ClosedForm unit_step;
    unit_step.add_unit(Rational(1) / r);
    REQUIRE(psi_closed(r + Rational(1)) == cf_add(stepped, unit_step));
  }
}

TEST_CASE("reflection identity holds numerically") {
  // psi(1 - x) - psi(x) = pi cot(pi x)
  for (const Rational& x : {Rational(1, 5), Rational(3, 8), Rational(1, 12)}) {
    HPReal lhs = cf_eval(psi_closed(Rational(1) - x), kCtx) -
                 cf_eval(psi_closed(x), kCtx);
    HPReal rhs = const_pi(kCtx) * eval_cot_pi(Angle(x), kCtx);
    REQUIRE(within(lhs, rhs, 55));
  }
}

TEST_CASE("series route certifies against the closed route") {
  for (const auto& fx : kPsiFixtures) {
    CertifiedValue s = psi_series(fx.r, kCtx, 40);
    REQUIRE(within(s.error_bound, HPReal(kCtx), 40));
    REQUIRE(within(s.value, cf_eval(psi_closed(fx.r), kCtx), 39));
    REQUIRE(within(s.value, hp_dec(fx.value, kCtx), 39));
  }
}

TEST_CASE("poles and preconditions are enforced") {
  REQUIRE_THROWS_AS(psi_closed(Rational(0)), pole_error);
  REQUIRE_THROWS_AS(psi_closed(Rational(-7)), pole_error);
  REQUIRE_THROWS_AS(psi_series(Rational(0), kCtx, 20), pole_error);
  REQUIRE_THROWS_AS(psi_series(Rational(-3), kCtx, 20), pole_error);
  REQUIRE_THROWS_AS(psi_series(Rational(1, 2), kCtx, 50), argument_error);

  REQUIRE_THROWS_AS(psi_murty(mpz_class(2), mpz_class(4)), argument_error);
  REQUIRE_THROWS_AS(psi_murty(mpz_class(0), mpz_class(3)), argument_error);
  REQUIRE_THROWS_AS(psi_murty(mpz_class(3), mpz_class(3)), argument_error);
  REQUIRE_THROWS_AS(psi_murty(mpz_class(5), mpz_class(3)), argument_error);
  REQUIRE_THROWS_AS(psi_gauss(mpz_class(4), mpz_class(6)), argument_error);

  REQUIRE_THROWS_AS(psi_closed(Rational(1000001L)), argument_error);
  REQUIRE_THROWS_AS(psi_closed(Rational(2000003, 2)), argument_error);
  REQUIRE_THROWS_AS(psi_closed(Rational(-2000003, 2)), argument_error);
}
