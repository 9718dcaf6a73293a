#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "clausum/errors.hpp"
#include "clausum/hp.hpp"
#include "clausum/rational.hpp"

namespace clausum {

// One basis element of the exact closed-form algebra. Canonical field ranges
// (enforced by ClosedForm's insertion methods, assumed everywhere else):
//   unit         constant 1
//   euler_gamma  Euler-Mascheroni constant
//   pi_cot       pi * cot(pi * a),                     a in (0, 1/2)
//   cos_ln_sin   cos(2 pi a) * ln(sin(pi b)),          a in [0, 1/2] \ {1/4},
//                                                      b in (0, 1/2)
//   ln_nat       ln(n),                                integer n >= 2
struct Atom {
  enum class Kind { unit, euler_gamma, pi_cot, cos_ln_sin, ln_nat };

  Kind kind = Kind::unit;
  Rational a;
  Rational b;
  mpz_class n;

  friend bool operator==(const Atom& x, const Atom& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b && x.n == y.n;
  }
};

struct AtomLess {
  bool operator()(const Atom& x, const Atom& y) const {
    if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind);
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.n < y.n;
  }
};

// Numeric value of a canonical atom.
inline HPReal eval_atom(const Atom& at, const PrecisionContext& ctx) {
  switch (at.kind) {
    case Atom::Kind::unit:
      return HPReal::from(1L, ctx);
    case Atom::Kind::euler_gamma:
      return const_gamma(ctx);
    case Atom::Kind::pi_cot:
      return const_pi(ctx) * eval_cot_pi(Angle(at.a), ctx);
    case Atom::Kind::cos_ln_sin:
      return eval_cos_2pi(Angle(at.a), ctx) * eval_ln(eval_sin_pi(Angle(at.b), ctx));
    case Atom::Kind::ln_nat:
      return eval_ln(at.n, ctx);
  }
  throw error("unreachable atom kind");
}

// Exact linear combination of atoms with rational coefficients. Insertion
// canonicalizes arguments and drops atoms whose value is identically zero, so
// two ClosedForms built from the same mathematical expression compare equal
// term by term.
class ClosedForm {
 public:
  ClosedForm() = default;

  static ClosedForm zero() { return ClosedForm(); }

  void add_unit(const Rational& c) { accumulate(Atom{Atom::Kind::unit, {}, {}, 0}, c); }

  void add_gamma(const Rational& c) {
    accumulate(Atom{Atom::Kind::euler_gamma, {}, {}, 0}, c);
  }

  // c * pi * cot(pi * theta); theta is reduced mod 1. Integer theta is a pole.
  // cot(pi/2) = 0 drops; theta > 1/2 folds to 1 - theta with negated sign.
  void add_pi_cot(const Rational& theta, const Rational& c) {
    Rational t = theta.frac();
    if (t.is_zero()) throw pole_error("pi*cot(pi x) pole at integer x");
    Rational coeff = c;
    const Rational half(1, 2);
    if (t == half) return;
    if (t > half) {
      t = Rational(1) - t;
      coeff = -coeff;
    }
    accumulate(Atom{Atom::Kind::pi_cot, t, {}, 0}, coeff);
  }

  // c * cos(2 pi alpha) * ln(sin(pi beta)); both angles reduced mod 1.
  // beta integer makes ln sin singular; beta folds by sin(pi(1-b)) = sin(pi b)
  // and drops at 1/2 (ln 1 = 0); alpha folds by cosine evenness and drops at
  // 1/4 (cos(pi/2) = 0).
  void add_cos_ln_sin(const Rational& alpha, const Rational& beta, const Rational& c) {
    const Rational half(1, 2), quarter(1, 4), one(1);
    Rational b = beta.frac();
    if (b.is_zero()) throw domain_error("ln(sin(pi x)) singular at integer x");
    if (b > half) b = one - b;
    if (b == half) return;
    Rational a = alpha.frac();
    if (a > half) a = one - a;
    if (a == quarter) return;
    accumulate(Atom{Atom::Kind::cos_ln_sin, a, b, 0}, c);
  }

  // c * ln(n) for integer n >= 1; ln(1) = 0 drops. n stays unfactored.
  void add_ln_nat(const mpz_class& n, const Rational& c) {
    if (n < 1) throw argument_error("ln(n) atom needs a positive integer");
    if (n == 1) return;
    accumulate(Atom{Atom::Kind::ln_nat, {}, {}, n}, c);
  }

  Rational coeff(const Atom& at) const {
    auto it = terms_.find(at);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational unit_coeff() const { return coeff(Atom{Atom::Kind::unit, {}, {}, 0}); }
  Rational gamma_coeff() const {
    return coeff(Atom{Atom::Kind::euler_gamma, {}, {}, 0});
  }

  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Atom, Rational, AtomLess>& terms() const { return terms_; }

  friend bool operator==(const ClosedForm& x, const ClosedForm& y) {
    return x.terms_ == y.terms_;
  }

  friend ClosedForm cf_add(const ClosedForm& x, const ClosedForm& y) {
    ClosedForm r = x;
    for (const auto& [at, c] : y.terms_) r.accumulate(at, c);
    return r;
  }

  friend ClosedForm cf_scale(const ClosedForm& x, const Rational& s) {
    ClosedForm r;
    if (s.is_zero()) return r;
    for (const auto& [at, c] : x.terms_) r.terms_.emplace(at, c * s);
    return r;
  }

  HPReal eval(const PrecisionContext& ctx) const {
    HPReal sum(ctx);
    for (const auto& [at, c] : terms_) sum = sum + eval_atom(at, ctx) * c;
    return sum;
  }

  // Deterministic human-readable rendering, e.g. "-gamma - ln(4) + 1/2*pi*cot(pi*1/3)".
  std::string render() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [at, c] : terms_) {
      Rational mag = c.abs();
      bool neg = c.sign() < 0;
      std::string body = atom_str(at);
      std::string term;
      if (at.kind == Atom::Kind::unit) {
        term = mag.str();
      } else if (mag == Rational(1)) {
        term = body;
      } else {
        term = mag.str() + "*" + body;
      }
      if (first) {
        out += (neg ? "-" : "") + term;
        first = false;
      } else {
        out += (neg ? " - " : " + ") + term;
      }
    }
    return out;
  }

 private:
  static std::string atom_str(const Atom& at) {
    switch (at.kind) {
      case Atom::Kind::unit:
        return "1";
      case Atom::Kind::euler_gamma:
        return "gamma";
      case Atom::Kind::pi_cot:
        return "pi*cot(pi*" + at.a.str() + ")";
      case Atom::Kind::cos_ln_sin:
        return "cos(2*pi*" + at.a.str() + ")*ln(sin(pi*" + at.b.str() + "))";
      case Atom::Kind::ln_nat:
        return "ln(" + at.n.get_str() + ")";
    }
    return "?";
  }

  void accumulate(const Atom& at, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(at, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Atom, Rational, AtomLess> terms_;
};

inline HPReal cf_eval(const ClosedForm& f, const PrecisionContext& ctx) {
  return f.eval(ctx);
}

}  // namespace clausum
