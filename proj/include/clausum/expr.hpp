#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "clausum/errors.hpp"
#include "clausum/hp.hpp"
#include "clausum/rational.hpp"

namespace clausum {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable node of the right-hand-side expression mini-language:
// nonnegative integer and rational literals, pi, sqrt, ln, the four binary
// operators, and unary minus (grammatically allowed at expression starts).
class Expr {
 public:
  enum class Op { int_lit, rat_lit, pi, sqrt_fn, ln_fn, neg, add, sub, mul, div };

  Op op;
  mpz_class ival;      // int_lit
  Rational rval;       // rat_lit
  ExprPtr lhs, rhs;    // unary ops use lhs only

  static ExprPtr int_lit(mpz_class v) {
    return mk(Op::int_lit, std::move(v), {}, nullptr, nullptr);
  }
  static ExprPtr rat_lit(Rational v) {
    return mk(Op::rat_lit, 0, std::move(v), nullptr, nullptr);
  }
  static ExprPtr pi_const() { return mk(Op::pi, 0, {}, nullptr, nullptr); }
  static ExprPtr sqrt_of(ExprPtr a) {
    return mk(Op::sqrt_fn, 0, {}, std::move(a), nullptr);
  }
  static ExprPtr ln_of(ExprPtr a) {
    return mk(Op::ln_fn, 0, {}, std::move(a), nullptr);
  }
  static ExprPtr neg_of(ExprPtr a) {
    return mk(Op::neg, 0, {}, std::move(a), nullptr);
  }
  static ExprPtr add_of(ExprPtr a, ExprPtr b) {
    return mk(Op::add, 0, {}, std::move(a), std::move(b));
  }
  static ExprPtr sub_of(ExprPtr a, ExprPtr b) {
    return mk(Op::sub, 0, {}, std::move(a), std::move(b));
  }
  static ExprPtr mul_of(ExprPtr a, ExprPtr b) {
    return mk(Op::mul, 0, {}, std::move(a), std::move(b));
  }
  static ExprPtr div_of(ExprPtr a, ExprPtr b) {
    return mk(Op::div, 0, {}, std::move(a), std::move(b));
  }

 private:
  static ExprPtr mk(Op op, mpz_class iv, Rational rv, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->ival = std::move(iv);
    e->rval = std::move(rv);
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }
};

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->op != b->op) return false;
  switch (a->op) {
    case Expr::Op::int_lit:
      return a->ival == b->ival;
    case Expr::Op::rat_lit:
      return a->rval == b->rval;
    case Expr::Op::pi:
      return true;
    case Expr::Op::sqrt_fn:
    case Expr::Op::ln_fn:
    case Expr::Op::neg:
      return expr_equal(a->lhs, b->lhs);
    default:
      return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
  }
}

namespace detail {

// Recursive-descent parser for
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := INT | 'pi' | 'ln' '(' expr ')' | 'sqrt' '(' expr ')' | '(' expr ')'
// INT '/' INT inside a term folds into a rational literal at parse time.
struct ExprParser {
  std::string_view s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, i); }

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool take(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!take(c)) fail(std::string("expected '") + c + "'");
  }

  ExprPtr parse_expr() {
    skip_ws();
    ExprPtr acc;
    if (take('-')) {
      acc = Expr::neg_of(parse_term());
    } else {
      acc = parse_term();
    }
    for (;;) {
      skip_ws();
      if (take('+')) {
        acc = Expr::add_of(acc, parse_term());
      } else if (take('-')) {
        acc = Expr::sub_of(acc, parse_term());
      } else {
        return acc;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr acc = parse_factor();
    for (;;) {
      skip_ws();
      if (take('*')) {
        acc = Expr::mul_of(acc, parse_factor());
      } else if (take('/')) {
        ExprPtr g = parse_factor();
        if (acc->op == Expr::Op::int_lit && g->op == Expr::Op::int_lit && g->ival != 0) {
          acc = Expr::rat_lit(Rational(acc->ival, g->ival));
        } else {
          acc = Expr::div_of(acc, g);
        }
      } else {
        return acc;
      }
    }
  }

  ExprPtr parse_factor() {
    skip_ws();
    if (i >= s.size()) fail("unexpected end of expression");
    char c = s[i];
    if (c >= '0' && c <= '9') {
      std::size_t start = i;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
      return Expr::int_lit(mpz_class(std::string(s.substr(start, i - start)), 10));
    }
    if (c == '(') {
      ++i;
      ExprPtr e = parse_expr();
      expect(')');
      return e;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = i;
      while (i < s.size() && s[i] >= 'a' && s[i] <= 'z') ++i;
      std::string name(s.substr(start, i - start));
      if (name == "pi") return Expr::pi_const();
      if (name == "ln" || name == "sqrt") {
        expect('(');
        ExprPtr arg = parse_expr();
        expect(')');
        return name == "ln" ? Expr::ln_of(arg) : Expr::sqrt_of(arg);
      }
      i = start;
      fail("unknown identifier '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

inline int expr_prec(const Expr& e) {
  switch (e.op) {
    case Expr::Op::neg:
    case Expr::Op::add:
    case Expr::Op::sub:
      return 1;
    case Expr::Op::rat_lit:
    case Expr::Op::mul:
    case Expr::Op::div:
      return 2;
    default:
      return 3;
  }
}

// min_prec encodes the syntactic slot: 1 = expression start (leading minus
// legal), 2 = term slot, 3 = factor slot. Anything binding looser than its
// slot gets parentheses, which re-opens an expression-start context.
inline std::string render_node(const Expr& e, int min_prec) {
  std::string out;
  switch (e.op) {
    case Expr::Op::int_lit:
      out = e.ival.get_str();
      break;
    case Expr::Op::rat_lit:
      out = e.rval.num().get_str() + "/" + e.rval.den().get_str();
      break;
    case Expr::Op::pi:
      out = "pi";
      break;
    case Expr::Op::sqrt_fn:
      out = "sqrt(" + render_node(*e.lhs, 1) + ")";
      break;
    case Expr::Op::ln_fn:
      out = "ln(" + render_node(*e.lhs, 1) + ")";
      break;
    case Expr::Op::neg:
      out = "-" + render_node(*e.lhs, 2);
      break;
    case Expr::Op::add:
      out = render_node(*e.lhs, 1) + " + " + render_node(*e.rhs, 2);
      break;
    case Expr::Op::sub:
      out = render_node(*e.lhs, 1) + " - " + render_node(*e.rhs, 2);
      break;
    case Expr::Op::mul:
      out = render_node(*e.lhs, 2) + "*" + render_node(*e.rhs, 3);
      break;
    case Expr::Op::div:
      out = render_node(*e.lhs, 2) + "/" + render_node(*e.rhs, 3);
      break;
  }
  if (expr_prec(e) < min_prec) return "(" + out + ")";
  return out;
}

struct PathGuard {
  std::string& path;
  std::size_t saved;
  PathGuard(std::string& p, const char* seg) : path(p), saved(p.size()) {
    path += '/';
    path += seg;
  }
  ~PathGuard() { path.resize(saved); }
};

inline HPReal eval_node(const Expr& e, const PrecisionContext& ctx, std::string& path) {
  switch (e.op) {
    case Expr::Op::int_lit:
      return HPReal::from(e.ival, ctx);
    case Expr::Op::rat_lit:
      return HPReal::from(e.rval, ctx);
    case Expr::Op::pi:
      return const_pi(ctx);
    case Expr::Op::sqrt_fn: {
      PathGuard g(path, "sqrt.arg");
      HPReal a = eval_node(*e.lhs, ctx, path);
      if (a.sign() < 0)
        throw domain_error("square root of a negative value at node " + path);
      return eval_sqrt(a);
    }
    case Expr::Op::ln_fn: {
      PathGuard g(path, "ln.arg");
      HPReal a = eval_node(*e.lhs, ctx, path);
      if (a.sign() <= 0)
        throw domain_error("logarithm of a nonpositive value at node " + path);
      return eval_ln(a);
    }
    case Expr::Op::neg: {
      PathGuard g(path, "neg.arg");
      return -eval_node(*e.lhs, ctx, path);
    }
    case Expr::Op::add: {
      HPReal a = [&] { PathGuard g(path, "add.lhs"); return eval_node(*e.lhs, ctx, path); }();
      HPReal b = [&] { PathGuard g(path, "add.rhs"); return eval_node(*e.rhs, ctx, path); }();
      return a + b;
    }
    case Expr::Op::sub: {
      HPReal a = [&] { PathGuard g(path, "sub.lhs"); return eval_node(*e.lhs, ctx, path); }();
      HPReal b = [&] { PathGuard g(path, "sub.rhs"); return eval_node(*e.rhs, ctx, path); }();
      return a - b;
    }
    case Expr::Op::mul: {
      HPReal a = [&] { PathGuard g(path, "mul.lhs"); return eval_node(*e.lhs, ctx, path); }();
      HPReal b = [&] { PathGuard g(path, "mul.rhs"); return eval_node(*e.rhs, ctx, path); }();
      return a * b;
    }
    case Expr::Op::div: {
      HPReal a = [&] { PathGuard g(path, "div.lhs"); return eval_node(*e.lhs, ctx, path); }();
      HPReal b = [&] { PathGuard g(path, "div.rhs"); return eval_node(*e.rhs, ctx, path); }();
      // A divisor this small cannot be told apart from an exact zero at the
      // working precision, so the quotient would be meaningless.
      if (b.is_zero() || within(b, HPReal(ctx), ctx.working_digits() - 4))
        throw domain_error(
            "division by a value indistinguishable from zero at node " + path);
      return a / b;
    }
  }
  throw error("unreachable expression op");
}

}  // namespace detail

// Parses the full text as one expression; trailing garbage is an error.
inline ExprPtr ast_parse(std::string_view text) {
  detail::ExprParser p{text, 0};
  ExprPtr e = p.parse_expr();
  p.skip_ws();
  if (p.i != text.size()) p.fail("trailing characters after expression");
  return e;
}

inline std::string ast_render(const ExprPtr& e) {
  if (!e) throw argument_error("cannot render a null expression");
  return detail::render_node(*e, 1);
}

inline HPReal ast_eval(const ExprPtr& e, const PrecisionContext& ctx) {
  if (!e) throw argument_error("cannot evaluate a null expression");
  std::string path;
  return detail::eval_node(*e, ctx, path);
}

}  // namespace clausum
