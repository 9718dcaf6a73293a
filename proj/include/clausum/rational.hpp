#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

#include "clausum/errors.hpp"

namespace clausum {

// Exact rational number, always kept canonical (reduced, positive
// denominator). Thin wrapper over GMP's mpq_class so the rest of the library
// never touches raw GMP types.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors int
  Rational(long n, long d) {
    if (d == 0) throw argument_error("rational denominator is zero");
    q_ = mpq_class(n);
    q_ /= d;
  }
  explicit Rational(const mpz_class& n) : q_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw argument_error("rational denominator is zero");
    mpz_set(mpq_numref(q_.get_mpq_t()), n.get_mpz_t());
    mpz_set(mpq_denref(q_.get_mpq_t()), d.get_mpz_t());
    mpq_canonicalize(q_.get_mpq_t());
  }
  explicit Rational(const mpq_class& q) : q_(q) {
    mpq_canonicalize(q_.get_mpq_t());
  }

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  // Largest integer not exceeding the value.
  mpz_class floor() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return f;
  }

  // Fractional part, in [0, 1).
  Rational frac() const { return *this - Rational(floor()); }

  Rational operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
  }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw argument_error("division of rationals by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.q_ != b.q_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.q_ < b.q_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.q_ <= b.q_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.q_ > b.q_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.q_ >= b.q_;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const { return q_.get_d(); }

  // "p/q", or just "p" for integers.
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

 private:
  mpq_class q_;
};

// Parses "p", "-p", "p/q" or "-p/q" (ASCII digits, optional spaces around
// tokens are not accepted; trim first if needed).
inline Rational make_rational(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> void { throw parse_error(msg, i); };
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  std::size_t num_start = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == num_start) fail("expected digits in rational literal");
  mpz_class num(std::string(text.substr(num_start, i - num_start)), 10);
  mpz_class den(1);
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t den_start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == den_start) fail("expected digits after '/' in rational literal");
    den = mpz_class(std::string(text.substr(den_start, i - den_start)), 10);
  }
  if (i != text.size()) fail("trailing characters after rational literal");
  if (den == 0) throw argument_error("rational denominator is zero");
  if (neg) num = -num;
  return Rational(num, den);
}

// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, unsigned long n) {
  Rational r(1);
  Rational f = a;
  for (unsigned long i = 0; i < n; ++i) {
    r *= f;
    f += Rational(1);
  }
  return r;
}

// An angle as a fraction of a full turn, normalized into [0, 1).
class Angle {
 public:
  explicit Angle(const Rational& turns) : value_(turns.frac()) {}
  const Rational& value() const { return value_; }

 private:
  Rational value_;
};

inline Angle normalize_angle(const Rational& turns) { return Angle(turns); }

}  // namespace clausum
