#pragma once

#include <gmpxx.h>

#include <string>

#include "qdisc/polynomial.hpp"

namespace qdisc {

// An element of the rational function field Q(q).
//
// Canonical form: numerator and denominator are coprime in Z[q] (content
// included) and the denominator has a positive leading coefficient. Zero is
// 0/1. Two scalars are equal iff their canonical forms are identical, so
// operator== is structural.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT
  Scalar(const mpz_class& c) : num_(c), den_(1) {}  // NOLINT
  Scalar(const mpq_class& c);  // NOLINT
  // Throws DivisionByZero when den is zero.
  Scalar(IntPolynomial num, IntPolynomial den);

  static Scalar q() { return q_power(1); }
  // q^n for any integer n.
  static Scalar q_power(int n);

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  // True for c * q^n with c a nonzero rational.
  bool is_monomial() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Throws DivisionByZero on zero.
  Scalar inv() const;
  Scalar pow(int n) const;

  bool operator==(const Scalar& o) const = default;

  // Exact value at q = q0; throws PoleError if the denominator vanishes there.
  mpq_class eval_at(const mpq_class& q0) const;

  // Parseable text, e.g. "(q^4 + 1)/(q^2 + 1)" or "-2*q^3".
  std::string to_string() const;
  // True when to_string() needs parentheses as a factor of a product.
  bool needs_parens() const;

 private:
  void normalize();
  IntPolynomial num_;
  IntPolynomial den_;
};

Scalar add(const Scalar& a, const Scalar& b);
Scalar sub(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
Scalar neg(const Scalar& a);
Scalar div(const Scalar& a, const Scalar& b);
Scalar inv(const Scalar& b);

// The q-integer [n]_{q^m} = (q^{mn} - 1)/(q^m - 1) for n >= 1, m != 0.
Scalar q_int(int n, int m);

mpq_class eval_at(const Scalar& a, const mpq_class& q0);

}  // namespace qdisc
