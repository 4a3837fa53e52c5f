#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qdisc {

// Dense univariate polynomial in q with arbitrary-precision integer
// coefficients. coeffs_[i] is the coefficient of q^i; the top coefficient is
// never zero, and the zero polynomial has no coefficients at all.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(long c);  // NOLINT: constants convert implicitly
  IntPolynomial(const mpz_class& c);  // NOLINT

  // c * q^exponent
  static IntPolynomial monomial(int exponent, const mpz_class& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Exponent of the lowest nonzero term; 0 for the zero polynomial.
  int low_degree() const;

  const mpz_class& coeff(int exponent) const;
  const mpz_class& leading() const { return coeffs_.back(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  // gcd of the coefficients, non-negative.
  mpz_class content() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial scaled(const mpz_class& c) const;
  // Multiply by q^k (k >= 0) or divide by q^{-k} (k < 0, must be exact).
  IntPolynomial shifted(int k) const;
  // Exact division of every coefficient by c.
  IntPolynomial divexact(const mpz_class& c) const;

  bool operator==(const IntPolynomial& o) const = default;

  mpq_class eval(const mpq_class& q0) const;
  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

// Exact quotient a / b in Z[q]; b must divide a.
IntPolynomial divexact(const IntPolynomial& a, const IntPolynomial& b);

// Greatest common divisor in Z[q], with positive leading coefficient.
// gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace qdisc
