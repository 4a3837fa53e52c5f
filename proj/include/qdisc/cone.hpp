#pragma once

#include <string>
#include <vector>

#include "qdisc/calculus.hpp"
#include "qdisc/report.hpp"

namespace qdisc {

// The quantum cone of order N: disc elements whose Z-degree is a multiple
// of N, generated by x and y = z^N. N = 1 would be the disc itself.
class ConeParams {
 public:
  // Throws DomainError for n < 2.
  explicit ConeParams(int n);
  int order() const { return n_; }

 private:
  int n_;
};

// Polynomial in x with coefficients in Q(q). Dense; the top coefficient is
// never zero.
class PolyX {
 public:
  PolyX() = default;
  explicit PolyX(std::vector<Scalar> coeffs);
  PolyX(const Scalar& c);  // NOLINT
  static PolyX x() { return PolyX({Scalar(0), Scalar(1)}); }
  // 1 - c x
  static PolyX linear(const Scalar& c) { return PolyX({Scalar(1), -c}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& leading() const { return coeffs_.back(); }
  Scalar coeff(int e) const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  PolyX operator-() const;
  PolyX& operator+=(const PolyX& o);
  PolyX& operator-=(const PolyX& o);
  friend PolyX operator+(PolyX a, const PolyX& b) { return a += b; }
  friend PolyX operator-(PolyX a, const PolyX& b) { return a -= b; }
  friend PolyX operator*(const PolyX& a, const PolyX& b);
  PolyX scaled(const Scalar& c) const;
  PolyX monic() const;

  bool operator==(const PolyX&) const = default;

  // Sum of c_k x^k in the disc algebra.
  DiscElement to_disc() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

struct DivMod {
  PolyX quotient;
  PolyX remainder;
};
// Throws DivisionByZero for a zero divisor.
DivMod divmod(const PolyX& a, const PolyX& b);

struct ExtGcd {
  PolyX g;  // monic
  PolyX a;
  PolyX b;  // a p + b r = g
};
// Extended Euclidean algorithm over Q(q)[x]. Throws DomainError if both
// inputs are zero.
ExtGcd ext_gcd_x(const PolyX& p, const PolyX& r);

bool is_cone_element(const DiscElement& a, const ConeParams& cone);
bool is_cone_one_form(const OneForm& nu, const ConeParams& cone);
bool is_cone_two_form(const TwoForm& w, const ConeParams& cone);

// y = z^N and y* = z*^N.
DiscElement cone_y(const ConeParams& cone);
DiscElement cone_y_star(const ConeParams& cone);

// x y = q^{2N} y x,  y y* = prod_{l=0}^{N-1} (1 - q^{-2l} x),
// y* y = prod_{l=1}^{N} (1 - q^{2l} x).
Report check_cone_relations(const ConeParams& cone);

// dy = ([N]_{q^2} - q^{4-2N} [N]_{q^4} x) z^{N-2} w, from the closed form.
OneForm dy_formula(const ConeParams& cone);
// Closed-form x-coefficients of y* dy and dy y* as multiples of z*^2 w.
PolyX ystar_dy_coefficient(const ConeParams& cone);
PolyX dy_ystar_coefficient(const ConeParams& cone);

// A certificate that `target` lies in the calculus restricted to the cone:
// a(x) first + b(x) second = target, where first and second are built from
// cone elements and their differentials.
struct BezoutWitness {
  PolyX p;  // first = p(x) * shape
  PolyX r;  // second = r(x) * shape
  PolyX a;
  PolyX b;
  OneForm first;
  OneForm second;
  OneForm target;
};

// z*^2 w from y* dy and dy y*. Throws VerificationFailure if the
// combination does not reproduce z*^2 w exactly.
BezoutWitness witness_zstar2_omega(const ConeParams& cone);
// z^{N-2} w from (z*^2 w) y and y (z*^2 w).
BezoutWitness witness_zN2_omega(const ConeParams& cone);
// Checks wedge(z^2 w*, z*^2 w) = -q^2 v and returns the product. Throws
// VerificationFailure on mismatch.
TwoForm witness_volume(const ConeParams& cone);

// True when q^{2k}(q^{2N}+1) != q^2 + 1 in Q(q) for every k in
// [-2N+2, -N-1] and [2, N-1].
bool coprimality_criterion_holds(int n);

// Every identity and certificate for one cone order.
void verify_cone(const ConeParams& cone, Report& report);

}  // namespace qdisc
