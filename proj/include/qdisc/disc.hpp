#pragma once

#include <compare>
#include <map>
#include <string>

#include "qdisc/scalar.hpp"

namespace qdisc {

// Basis monomial x^k z^l of the quantum disc algebra; l < 0 stands for
// (z*)^{-l}. Its Z-degree is l.
struct Monomial {
  int k = 0;
  int l = 0;
  auto operator<=>(const Monomial&) const = default;
};

// An element of the quantum disc algebra in normal form: a finite
// Q(q)-linear combination of monomials x^k z^l, with x = 1 - z z*.
//
// Relations used for reduction:
//   z x  = q^{-2} x z,    z* x = q^2 x z*,
//   z z* = 1 - x,         z* z = 1 - q^2 x.
class DiscElement {
 public:
  using Terms = std::map<Monomial, Scalar>;

  DiscElement() = default;
  DiscElement(const Scalar& c);  // NOLINT: scalars embed as multiples of 1
  DiscElement(long c) : DiscElement(Scalar(c)) {}  // NOLINT

  // c x^k z^l. Throws DomainError for k < 0.
  static DiscElement monomial(int k, int l, const Scalar& c = 1);
  static DiscElement x() { return monomial(1, 0); }
  static DiscElement z() { return monomial(0, 1); }
  static DiscElement zs() { return monomial(0, -1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(int k, int l) const;
  std::size_t size() const { return terms_.size(); }

  // Adds c x^k z^l in place.
  void add_term(Monomial m, const Scalar& c);

  DiscElement operator-() const;
  DiscElement& operator+=(const DiscElement& o);
  DiscElement& operator-=(const DiscElement& o);
  friend DiscElement operator+(DiscElement a, const DiscElement& b) { return a += b; }
  friend DiscElement operator-(DiscElement a, const DiscElement& b) { return a -= b; }
  friend DiscElement operator*(const DiscElement& a, const DiscElement& b);
  friend DiscElement operator*(const Scalar& c, const DiscElement& a) { return a.scaled(c); }
  DiscElement scaled(const Scalar& c) const;
  DiscElement pow(int n) const;

  bool operator==(const DiscElement& o) const = default;

  // Parseable text such as "x*z^2 - q^2*zs".
  std::string to_string() const;

 private:
  Terms terms_;
};

DiscElement monomial(int k, int l, const Scalar& c = 1);
DiscElement mul(const DiscElement& a, const DiscElement& b);
bool is_zero(const DiscElement& a);

// (x^a z^l)(x^b z^m) in normal form.
DiscElement monomial_product(Monomial a, Monomial b);

// z^j (z*)^j = prod_{i=0}^{j-1} (1 - q^{-2i} x)  and
// (z*)^j z^j = prod_{i=1}^{j} (1 - q^{2i} x), as coefficient lists in x.
const std::vector<Scalar>& z_zstar_product(int j);
const std::vector<Scalar>& zstar_z_product(int j);

// Antimultiplicative involution fixing q.
DiscElement star(const DiscElement& a);

// Split by Z-degree; the components sum to a.
std::map<int, DiscElement> homogeneous_components(const DiscElement& a);
bool is_homogeneous(const DiscElement& a);
// Throws DomainError on zero or inhomogeneous input.
int deg(const DiscElement& a);

// sigma^p, where sigma(a) = q^{2 deg a} a on homogeneous a.
DiscElement sigma_pow(const DiscElement& a, int p);
inline DiscElement sigma(const DiscElement& a) { return sigma_pow(a, 1); }

// The sigma-twisted derivations with D(ab) = D(a) sigma(b) + a D(b):
//   partial:     z -> z*,  z* -> 0
//   partial_bar: z -> 0,   z* -> q^2 z
DiscElement partial(const DiscElement& a);
DiscElement partial_bar(const DiscElement& a);

}  // namespace qdisc
