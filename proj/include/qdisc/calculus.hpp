#pragma once

#include <map>
#include <string>

#include "qdisc/disc.hpp"

namespace qdisc {

// A 1-form p w + r w*, stored by its left coefficients. The module of
// 1-forms is free on w, w* as a left module, with right action
//   w a = sigma(a) w,   w* a = sigma(a) w*.
class OneForm {
 public:
  OneForm() = default;
  OneForm(DiscElement on_omega, DiscElement on_omega_star)
      : omega_(std::move(on_omega)), omega_star_(std::move(on_omega_star)) {}

  static OneForm omega() { return {DiscElement(1), DiscElement()}; }
  static OneForm omega_star() { return {DiscElement(), DiscElement(1)}; }

  const DiscElement& omega_coeff() const { return omega_; }
  const DiscElement& omega_star_coeff() const { return omega_star_; }

  bool is_zero() const { return omega_.is_zero() && omega_star_.is_zero(); }

  OneForm operator-() const { return {-omega_, -omega_star_}; }
  OneForm& operator+=(const OneForm& o);
  OneForm& operator-=(const OneForm& o);
  friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
  friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
  OneForm scaled(const Scalar& c) const { return {omega_.scaled(c), omega_star_.scaled(c)}; }

  bool operator==(const OneForm&) const = default;
  std::string to_string() const;

 private:
  DiscElement omega_;
  DiscElement omega_star_;
};

// Laurent polynomial in one commuting variable u: the image of the disc
// algebra modulo the ideal generated by x, with u the class of z and u^{-1}
// the class of z*.
class CircleElement {
 public:
  using Terms = std::map<int, Scalar>;

  CircleElement() = default;
  static CircleElement monomial(int l, const Scalar& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(int l) const;
  void add_term(int l, const Scalar& c);

  CircleElement operator-() const;
  CircleElement& operator+=(const CircleElement& o);
  CircleElement& operator-=(const CircleElement& o);
  friend CircleElement operator+(CircleElement a, const CircleElement& b) { return a += b; }
  friend CircleElement operator-(CircleElement a, const CircleElement& b) { return a -= b; }
  friend CircleElement operator*(const CircleElement& a, const CircleElement& b);
  CircleElement scaled(const Scalar& c) const;

  bool operator==(const CircleElement&) const = default;

 private:
  Terms terms_;
};

// Image in O(D_q)/<x>: terms with a positive power of x are dropped.
CircleElement project_circle(const DiscElement& a);
// The representative sum of c z^l with no x-powers.
DiscElement lift(const CircleElement& f);

// A 2-form f v with f a circle element: x v = v x = 0 and v a = sigma^2(a) v,
// so every 2-form has a unique left coefficient of this shape.
class TwoForm {
 public:
  TwoForm() = default;
  explicit TwoForm(CircleElement coeff) : coeff_(std::move(coeff)) {}
  static TwoForm volume() { return TwoForm(CircleElement::monomial(0)); }

  const CircleElement& coeff() const { return coeff_; }
  bool is_zero() const { return coeff_.is_zero(); }

  TwoForm operator-() const { return TwoForm(-coeff_); }
  TwoForm& operator+=(const TwoForm& o);
  TwoForm& operator-=(const TwoForm& o);
  friend TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
  friend TwoForm operator-(TwoForm a, const TwoForm& b) { return a -= b; }
  TwoForm scaled(const Scalar& c) const { return TwoForm(coeff_.scaled(c)); }

  bool operator==(const TwoForm&) const = default;
  std::string to_string() const;

 private:
  CircleElement coeff_;
};

// d a = partial(a) w + partial_bar(a) w*
OneForm d0(const DiscElement& a);

OneForm oneform_left_mul(const DiscElement& a, const OneForm& nu);
OneForm oneform_right_mul(const OneForm& nu, const DiscElement& a);
// (p w + r w*)* = sigma(r*) w + sigma(p*) w*
OneForm star1(const OneForm& nu);

TwoForm twoform_left_mul(const DiscElement& a, const TwoForm& w);
TwoForm twoform_right_mul(const TwoForm& w, const DiscElement& a);

// Product of 1-forms, using
//   w w* = v,  w* w = -q^6 v,
//   w^2  = q^12 (q^2-1)/(q^4+1) z^4 v,  w*^2 = q^-4 (q^2-1)/(q^4+1) z*^4 v.
TwoForm wedge(const OneForm& nu, const OneForm& mu);

// Extension of d to 1-forms with d w = q^8 z^2 v and d w* = -z*^2 v.
TwoForm d1(const OneForm& nu);

// (f v)* = -sigma^2(f*) v
TwoForm star2(const TwoForm& w);

// The Z-degree of each homogeneous piece (w has degree 2, w* degree -2, v 0).
std::map<int, OneForm> homogeneous_components(const OneForm& nu);
std::map<int, TwoForm> homogeneous_components(const TwoForm& w);
// Throws DomainError on zero or inhomogeneous forms.
int deg(const OneForm& nu);
int deg(const TwoForm& w);

inline OneForm operator*(const DiscElement& a, const OneForm& nu) { return oneform_left_mul(a, nu); }
inline OneForm operator*(const OneForm& nu, const DiscElement& a) { return oneform_right_mul(nu, a); }
inline TwoForm operator*(const DiscElement& a, const TwoForm& w) { return twoform_left_mul(a, w); }
inline TwoForm operator*(const TwoForm& w, const DiscElement& a) { return twoform_right_mul(w, a); }
inline TwoForm operator*(const OneForm& nu, const OneForm& mu) { return wedge(nu, mu); }

inline OneForm star(const OneForm& nu) { return star1(nu); }
inline TwoForm star(const TwoForm& w) { return star2(w); }

}  // namespace qdisc
