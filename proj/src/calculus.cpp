#include "qdisc/calculus.hpp"

#include "qdisc/errors.hpp"

namespace qdisc {

OneForm& OneForm::operator+=(const OneForm& o) {
  omega_ += o.omega_;
  omega_star_ += o.omega_star_;
  return *this;
}

OneForm& OneForm::operator-=(const OneForm& o) {
  omega_ -= o.omega_;
  omega_star_ -= o.omega_star_;
  return *this;
}

namespace {

// "c*" prefix for a coefficient of a generator, or "" when c = 1.
std::string coefficient_prefix(const DiscElement& c) {
  if (c == DiscElement(1)) return "";
  if (c == DiscElement(-1)) return "-";
  if (c.size() == 1) {
    std::string s = c.to_string();
    // single terms print without a leading sum, so they can be chained with *
    return s + "*";
  }
  return "(" + c.to_string() + ")*";
}

void join_term(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (term.front() == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

}  // namespace

std::string OneForm::to_string() const {
  std::string out;
  if (!omega_.is_zero()) join_term(out, coefficient_prefix(omega_) + "w");
  if (!omega_star_.is_zero()) join_term(out, coefficient_prefix(omega_star_) + "ws");
  return out.empty() ? "0" : out;
}

CircleElement CircleElement::monomial(int l, const Scalar& c) {
  CircleElement f;
  f.add_term(l, c);
  return f;
}

Scalar CircleElement::coefficient(int l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? Scalar() : it->second;
}

void CircleElement::add_term(int l, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(l, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CircleElement CircleElement::operator-() const {
  CircleElement r = *this;
  for (auto& [l, c] : r.terms_) c = -c;
  return r;
}

CircleElement& CircleElement::operator+=(const CircleElement& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, c);
  return *this;
}

CircleElement& CircleElement::operator-=(const CircleElement& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, -c);
  return *this;
}

CircleElement operator*(const CircleElement& a, const CircleElement& b) {
  CircleElement r;
  for (const auto& [la, ca] : a.terms_)
    for (const auto& [lb, cb] : b.terms_) r.add_term(la + lb, ca * cb);
  return r;
}

CircleElement CircleElement::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  CircleElement r = *this;
  for (auto& [l, v] : r.terms_) v *= c;
  return r;
}

CircleElement project_circle(const DiscElement& a) {
  CircleElement f;
  for (const auto& [m, c] : a.terms())
    if (m.k == 0) f.add_term(m.l, c);
  return f;
}

DiscElement lift(const CircleElement& f) {
  DiscElement a;
  for (const auto& [l, c] : f.terms()) a.add_term({0, l}, c);
  return a;
}

TwoForm& TwoForm::operator+=(const TwoForm& o) {
  coeff_ += o.coeff_;
  return *this;
}

TwoForm& TwoForm::operator-=(const TwoForm& o) {
  coeff_ -= o.coeff_;
  return *this;
}

std::string TwoForm::to_string() const {
  if (is_zero()) return "0";
  return coefficient_prefix(lift(coeff_)) + "v";
}

OneForm d0(const DiscElement& a) { return {partial(a), partial_bar(a)}; }

OneForm oneform_left_mul(const DiscElement& a, const OneForm& nu) {
  return {a * nu.omega_coeff(), a * nu.omega_star_coeff()};
}

OneForm oneform_right_mul(const OneForm& nu, const DiscElement& a) {
  const DiscElement s = sigma(a);
  return {nu.omega_coeff() * s, nu.omega_star_coeff() * s};
}

OneForm star1(const OneForm& nu) {
  return {sigma(star(nu.omega_star_coeff())), sigma(star(nu.omega_coeff()))};
}

TwoForm twoform_left_mul(const DiscElement& a, const TwoForm& w) {
  return TwoForm(project_circle(a) * w.coeff());
}

TwoForm twoform_right_mul(const TwoForm& w, const DiscElement& a) {
  return TwoForm(w.coeff() * project_circle(sigma_pow(a, 2)));
}

namespace {

const TwoForm& omega_omega() {
  static const TwoForm w(CircleElement::monomial(
      4, Scalar::q_power(12) * (Scalar::q_power(2) - 1) / (Scalar::q_power(4) + 1)));
  return w;
}

const TwoForm& omega_star_omega_star() {
  static const TwoForm w(CircleElement::monomial(
      -4, Scalar::q_power(-4) * (Scalar::q_power(2) - 1) / (Scalar::q_power(4) + 1)));
  return w;
}

const TwoForm& omega_omega_star() {
  static const TwoForm w = TwoForm::volume();
  return w;
}

const TwoForm& omega_star_omega() {
  static const TwoForm w(CircleElement::monomial(0, -Scalar::q_power(6)));
  return w;
}

}  // namespace

TwoForm wedge(const OneForm& nu, const OneForm& mu) {
  // (p w + r w*)(s w + t w*) = p s' w w + p t' w w* + r s' w* w + r t' w* w*,
  // where s' = sigma(s), t' = sigma(t). Only the images modulo x matter.
  const CircleElement p = project_circle(nu.omega_coeff());
  const CircleElement r = project_circle(nu.omega_star_coeff());
  const CircleElement s = project_circle(sigma(mu.omega_coeff()));
  const CircleElement t = project_circle(sigma(mu.omega_star_coeff()));
  CircleElement out;
  if (!p.is_zero()) out += p * (s * omega_omega().coeff() + t * omega_omega_star().coeff());
  if (!r.is_zero()) out += r * (s * omega_star_omega().coeff() + t * omega_star_omega_star().coeff());
  return TwoForm(std::move(out));
}

TwoForm d1(const OneForm& nu) {
  static const TwoForm d_omega(CircleElement::monomial(2, Scalar::q_power(8)));
  static const TwoForm d_omega_star(CircleElement::monomial(-2, Scalar(-1)));
  const DiscElement& p = nu.omega_coeff();
  const DiscElement& r = nu.omega_star_coeff();
  // d(p w) = dp w + p dw
  return wedge(d0(p), OneForm::omega()) + twoform_left_mul(p, d_omega) +
         wedge(d0(r), OneForm::omega_star()) + twoform_left_mul(r, d_omega_star);
}

TwoForm star2(const TwoForm& w) {
  // c u^l  ->  -q^{-4l} c u^{-l}
  CircleElement out;
  for (const auto& [l, c] : w.coeff().terms()) out.add_term(-l, -Scalar::q_power(-4 * l) * c);
  return TwoForm(std::move(out));
}

std::map<int, OneForm> homogeneous_components(const OneForm& nu) {
  std::map<int, OneForm> out;
  for (const auto& [l, part] : homogeneous_components(nu.omega_coeff()))
    out[l + 2] += OneForm(part, DiscElement());
  for (const auto& [l, part] : homogeneous_components(nu.omega_star_coeff()))
    out[l - 2] += OneForm(DiscElement(), part);
  return out;
}

std::map<int, TwoForm> homogeneous_components(const TwoForm& w) {
  std::map<int, TwoForm> out;
  for (const auto& [l, c] : w.coeff().terms()) out[l] += TwoForm(CircleElement::monomial(l, c));
  return out;
}

int deg(const OneForm& nu) {
  auto parts = homogeneous_components(nu);
  if (parts.empty()) throw DomainError("the zero form has no degree");
  if (parts.size() > 1) throw DomainError("degree of an inhomogeneous form");
  return parts.begin()->first;
}

int deg(const TwoForm& w) {
  auto parts = homogeneous_components(w);
  if (parts.empty()) throw DomainError("the zero form has no degree");
  if (parts.size() > 1) throw DomainError("degree of an inhomogeneous form");
  return parts.begin()->first;
}

}  // namespace qdisc
