#include "qdisc/cone.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "qdisc/errors.hpp"

namespace qdisc {

namespace {

Scalar qp(int n) { return Scalar::q_power(n); }

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

ConeParams::ConeParams(int n) : n_(n) {
  if (n < 2) throw DomainError("cone order must be at least 2");
}

PolyX::PolyX(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyX::PolyX(const Scalar& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

void PolyX::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar PolyX::coeff(int e) const {
  if (e < 0 || e > degree()) return Scalar();
  return coeffs_[static_cast<std::size_t>(e)];
}

PolyX PolyX::operator-() const {
  PolyX r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PolyX& PolyX::operator+=(const PolyX& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyX& PolyX::operator-=(const PolyX& o) { return *this += -o; }

PolyX operator*(const PolyX& a, const PolyX& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolyX(std::move(out));
}

PolyX PolyX::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  PolyX r = *this;
  for (auto& v : r.coeffs_) v *= c;
  return r;
}

PolyX PolyX::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inv());
}

DiscElement PolyX::to_disc() const {
  DiscElement a;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) a.add_term({static_cast<int>(i), 0}, coeffs_[i]);
  return a;
}

std::string PolyX::to_string() const { return to_disc().to_string(); }

DivMod divmod(const PolyX& a, const PolyX& b) {
  if (b.is_zero()) throw DivisionByZero();
  PolyX rem = a;
  std::vector<Scalar> quot(static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)));
  const Scalar lead_inv = b.leading().inv();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Scalar c = rem.leading() * lead_inv;
    quot[static_cast<std::size_t>(shift)] = c;
    std::vector<Scalar> sub(static_cast<std::size_t>(shift), Scalar());
    for (const auto& bc : b.coeffs()) sub.push_back(bc * c);
    PolyX step(std::move(sub));
    rem -= step;
  }
  return {PolyX(std::move(quot)), rem};
}

ExtGcd ext_gcd_x(const PolyX& p, const PolyX& r) {
  if (p.is_zero() && r.is_zero()) throw DomainError("gcd of two zero polynomials");
  // Invariants: old_a p + old_b r = old_g and a p + b r = g.
  // Every remainder is made monic to keep the rational-function coefficients small.
  PolyX old_g = p, g = r;
  PolyX old_a(Scalar(1)), a;
  PolyX old_b, b(Scalar(1));
  auto normalize = [](PolyX& gg, PolyX& aa, PolyX& bb) {
    if (gg.is_zero()) return;
    const Scalar norm = gg.leading().inv();
    gg = gg.scaled(norm);
    aa = aa.scaled(norm);
    bb = bb.scaled(norm);
  };
  normalize(old_g, old_a, old_b);
  normalize(g, a, b);
  while (!g.is_zero()) {
    DivMod qr = divmod(old_g, g);
    old_g = std::exchange(g, qr.remainder);
    old_a = std::exchange(a, old_a - qr.quotient * a);
    old_b = std::exchange(b, old_b - qr.quotient * b);
    normalize(g, a, b);
  }
  return {old_g, old_a, old_b};
}

bool is_cone_element(const DiscElement& a, const ConeParams& cone) {
  for (const auto& [m, c] : a.terms())
    if (mod(m.l, cone.order()) != 0) return false;
  return true;
}

bool is_cone_one_form(const OneForm& nu, const ConeParams& cone) {
  for (const auto& [m, c] : nu.omega_coeff().terms())
    if (mod(m.l + 2, cone.order()) != 0) return false;
  for (const auto& [m, c] : nu.omega_star_coeff().terms())
    if (mod(m.l - 2, cone.order()) != 0) return false;
  return true;
}

bool is_cone_two_form(const TwoForm& w, const ConeParams& cone) {
  for (const auto& [l, c] : w.coeff().terms())
    if (mod(l, cone.order()) != 0) return false;
  return true;
}

DiscElement cone_y(const ConeParams& cone) { return DiscElement::monomial(0, cone.order()); }
DiscElement cone_y_star(const ConeParams& cone) { return DiscElement::monomial(0, -cone.order()); }

namespace {

std::string prefix(const ConeParams& cone) { return "N=" + std::to_string(cone.order()) + ": "; }

// prod_{l=from}^{to} (1 - q^{step*l} x), as a disc element.
DiscElement linear_product(int from, int to, int step) {
  DiscElement out(1);
  for (int l = from; l <= to; ++l)
    out = out * (DiscElement(1) - DiscElement::monomial(1, 0, qp(step * l)));
  return out;
}

PolyX linear_product_x(int from, int to, int step) {
  PolyX out(Scalar(1));
  for (int l = from; l <= to; ++l) out = out * PolyX::linear(qp(step * l));
  return out;
}

// Reads a 1-form of the shape p(x) z^shape w back as p.
PolyX extract(const OneForm& f, int shape) {
  if (!f.omega_star_coeff().is_zero())
    throw VerificationFailure("expected a multiple of w, found a w* component");
  std::vector<Scalar> c;
  for (const auto& [m, v] : f.omega_coeff().terms()) {
    if (m.l != shape) throw VerificationFailure("unexpected z-power in " + f.to_string());
    if (static_cast<int>(c.size()) <= m.k) c.resize(static_cast<std::size_t>(m.k) + 1);
    c[static_cast<std::size_t>(m.k)] = v;
  }
  return PolyX(std::move(c));
}

OneForm zstar2_omega() { return DiscElement::monomial(0, -2) * OneForm::omega(); }

BezoutWitness combine(OneForm first, OneForm second, OneForm target, int shape) {
  BezoutWitness w;
  w.p = extract(first, shape);
  w.r = extract(second, shape);
  ExtGcd e = ext_gcd_x(w.p, w.r);
  if (!(e.g == PolyX(Scalar(1))))
    throw VerificationFailure("x-coefficients are not coprime: gcd = " + e.g.to_string());
  w.a = std::move(e.a);
  w.b = std::move(e.b);
  w.first = std::move(first);
  w.second = std::move(second);
  w.target = std::move(target);
  return w;
}

OneForm combination(const BezoutWitness& w) {
  return w.a.to_disc() * w.first + w.b.to_disc() * w.second;
}

BezoutWitness zstar2_witness_unchecked(const ConeParams& cone) {
  const DiscElement ys = cone_y_star(cone);
  const OneForm dy = d0(cone_y(cone));
  return combine(ys * dy, dy * ys, zstar2_omega(), -2);
}

BezoutWitness zN2_witness_unchecked(const ConeParams& cone) {
  const DiscElement y = cone_y(cone);
  const OneForm f = zstar2_omega();
  return combine(f * y, y * f, DiscElement::monomial(0, cone.order() - 2) * OneForm::omega(),
                 cone.order() - 2);
}

void check_cone_relations(const ConeParams& cone, Report& r) {
  const int n = cone.order();
  const DiscElement x = DiscElement::x();
  const DiscElement y = cone_y(cone);
  const DiscElement ys = cone_y_star(cone);
  r.expect_equal(prefix(cone) + "x y = q^{2N} y x", "cone", x * y, (y * x).scaled(qp(2 * n)));
  r.expect_equal(prefix(cone) + "y y* = prod_{l=0}^{N-1} (1 - q^{-2l} x)", "cone", y * ys,
                 linear_product(0, n - 1, -2));
  r.expect_equal(prefix(cone) + "y* y = prod_{l=1}^{N} (1 - q^{2l} x)", "cone", ys * y,
                 linear_product(1, n, 2));
}

}  // namespace

Report check_cone_relations(const ConeParams& cone) {
  Report r("cone relations");
  check_cone_relations(cone, r);
  return r;
}

OneForm dy_formula(const ConeParams& cone) {
  const int n = cone.order();
  PolyX coeff({q_int(n, 2), -qp(4 - 2 * n) * q_int(n, 4)});
  return (coeff.to_disc() * DiscElement::monomial(0, n - 2)) * OneForm::omega();
}

PolyX ystar_dy_coefficient(const ConeParams& cone) {
  const int n = cone.order();
  const Scalar ratio = q_int(n, 4) / q_int(n, 2);
  return (PolyX::linear(qp(4) * ratio) * linear_product_x(3, n, 2)).scaled(q_int(n, 2));
}

PolyX dy_ystar_coefficient(const ConeParams& cone) {
  const int n = cone.order();
  const Scalar ratio = q_int(n, 4) / q_int(n, 2);
  return (PolyX::linear(qp(4 - 2 * n) * ratio) * linear_product_x(0, n - 3, -2))
      .scaled(qp(-2 * n) * q_int(n, 2));
}

BezoutWitness witness_zstar2_omega(const ConeParams& cone) {
  BezoutWitness w = zstar2_witness_unchecked(cone);
  if (!(combination(w) == w.target))
    throw VerificationFailure("Bezout combination does not give z*^2 w");
  return w;
}

BezoutWitness witness_zN2_omega(const ConeParams& cone) {
  BezoutWitness w = zN2_witness_unchecked(cone);
  if (!(combination(w) == w.target))
    throw VerificationFailure("Bezout combination does not give z^{N-2} w");
  return w;
}

TwoForm witness_volume(const ConeParams& cone) {
  (void)cone;  // the same two cone forms work for every order
  const OneForm left = DiscElement::monomial(0, 2) * OneForm::omega_star();
  const TwoForm product = wedge(left, zstar2_omega());
  if (!(product == TwoForm::volume().scaled(-qp(2))))
    throw VerificationFailure("z^2 w* z*^2 w differs from -q^2 v");
  return product;
}

bool coprimality_criterion_holds(int n) {
  const Scalar rhs = qp(2) + 1;
  auto holds = [&](int k) { return !(qp(2 * k) * (qp(2 * n) + 1) - rhs).is_zero(); };
  for (int k = -2 * n + 2; k <= -n - 1; ++k)
    if (!holds(k)) return false;
  for (int k = 2; k <= n - 1; ++k)
    if (!holds(k)) return false;
  return true;
}

void verify_cone(const ConeParams& cone, Report& r) {
  const int n = cone.order();
  const std::string pre = prefix(cone);
  const DiscElement x = DiscElement::x();
  const DiscElement y = cone_y(cone);
  const DiscElement ys = cone_y_star(cone);
  const OneForm dy = d0(y);
  const OneForm f = zstar2_omega();
  const DiscElement zN2 = DiscElement::monomial(0, n - 2);

  check_cone_relations(cone, r);

  r.expect_equal(pre + "dy = ([N]_{q^2} - q^{4-2N} [N]_{q^4} x) z^{N-2} w", "ydy", dy,
                 dy_formula(cone));
  r.expect_equal(pre + "y* dy closed form", "y*dy", ys * dy,
                 ystar_dy_coefficient(cone).to_disc() * f);
  r.expect_equal(pre + "dy y* closed form", "dyy*", dy * ys,
                 dy_ystar_coefficient(cone).to_disc() * f);
  {
    const ExtGcd e = ext_gcd_x(ystar_dy_coefficient(cone), dy_ystar_coefficient(cone));
    r.record(pre + "y* dy and dy y* coefficients are coprime", "crit", e.g == PolyX(Scalar(1)),
             "gcd = " + e.g.to_string());
  }
  r.record(pre + "no admissible k solves q^{2k}(q^{2N}+1) = q^2+1", "crit",
           coprimality_criterion_holds(n), "k in [-2N+2, -N-1] and [2, N-1]");

  try {
    const BezoutWitness w = zstar2_witness_unchecked(cone);
    r.expect_equal(pre + "a(x) y* dy + b(x) dy y* = z*^2 w", "y*dy", combination(w), w.target);
  } catch (const VerificationFailure& e) {
    r.record(pre + "a(x) y* dy + b(x) dy y* = z*^2 w", "y*dy", false, e.what());
  }

  r.expect_equal(pre + "z*^2 w y = q^{2N}(1-q^2 x)(1-q^4 x) z^{N-2} w", "z^{N-2}w", f * y,
                 (linear_product(1, 2, 2).scaled(qp(2 * n)) * zN2) * OneForm::omega());
  r.expect_equal(pre + "y z*^2 w = (1-q^{4-2N} x)(1-q^{2-2N} x) z^{N-2} w", "z^{N-2}w", y * f,
                 ((DiscElement(1) - DiscElement::monomial(1, 0, qp(4 - 2 * n))) *
                  (DiscElement(1) - DiscElement::monomial(1, 0, qp(2 - 2 * n))) * zN2) *
                     OneForm::omega());
  try {
    const BezoutWitness w = zN2_witness_unchecked(cone);
    r.expect_equal(pre + "a(x) (z*^2 w) y + b(x) y (z*^2 w) = z^{N-2} w", "z^{N-2}w",
                   combination(w), w.target);
  } catch (const VerificationFailure& e) {
    r.record(pre + "a(x) (z*^2 w) y + b(x) y (z*^2 w) = z^{N-2} w", "z^{N-2}w", false, e.what());
  }

  const OneForm zz_ws = DiscElement::monomial(0, 2) * OneForm::omega_star();
  const TwoForm vol = wedge(zz_ws, f);
  r.expect_equal(pre + "z^2 w* z*^2 w = q^-4 (1-x)(1-q^-2 x) w* w", "o*o1", vol,
                 ((DiscElement(1) - x) * (DiscElement(1) - x.scaled(qp(-2)))).scaled(qp(-4)) *
                     wedge(OneForm::omega_star(), OneForm::omega()));
  r.expect_equal(pre + "z^2 w* z*^2 w = -q^2 v", "o*o1", vol, TwoForm::volume().scaled(-qp(2)));
  r.record(pre + "z^2 w*, z*^2 w, v and dy are cone forms", "o*o1",
           is_cone_one_form(zz_ws, cone) && is_cone_one_form(f, cone) &&
               is_cone_two_form(TwoForm::volume(), cone) && is_cone_one_form(dy, cone),
           "degrees divisible by N");
}

}  // namespace qdisc
