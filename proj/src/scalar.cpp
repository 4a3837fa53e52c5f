#include "qdisc/scalar.hpp"

#include <cassert>

#include "qdisc/errors.hpp"

namespace qdisc {

Scalar::Scalar(const mpq_class& c) {
  mpq_class r = c;
  r.canonicalize();
  num_ = IntPolynomial(r.get_num());
  den_ = IntPolynomial(r.get_den());
}

Scalar::Scalar(IntPolynomial num, IntPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

Scalar Scalar::q_power(int n) {
  Scalar s;
  if (n >= 0) {
    s.num_ = IntPolynomial::monomial(n);
  } else {
    s.num_ = IntPolynomial(1);
    s.den_ = IntPolynomial::monomial(-n);
  }
  return s;
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = IntPolynomial(1);
    return;
  }
  if (!den_.is_one()) {
    IntPolynomial g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool Scalar::is_monomial() const {
  if (is_zero()) return false;
  auto single = [](const IntPolynomial& p) { return p.low_degree() == p.degree(); };
  return single(num_) && single(den_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  // Cross-cancel before multiplying keeps the gcd inputs small.
  IntPolynomial g1 = gcd(num_, o.den_);
  IntPolynomial g2 = gcd(o.num_, den_);
  IntPolynomial a = g1.is_one() ? num_ : divexact(num_, g1);
  IntPolynomial d = g1.is_one() ? o.den_ : divexact(o.den_, g1);
  IntPolynomial c = g2.is_one() ? o.num_ : divexact(o.num_, g2);
  IntPolynomial b = g2.is_one() ? den_ : divexact(den_, g2);
  num_ = a * c;
  den_ = b * d;
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  Scalar r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.leading() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Scalar Scalar::pow(int n) const {
  if (n < 0) return inv().pow(-n);
  Scalar result(1);
  Scalar base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

mpq_class Scalar::eval_at(const mpq_class& q0) const {
  mpq_class d = den_.eval(q0);
  if (d == 0) throw PoleError(q0.get_str());
  mpq_class r = num_.eval(q0) / d;
  r.canonicalize();
  return r;
}

bool Scalar::needs_parens() const {
  if (!den_.is_one()) return true;
  int terms = 0;
  for (const auto& c : num_.coeffs())
    if (c != 0) ++terms;
  return terms > 1;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const IntPolynomial& p) {
    std::string s = p.to_string();
    int terms = 0;
    for (const auto& c : p.coeffs())
      if (c != 0) ++terms;
    bool bare = terms == 1 && p.leading() > 0 && (p.degree() == 0 || p.leading() == 1);
    return bare ? s : "(" + s + ")";
  };
  if (num_.leading() < 0 && num_.low_degree() == num_.degree())
    return "-" + wrap(-num_) + "/" + wrap(den_);
  return wrap(num_) + "/" + wrap(den_);
}

Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar neg(const Scalar& a) { return -a; }
Scalar div(const Scalar& a, const Scalar& b) { return a / b; }
Scalar inv(const Scalar& b) { return b.inv(); }

Scalar q_int(int n, int m) {
  assert(n >= 1 && m != 0);
  Scalar acc;
  for (int i = 0; i < n; ++i) acc += Scalar::q_power(m * i);
  return acc;
}

mpq_class eval_at(const Scalar& a, const mpq_class& q0) { return a.eval_at(q0); }

}  // namespace qdisc
