#include "qdisc/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <sstream>

#include "qdisc/errors.hpp"

namespace qdisc {

namespace {
const mpz_class kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

IntPolynomial::IntPolynomial(const mpz_class& c) {
  if (c != 0) coeffs_.push_back(c);
}

IntPolynomial IntPolynomial::monomial(int exponent, const mpz_class& c) {
  assert(exponent >= 0);
  IntPolynomial p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, 0);
  p.coeffs_.back() = c;
  return p;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int IntPolynomial::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return 0;
}

const mpz_class& IntPolynomial::coeff(int exponent) const {
  if (exponent < 0 || exponent > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  IntPolynomial r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  IntPolynomial r;
  if (k > 0) {
    r.coeffs_.assign(static_cast<std::size_t>(k), 0);
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  } else {
    assert(low_degree() >= -k);
    r.coeffs_.assign(coeffs_.begin() + (-k), coeffs_.end());
  }
  return r;
}

IntPolynomial IntPolynomial::divexact(const mpz_class& c) const {
  IntPolynomial r = *this;
  for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

mpq_class IntPolynomial::eval(const mpq_class& q0) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + mpq_class(*it);
  return acc;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = degree(); e >= 0; --e) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

IntPolynomial divexact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  if (b.is_constant()) return a.divexact(b.leading());
  const int db = b.degree();
  std::vector<mpz_class> rem = a.coeffs();
  std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int i = a.degree(); i >= db; --i) {
    mpz_class& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    quot[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j)
      mpz_submul(rem[static_cast<std::size_t>(i - db + j)].get_mpz_t(), c.get_mpz_t(),
                 b.coeff(j).get_mpz_t());
  }
  return IntPolynomial(std::move(quot));
}

namespace {

IntPolynomial primitive(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  mpz_class c = p.content();
  if (p.leading() < 0) c = -c;
  return c == 1 ? p : p.divexact(c);
}

// Pseudo-remainder of a by b, computed term by term.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    IntPolynomial next = a.scaled(b.leading());
    next -= b.shifted(shift).scaled(a.leading());
    a = primitive(next);
  }
  return a;
}

// Exact quotient a / b over Z[q], or nothing if b does not divide a.
std::optional<IntPolynomial> try_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return IntPolynomial();
  const int db = b.degree();
  if (a.degree() < db) return std::nullopt;
  std::vector<mpz_class> rem = a.coeffs();
  std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int i = a.degree(); i >= db; --i) {
    mpz_class& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    quot[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j)
      mpz_submul(rem[static_cast<std::size_t>(i - db + j)].get_mpz_t(), c.get_mpz_t(),
                 b.coeff(j).get_mpz_t());
  }
  for (int i = 0; i < db; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

mpz_class max_norm(const IntPolynomial& p) {
  mpz_class m = 0;
  for (const auto& c : p.coeffs())
    if (abs(c) > m) m = abs(c);
  return m;
}

mpz_class evaluate_at(const IntPolynomial& p, const mpz_class& xi) {
  mpz_class v = 0;
  for (int i = p.degree(); i >= 0; --i) v = v * xi + p.coeff(i);
  return v;
}

// Heuristic gcd of primitive polynomials: evaluate at a large integer, take
// the integer gcd and read the candidate back in balanced base xi. A
// candidate is accepted only if it divides both inputs.
std::optional<IntPolynomial> heuristic_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class gamma;
    const mpz_class va = evaluate_at(a, xi), vb = evaluate_at(b, xi);
    mpz_gcd(gamma.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    std::vector<mpz_class> digits;
    const mpz_class half = xi / 2;
    while (gamma != 0) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      digits.push_back(r);
      gamma = (gamma - r) / xi;
    }
    IntPolynomial candidate = primitive(IntPolynomial(std::move(digits)));
    if (!candidate.is_zero() && try_divide(a, candidate) && try_divide(b, candidate))
      return candidate;
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return primitive(b).scaled(b.content());
  if (b.is_zero()) return primitive(a).scaled(a.content());

  // Powers of q split off first: most denominators in practice are q^k times
  // an integer, in which case no remainder sequence is needed at all.
  const int qpow = std::min(a.low_degree(), b.low_degree());
  IntPolynomial pa = primitive(a.shifted(-a.low_degree()));
  IntPolynomial pb = primitive(b.shifted(-b.low_degree()));
  mpz_class c;
  {
    const mpz_class ca = a.content();
    const mpz_class cb = b.content();
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }

  IntPolynomial g(1);
  if (!pa.is_constant() && !pb.is_constant()) {
    if (pa == pb) {
      g = pa;
    } else {
      if (auto h = heuristic_gcd(pa, pb)) return h->shifted(qpow).scaled(c);
      if (pa.degree() < pb.degree()) std::swap(pa, pb);
      while (!pb.is_zero()) {
        IntPolynomial r = pseudo_remainder(pa, pb);
        pa = std::move(pb);
        pb = primitive(r);
      }
      g = primitive(pa);
    }
  }
  return g.shifted(qpow).scaled(c);
}

}  // namespace qdisc
