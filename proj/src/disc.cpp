#include "qdisc/disc.hpp"

#include <mutex>
#include <sstream>

#include "qdisc/errors.hpp"

namespace qdisc {

DiscElement::DiscElement(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
}

DiscElement DiscElement::monomial(int k, int l, const Scalar& c) {
  if (k < 0) throw DomainError("negative power of x in monomial");
  DiscElement r;
  if (!c.is_zero()) r.terms_.emplace(Monomial{k, l}, c);
  return r;
}

Scalar DiscElement::coefficient(int k, int l) const {
  auto it = terms_.find({k, l});
  return it == terms_.end() ? Scalar() : it->second;
}

void DiscElement::add_term(Monomial m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DiscElement DiscElement::operator-() const {
  DiscElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

DiscElement& DiscElement::operator+=(const DiscElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiscElement& DiscElement::operator-=(const DiscElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiscElement DiscElement::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  DiscElement r = *this;
  if (c.is_one()) return r;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

DiscElement DiscElement::pow(int n) const {
  if (n < 0) throw DomainError("negative power of an algebra element");
  DiscElement r(1);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

namespace {

std::vector<Scalar> linear_factor_product(int j, int start, int step) {
  // prod_{i} (1 - q^{step*i} x), i = start .. start+j-1
  std::vector<Scalar> poly{Scalar(1)};
  for (int i = start; i < start + j; ++i) {
    Scalar root = -Scalar::q_power(step * i);
    std::vector<Scalar> next(poly.size() + 1);
    for (std::size_t e = 0; e < poly.size(); ++e) {
      next[e] += poly[e];
      next[e + 1] += poly[e] * root;
    }
    poly = std::move(next);
  }
  return poly;
}

struct ProductCache {
  std::mutex mu;
  std::map<int, std::vector<Scalar>> down;  // z^j z*^j
  std::map<int, std::vector<Scalar>> up;    // z*^j z^j
};

ProductCache& product_cache() {
  static ProductCache cache;
  return cache;
}

}  // namespace

const std::vector<Scalar>& z_zstar_product(int j) {
  auto& cache = product_cache();
  std::lock_guard lock(cache.mu);
  auto it = cache.down.find(j);
  if (it == cache.down.end()) it = cache.down.emplace(j, linear_factor_product(j, 0, -2)).first;
  return it->second;
}

const std::vector<Scalar>& zstar_z_product(int j) {
  auto& cache = product_cache();
  std::lock_guard lock(cache.mu);
  auto it = cache.up.find(j);
  if (it == cache.up.end()) it = cache.up.emplace(j, linear_factor_product(j, 1, 2)).first;
  return it->second;
}

DiscElement monomial_product(Monomial a, Monomial b) {
  // z^l x^b = q^{-2lb} x^b z^l, for either sign of l.
  const Scalar twist = Scalar::q_power(-2 * a.l * b.k);
  const int k = a.k + b.k;
  DiscElement r;
  if ((a.l >= 0 && b.l >= 0) || (a.l <= 0 && b.l <= 0)) {
    r.add_term({k, a.l + b.l}, twist);
    return r;
  }
  // Mixed signs: cancel j = min(|l|, |m|) letters in the middle, which leaves
  // a polynomial in x; if letters remain on the left they are pushed through
  // it, rescaling x by q^{-2 l'}.
  const bool z_first = a.l > 0;
  const int left = z_first ? a.l : -a.l;
  const int right = z_first ? -b.l : b.l;
  const int j = std::min(left, right);
  const auto& poly = z_first ? z_zstar_product(j) : zstar_z_product(j);
  const int rest = a.l + b.l;
  const bool rest_on_left = left > right;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Scalar c = twist * poly[i];
    if (rest_on_left) c *= Scalar::q_power(-2 * rest * static_cast<int>(i));
    r.add_term({k + static_cast<int>(i), rest}, c);
  }
  return r;
}

DiscElement operator*(const DiscElement& a, const DiscElement& b) {
  DiscElement r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const Scalar c = ca * cb;
      for (const auto& [m, v] : monomial_product(ma, mb).terms_) r.add_term(m, c * v);
    }
  }
  return r;
}

namespace {

void append_power(std::ostringstream& os, bool& any, const char* sym, int e) {
  if (e == 0) return;
  if (any) os << '*';
  os << sym;
  if (e > 1) os << '^' << e;
  any = true;
}

}  // namespace

std::string DiscElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::ostringstream mono;
    bool any = false;
    append_power(mono, any, "x", m.k);
    append_power(mono, any, m.l > 0 ? "z" : "zs", m.l > 0 ? m.l : -m.l);
    std::string term;
    if (!any) {
      term = c.to_string();
    } else if (c.is_one()) {
      term = mono.str();
    } else if (c == Scalar(-1)) {
      term = "-" + mono.str();
    } else {
      term = (c.needs_parens() ? "(" + c.to_string() + ")" : c.to_string()) + "*" + mono.str();
    }
    if (first) {
      os << term;
    } else if (term.front() == '-') {
      os << " - " << term.substr(1);
    } else {
      os << " + " << term;
    }
    first = false;
  }
  return os.str();
}

DiscElement monomial(int k, int l, const Scalar& c) { return DiscElement::monomial(k, l, c); }
DiscElement mul(const DiscElement& a, const DiscElement& b) { return a * b; }
bool is_zero(const DiscElement& a) { return a.is_zero(); }

DiscElement star(const DiscElement& a) {
  // (x^k z^l)* = z^{-l} x^k = q^{2kl} x^k z^{-l}
  DiscElement r;
  for (const auto& [m, c] : a.terms()) r.add_term({m.k, -m.l}, c * Scalar::q_power(2 * m.k * m.l));
  return r;
}

std::map<int, DiscElement> homogeneous_components(const DiscElement& a) {
  std::map<int, DiscElement> out;
  for (const auto& [m, c] : a.terms()) out[m.l].add_term(m, c);
  return out;
}

bool is_homogeneous(const DiscElement& a) {
  if (a.is_zero()) return false;
  const int l = a.terms().begin()->first.l;
  for (const auto& [m, c] : a.terms())
    if (m.l != l) return false;
  return true;
}

int deg(const DiscElement& a) {
  if (a.is_zero()) throw DomainError("the zero element has no degree");
  if (!is_homogeneous(a)) throw DomainError("degree of an inhomogeneous element");
  return a.terms().begin()->first.l;
}

DiscElement sigma_pow(const DiscElement& a, int p) {
  if (p == 0) return a;
  DiscElement r;
  for (const auto& [m, c] : a.terms()) r.add_term(m, c * Scalar::q_power(2 * p * m.l));
  return r;
}

namespace {

// A sigma-twisted derivation determined by its values on z and z*, with
// memoised values on the powers x^k and z^l.
class TwistedDerivation {
 public:
  TwistedDerivation(DiscElement on_z, DiscElement on_zs)
      : on_z_(std::move(on_z)), on_zs_(std::move(on_zs)) {
    // x = 1 - z z*
    on_x_ = -(on_z_ * sigma(DiscElement::zs()) + DiscElement::z() * on_zs_);
  }

  DiscElement apply(const DiscElement& a) {
    DiscElement r;
    for (const auto& [m, c] : a.terms()) {
      // D(x^k z^l) = D(x^k) sigma(z^l) + x^k D(z^l)
      DiscElement part = on_x_power(m.k) * DiscElement::monomial(0, m.l, Scalar::q_power(2 * m.l)) +
                         DiscElement::monomial(m.k, 0) * on_z_power(m.l);
      r += part.scaled(c);
    }
    return r;
  }

 private:
  DiscElement on_x_power(int k) {
    std::lock_guard lock(mu_);
    while (static_cast<int>(x_powers_.size()) <= k) {
      const int n = static_cast<int>(x_powers_.size());
      if (n == 0) {
        x_powers_.emplace_back();
      } else {
        // D(x^n) = D(x) x^{n-1} + x D(x^{n-1})
        x_powers_.push_back(on_x_ * DiscElement::monomial(n - 1, 0) +
                            DiscElement::x() * x_powers_.back());
      }
    }
    return x_powers_[static_cast<std::size_t>(k)];
  }

  DiscElement on_z_power(int l) {
    std::lock_guard lock(mu_);
    auto& table = l >= 0 ? z_powers_ : zs_powers_;
    const int n_target = l >= 0 ? l : -l;
    const DiscElement& gen_value = l >= 0 ? on_z_ : on_zs_;
    const DiscElement gen = l >= 0 ? DiscElement::z() : DiscElement::zs();
    const int sign = l >= 0 ? 1 : -1;
    while (static_cast<int>(table.size()) <= n_target) {
      const int n = static_cast<int>(table.size());
      if (n == 0) {
        table.emplace_back();
      } else {
        // D(g^n) = D(g) sigma(g^{n-1}) + g D(g^{n-1})
        table.push_back(gen_value * DiscElement::monomial(0, sign * (n - 1),
                                                          Scalar::q_power(2 * sign * (n - 1))) +
                        gen * table.back());
      }
    }
    return table[static_cast<std::size_t>(n_target)];
  }

  DiscElement on_z_, on_zs_, on_x_;
  std::mutex mu_;
  std::vector<DiscElement> x_powers_, z_powers_, zs_powers_;
};

TwistedDerivation& partial_impl() {
  static TwistedDerivation d(DiscElement::zs(), DiscElement());
  return d;
}

TwistedDerivation& partial_bar_impl() {
  static TwistedDerivation d(DiscElement(), DiscElement::monomial(0, 1, Scalar::q_power(2)));
  return d;
}

}  // namespace

DiscElement partial(const DiscElement& a) { return partial_impl().apply(a); }
DiscElement partial_bar(const DiscElement& a) { return partial_bar_impl().apply(a); }

}  // namespace qdisc
