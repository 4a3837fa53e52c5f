#include "qdisc/integral.hpp"

#include <cstdlib>
#include <string>

#include "qdisc/errors.hpp"

namespace qdisc {

namespace {

Scalar qp(int n) { return Scalar::q_power(n); }

std::string monomial_text(int k, int l) {
  DiscElement m = DiscElement::monomial(k, l);
  return m.to_string();
}

}  // namespace

DiscElement divergence(const CotangentFunctional& f) {
  return partial(f.on_omega).scaled(qp(4)) + partial_bar(f.on_omega_star).scaled(qp(-4));
}

Scalar integral_lambda(const DiscElement& a, const Scalar& lambda) {
  Scalar total;
  for (const auto& [m, c] : a.terms()) {
    if (m.l != 0) continue;
    total += c * q_int(m.k + 1, 2) / q_int(m.k + 1, 4);
  }
  return total * lambda;
}

namespace {

struct Step {
  DiscElement preimage;
  bool use_partial;  // otherwise partial_bar
};

// The element whose derivative has x^k z^l as its leading term.
Step preimage_for(int k, int l) {
  const DiscElement z2 = DiscElement::monomial(0, 2);
  const DiscElement zs = DiscElement::zs();
  if (l <= -2) return {DiscElement::monomial(k + 1, l + 2), true};
  if (l >= 2) return {DiscElement::monomial(k + 1, l - 2), false};
  if (l == 0) return {DiscElement::monomial(k - 1, 0) * z2, true};
  DiscElement g = k == 0 ? zs * z2 - (z2 * zs).scaled(qp(4))
                         : DiscElement::monomial(k - 1, 0) * z2 * zs;
  if (l == -1) return {g, true};
  return {star(g), false};
}

// Order in which terms are eliminated; (0, 0) is never selected.
bool bigger(const Monomial& a, const Monomial& b) {
  const int la = std::abs(a.l), lb = std::abs(b.l);
  if (la != lb) return la > lb;
  if (a.k != b.k) return a.k > b.k;
  return a.l > b.l;
}

}  // namespace

CokernelDecomposition cokernel_reduce(const DiscElement& a) {
  DiscElement rest = a;
  CotangentFunctional witness;
  for (;;) {
    const Monomial* lead = nullptr;
    for (const auto& [m, c] : rest.terms()) {
      if (m.k == 0 && m.l == 0) continue;
      if (lead == nullptr || bigger(m, *lead)) lead = &m;
    }
    if (lead == nullptr) break;
    const Monomial target = *lead;
    const Step step = preimage_for(target.k, target.l);
    const DiscElement image =
        step.use_partial ? partial(step.preimage) : partial_bar(step.preimage);
    const Scalar pivot = image.coefficient(target.k, target.l);
    if (pivot.is_zero()) throw VerificationFailure("reduction step has no pivot");
    for (const auto& [m, c] : image.terms())
      if (bigger(m, target)) throw VerificationFailure("reduction step does not decrease");
    const Scalar t = rest.coefficient(target.k, target.l) / pivot;
    rest -= image.scaled(t);
    // divergence carries q^4 in front of partial and q^-4 in front of partial_bar
    if (step.use_partial) {
      witness.on_omega += step.preimage.scaled(t * qp(-4));
    } else {
      witness.on_omega_star += step.preimage.scaled(t * qp(4));
    }
  }
  return {rest.coefficient(0, 0), std::move(witness)};
}

DiscElement cokernel_residual(const DiscElement& a, const CokernelDecomposition& dec) {
  return a - DiscElement(dec.constant) - divergence(dec.witness);
}

Report verify_integral_vanishing(int k_max, int l_max) {
  Report r("integral vanishing");
  verify_integral_vanishing(k_max, l_max, r);
  return r;
}

void verify_integral_vanishing(int k_max, int l_max, Report& r) {
  for (int k = 0; k <= k_max; ++k) {
    for (int l = -l_max; l <= l_max; ++l) {
      const DiscElement m = DiscElement::monomial(k, l);
      const std::string tag = monomial_text(k, l);
      r.expect_equal("Lambda(del(" + tag + ")) = 0", "int", integral_lambda(partial(m)), Scalar());
      r.expect_equal("Lambda(delbar(" + tag + ")) = 0", "int", integral_lambda(partial_bar(m)),
                     Scalar());
    }
  }
}

void verify_integral(int k_max, int l_max, Report& r) {
  const DiscElement x = DiscElement::x();
  const DiscElement z2 = DiscElement::monomial(0, 2);

  r.expect_equal("del(z^2) = (q^2+1) - (q^4+1) x", "part2", partial(z2),
                 DiscElement(qp(2) + 1) - x.scaled(qp(4) + 1));
  r.expect_equal("del(z* z^2 - q^4 z^2 z*) = (1-q^4) z*", "part2",
                 partial(DiscElement::zs() * z2 - (z2 * DiscElement::zs()).scaled(qp(4))),
                 DiscElement::zs().scaled(1 - qp(4)));
  r.expect_equal("del(z* z^2 - q^2 z^2 z*) = (1-q^2)(1+q^4) x z*", "part2",
                 partial(DiscElement::zs() * z2 - (z2 * DiscElement::zs()).scaled(qp(2))),
                 DiscElement::monomial(1, -1, (1 - qp(2)) * (1 + qp(4))));
  for (int k = 1; k <= k_max; ++k) {
    r.expect_equal("del(x^" + std::to_string(k) + ") = -q^-2 [k]_{q^4} x^{k-1} z*^2", "part1",
                   partial(DiscElement::monomial(k, 0)),
                   DiscElement::monomial(k - 1, -2, -qp(-2) * q_int(k, 4)));
  }
  for (int n = 0; n <= k_max; ++n) {
    DiscElement expected =
        DiscElement::monomial(n, 0, (qp(2) + 1) * q_int(n + 1, 4)) -
        DiscElement::monomial(n + 1, 0, q_int(n + 2, 4));
    if (n >= 1) expected -= DiscElement::monomial(n - 1, 0, qp(2) * q_int(n, 4));
    r.expect_equal("del(x^" + std::to_string(n) +
                       " z^2) = -q^2 [n]_{q^4} x^{n-1} + (q^2+1) [n+1]_{q^4} x^n - [n+2]_{q^4} x^{n+1}",
                   "part3", partial(DiscElement::monomial(n, 0) * z2), expected);
  }
  // [n+2]_{q^4} L(x^{n+1}) = (q^2+1) [n+1]_{q^4} L(x^n) - q^2 [n]_{q^4} L(x^{n-1})
  for (int n = 1; n < k_max; ++n) {
    auto lam = [](int k) { return integral_lambda(DiscElement::monomial(k, 0)); };
    r.expect_equal("integral recursion at n = " + std::to_string(n), "int",
                   q_int(n + 2, 4) * lam(n + 1),
                   (qp(2) + 1) * q_int(n + 1, 4) * lam(n) - qp(2) * q_int(n, 4) * lam(n - 1));
  }

  verify_integral_vanishing(k_max, l_max, r);

  for (int k = 0; k <= k_max; ++k) {
    for (int l = -l_max; l <= l_max; ++l) {
      const DiscElement m = DiscElement::monomial(k, l);
      const std::string tag = monomial_text(k, l);
      try {
        const CokernelDecomposition dec = cokernel_reduce(m);
        r.expect_equal("reduce(" + tag + "): residual", "thm.int", cokernel_residual(m, dec),
                       DiscElement());
        const Scalar expected = l == 0 ? q_int(k + 1, 2) / q_int(k + 1, 4) : Scalar();
        r.expect_equal("reduce(" + tag + "): constant", "int", dec.constant, expected);
      } catch (const VerificationFailure& e) {
        r.record("reduce(" + tag + ")", "thm.int", false, e.what());
      }
    }
  }
}

Scalar cone_integral(const DiscElement& a, const ConeParams& cone) {
  if (!is_cone_element(a, cone)) throw DomainError("not an element of the cone algebra");
  return integral_lambda(a);
}

}  // namespace qdisc
