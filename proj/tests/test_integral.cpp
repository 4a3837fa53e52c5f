#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "qdisc/errors.hpp"
#include "qdisc/integral.hpp"

using namespace qdisc;

namespace {
Scalar qp(int n) { return Scalar::q_power(n); }
DiscElement mono(int k, int l, const Scalar& c = 1) { return DiscElement::monomial(k, l, c); }
const DiscElement x = DiscElement::x();

// [n]_s straight from the geometric sum, independent of q_int.
Scalar geometric(int n, int m) {
  Scalar s;
  for (int i = 0; i < n; ++i) s += qp(m * i);
  return s;
}
}  // namespace

TEST_CASE("divergence") {
  CHECK(divergence({mono(0, 2), DiscElement()}) ==
        (DiscElement(qp(2) + 1) - x.scaled(qp(4) + 1)).scaled(qp(4)));
  CHECK(divergence({}).is_zero());
  CHECK(divergence({DiscElement(), mono(0, -2)}) == partial_bar(mono(0, -2)).scaled(qp(-4)));
  CHECK(partial_bar(mono(0, -2)) == oracle::partial_bar(mono(0, -2)));
}

TEST_CASE("integral values") {
  CHECK(integral_lambda(DiscElement(1)) == Scalar(1));
  CHECK(integral_lambda(x) == (qp(2) + 1) / (qp(4) + 1));
  CHECK(integral_lambda(mono(2, 0)) == (qp(4) + qp(2) + 1) / (qp(8) + qp(4) + 1));
  CHECK(integral_lambda(mono(3, 2)).is_zero());
  CHECK(integral_lambda(x, Scalar(5)) == Scalar(5) * (qp(2) + 1) / (qp(4) + 1));
  for (int k = 0; k <= 8; ++k)
    CHECK(integral_lambda(mono(k, 0)) == geometric(k + 1, 2) / geometric(k + 1, 4));
}

TEST_CASE("integral is star invariant") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 40; ++i) {
    DiscElement a = gen::element(rng, 5, 4, 4);
    CHECK(integral_lambda(star(a)) == integral_lambda(a));
  }
}

TEST_CASE("reduction examples") {
  CokernelDecomposition a = cokernel_reduce(mono(1, -2));
  CHECK(a.constant.is_zero());
  CHECK(a.witness.on_omega == mono(2, 0, -qp(-2) / (qp(4) + 1)));
  CHECK(a.witness.on_omega_star.is_zero());

  CokernelDecomposition b = cokernel_reduce(x);
  CHECK(b.constant == (qp(2) + 1) / (qp(4) + 1));
  CHECK(b.witness.on_omega == mono(0, 2, -qp(-4) / (qp(4) + 1)));
  CHECK(b.witness.on_omega_star.is_zero());
  CHECK(x - DiscElement(b.constant) == divergence(b.witness));

  CokernelDecomposition c = cokernel_reduce(DiscElement(1));
  CHECK(c.constant == Scalar(1));
  CHECK(c.witness.on_omega.is_zero());
  CHECK(c.witness.on_omega_star.is_zero());
}

TEST_CASE("reduction of every monomial in range") {
  for (int k = 0; k <= 8; ++k)
    for (int l = -8; l <= 8; ++l) {
      CAPTURE(k);
      CAPTURE(l);
      const DiscElement m = mono(k, l);
      CokernelDecomposition dec = cokernel_reduce(m);
      CHECK(cokernel_residual(m, dec).is_zero());
      if (l == 0)
        CHECK(dec.constant == geometric(k + 1, 2) / geometric(k + 1, 4));
      else
        CHECK(dec.constant.is_zero());
    }
}

TEST_CASE("reduction of random elements") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 30; ++i) {
    DiscElement a = gen::element(rng, 5, 5, 5);
    CokernelDecomposition dec = cokernel_reduce(a);
    CHECK(cokernel_residual(a, dec).is_zero());
    CHECK(dec.constant == integral_lambda(a));
  }
}

TEST_CASE("integral vanishes on the image of the derivations") {
  Report r = verify_integral_vanishing(8, 8);
  CHECK(r.checks().size() == 2 * 9 * 17);
  CHECK(r.ok());
  std::mt19937_64 rng(59);
  for (int i = 0; i < 30; ++i) {
    CotangentFunctional f{gen::element(rng, 4, 4), gen::element(rng, 4, 4)};
    CHECK(integral_lambda(divergence(f)).is_zero());
  }
}

TEST_CASE("closed-form derivative values") {
  Report r("integral");
  verify_integral(8, 8, r);
  for (const auto& c : r.checks()) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
}

TEST_CASE("integral on the cone") {
  CHECK(cone_integral(x, ConeParams(3)) == (qp(2) + 1) / (qp(4) + 1));
  const ConeParams c2(2);
  const DiscElement yys = cone_y(c2) * cone_y_star(c2);
  CHECK(cone_integral(yys, c2) == integral_lambda((1 - x) * (1 - x.scaled(qp(-2)))));
  CHECK(cone_integral(yys, c2) ==
        1 - (1 + qp(-2)) * (qp(2) + 1) / (qp(4) + 1) +
            qp(-2) * (qp(4) + qp(2) + 1) / (qp(8) + qp(4) + 1));
  CHECK_THROWS_AS(cone_integral(DiscElement::z(), c2), DomainError);
}
