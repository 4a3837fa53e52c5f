#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "qdisc/disc.hpp"
#include "qdisc/errors.hpp"

using qdisc::DiscElement;
using qdisc::Scalar;

namespace {
Scalar qp(int n) { return Scalar::q_power(n); }
DiscElement mono(int k, int l, const Scalar& c = 1) { return DiscElement::monomial(k, l, c); }
const DiscElement x = DiscElement::x();
const DiscElement z = DiscElement::z();
const DiscElement zs = DiscElement::zs();
}  // namespace

TEST_CASE("monomials") {
  CHECK(mono(0, 0) == DiscElement(1));
  CHECK(mono(1, 0) == x);
  CHECK(mono(0, -2) == zs * zs);
  CHECK(mono(0, 0, 0).is_zero());
  CHECK_THROWS_AS(mono(-1, 0), qdisc::DomainError);
}

TEST_CASE("product examples") {
  CHECK(z * zs == 1 - x);
  CHECK(zs * z == 1 - x.scaled(qp(2)));
  CHECK(mono(2, 1) * mono(1, -1) == (mono(3, 0) - mono(4, 0)).scaled(qp(-2)));
  CHECK(x * z == mono(1, 1));
  CHECK(x * z == (z * x).scaled(qp(2)));
  // the defining relation z* z - q^2 z z* = 1 - q^2
  CHECK(zs * z - (z * zs).scaled(qp(2)) == DiscElement(1 - qp(2)));
}

TEST_CASE("closed-form products of z and z* powers") {
  for (int j = 0; j <= 6; ++j) {
    DiscElement down(1), up(1);
    for (int i = 0; i < j; ++i) down = down * (1 - x.scaled(qp(-2 * i)));
    for (int i = 1; i <= j; ++i) up = up * (1 - x.scaled(qp(2 * i)));
    CHECK(oracle::product(mono(0, j), mono(0, -j)) == down);
    CHECK(oracle::product(mono(0, -j), mono(0, j)) == up);
  }
}

TEST_CASE("monomial product agrees with naive word rewriting") {
  for (int a = 0; a <= 3; ++a)
    for (int l = -4; l <= 4; ++l)
      for (int b = 0; b <= 3; ++b)
        for (int m = -4; m <= 4; ++m) {
          CAPTURE(a);
          CAPTURE(l);
          CAPTURE(b);
          CAPTURE(m);
          CHECK(mono(a, l) * mono(b, m) == oracle::product(mono(a, l), mono(b, m)));
        }
}

TEST_CASE("associativity on random monomial triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto a = gen::monomial(rng, 5, 5), b = gen::monomial(rng, 5, 5), c = gen::monomial(rng, 5, 5);
    DiscElement ma = mono(a.k, a.l), mb = mono(b.k, b.l), mc = mono(c.k, c.l);
    CHECK((ma * mb) * mc == ma * (mb * mc));
  }
}

TEST_CASE("star") {
  CHECK(star(z) == zs);
  CHECK(star(x) == x);
  CHECK(star(mono(1, 1)) == mono(1, -1, qp(2)));
  for (int k = 0; k <= 4; ++k)
    for (int l = -4; l <= 4; ++l) CHECK(star(mono(k, l)) == oracle::star(mono(k, l)));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    DiscElement a = gen::element(rng, 4, 4), b = gen::element(rng, 4, 4);
    CHECK(star(star(a)) == a);
    CHECK(star(a * b) == star(b) * star(a));
  }
}

TEST_CASE("grading") {
  CHECK(deg(mono(0, -3)) == -3);
  CHECK(deg(mono(5, 0)) == 0);
  auto parts = homogeneous_components(z + mono(1, -1));
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(1) == z);
  CHECK(parts.at(-1) == mono(1, -1));
  CHECK_THROWS_AS(deg(DiscElement()), qdisc::DomainError);
  CHECK_THROWS_AS(deg(z + x), qdisc::DomainError);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto a = gen::monomial(rng, 5, 5), b = gen::monomial(rng, 5, 5);
    DiscElement p = mono(a.k, a.l) * mono(b.k, b.l);
    if (!p.is_zero()) CHECK(deg(p) == a.l + b.l);
  }
}

TEST_CASE("sigma") {
  CHECK(sigma_pow(z, 1) == z.scaled(qp(2)));
  CHECK(sigma_pow(x, 7) == x);
  CHECK(sigma_pow(mono(0, -2), 2) == mono(0, -2, qp(-8)));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    DiscElement a = gen::element(rng, 4, 4), b = gen::element(rng, 4, 4);
    CHECK(sigma(a * b) == sigma(a) * sigma(b));
    CHECK(sigma_pow(a, 3) == sigma_pow(sigma_pow(a, 1), 2));
    CHECK(sigma_pow(sigma_pow(a, -1), 1) == a);
  }
}

TEST_CASE("derivation examples") {
  CHECK(partial(z) == zs);
  CHECK(partial(zs).is_zero());
  CHECK(partial(x) == mono(0, -2, -qp(-2)));
  CHECK(partial(z * z) == DiscElement(qp(2) + 1) - x.scaled(qp(4) + 1));
  for (int k = 1; k <= 8; ++k)
    CHECK(partial(mono(k, 0)) == mono(k - 1, -2, -qp(-2) * qdisc::q_int(k, 4)));
  CHECK(partial_bar(zs) == z.scaled(qp(2)));
  CHECK(partial_bar(z).is_zero());
  CHECK(partial_bar(x) == mono(0, 2, -qp(2)));
  CHECK(partial(Scalar(5)).is_zero());
}

TEST_CASE("derivations agree with letter-by-letter Leibniz on words") {
  for (int k = 0; k <= 4; ++k)
    for (int l = -4; l <= 4; ++l) {
      CAPTURE(k);
      CAPTURE(l);
      CHECK(partial(mono(k, l)) == oracle::partial(mono(k, l)));
      CHECK(partial_bar(mono(k, l)) == oracle::partial_bar(mono(k, l)));
    }
}

TEST_CASE("twisted Leibniz rule on random pairs") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 60; ++i) {
    DiscElement a = gen::element(rng, 4, 4, 2), b = gen::element(rng, 4, 4, 2);
    CHECK(partial(a * b) == partial(a) * sigma(b) + a * partial(b));
    CHECK(partial_bar(a * b) == partial_bar(a) * sigma(b) + a * partial_bar(b));
  }
}

TEST_CASE("q-derivation property and star intertwining on a monomial grid") {
  for (int k = 0; k <= 6; ++k)
    for (int l = -6; l <= 6; ++l) {
      DiscElement m = mono(k, l);
      CHECK(sigma_pow(partial(sigma(m)), -1) == partial(m).scaled(qp(4)));
      CHECK(sigma_pow(partial_bar(sigma(m)), -1) == partial_bar(m).scaled(qp(-4)));
      CHECK(partial(star(m)) == sigma(star(partial_bar(m))));
      CHECK(partial_bar(star(m)) == sigma(star(partial(m))));
      DiscElement dm = partial(m), dbm = partial_bar(m);
      if (!dm.is_zero()) CHECK(deg(dm) == l - 2);
      if (!dbm.is_zero()) CHECK(deg(dbm) == l + 2);
    }
}
