#include "qdisc/relations.hpp"

namespace qdisc {

namespace {

Scalar qp(int n) { return Scalar::q_power(n); }

}  // namespace

Report verify_disc_relations() {
  Report r("disc relations");
  verify_disc_relations(r);
  return r;
}

void verify_disc_relations(Report& r) {
  const DiscElement one(1);
  const DiscElement x = DiscElement::x();
  const DiscElement z = DiscElement::z();
  const DiscElement zs = DiscElement::zs();
  const OneForm w = OneForm::omega();
  const OneForm ws = OneForm::omega_star();
  const TwoForm v = TwoForm::volume();
  const OneForm dz = d0(z);
  const OneForm dzs = d0(zs);
  const TwoForm dw = d1(w);
  const TwoForm dws = d1(ws);
  const TwoForm ww = wedge(w, w);
  const TwoForm wsws = wedge(ws, ws);
  const TwoForm wws = wedge(w, ws);
  const TwoForm wsw = wedge(ws, w);
  const DiscElement xz = x * z;

  // differentials of the generators
  r.expect_equal("dz = z* w", "dz", dz, zs * w);
  r.expect_equal("dz = q^2 w z*", "dz", dz, (w * zs).scaled(qp(2)));
  r.expect_equal("dz* = q^2 z w*", "dz", dzs, (z * ws).scaled(qp(2)));
  r.expect_equal("dz* = w* z", "dz", dzs, ws * z);

  // w and w* recovered from dz, dz*
  const Scalar pre = qp(-2) / (1 - qp(2));
  r.expect_equal("w = q^-2/(1-q^2) (dz z - q^4 z dz)", "omegadz", w,
                 (dz * z - (z * dz).scaled(qp(4))).scaled(pre));
  r.expect_equal("w* = q^-2/(1-q^2) (z* dz* - q^4 dz* z*)", "omegadz", ws,
                 (zs * dzs - (dzs * zs).scaled(qp(4))).scaled(pre));

  r.expect_equal("z* dz = q^2 dz z*", "zdz", zs * dz, (dz * zs).scaled(qp(2)));
  r.expect_equal("dz z - q^4 z dz = q^2(1-q^2) w", "zdz", dz * z - (z * dz).scaled(qp(4)),
                 w.scaled(qp(2) * (1 - qp(2))));
  r.expect_equal("dz* z = q^2 z dz*", "zdz", dzs * z, (z * dzs).scaled(qp(2)));
  r.expect_equal("z* dz* - q^4 dz* z* = q^2(1-q^2) w*", "zdz",
                 zs * dzs - (dzs * zs).scaled(qp(4)), ws.scaled(qp(2) * (1 - qp(2))));

  // the volume form
  r.expect_equal("v = q^-6/(q^2-1) (w* w + q^8 w w*)", "volume", v,
                 (wsw + wws.scaled(qp(8))).scaled(qp(-6) / (qp(2) - 1)));
  r.expect_equal("v* = -v", "volume", star2(v), -v);

  // v a = sigma^2(a) v, with v a computed through the 1-form right action
  const std::pair<const char*, DiscElement> samples[] = {
      {"z", z},
      {"z*", zs},
      {"x", x},
      {"z^2", z * z},
      {"x z*^3", DiscElement::monomial(1, -3)},
      {"1 + x z - q z*^2", one + xz - DiscElement::monomial(0, -2, Scalar::q())},
  };
  for (const auto& [label, a] : samples) {
    const TwoForm va = (wedge(ws, w * a) + wedge(w, ws * a).scaled(qp(8))).scaled(qp(-6) / (qp(2) - 1));
    r.expect_equal(std::string("v a = sigma^2(a) v, a = ") + label, "va", va, sigma_pow(a, 2) * v);
  }

  r.expect_equal("w w* = (1-x) v", "omom", wws, (one - x) * v);
  r.expect_equal("w* w = q^6 (q^2 x - 1) v", "omom", wsw,
                 (x.scaled(qp(2)) - one).scaled(qp(6)) * v);

  const TwoForm mixed = wsw + wws.scaled(qp(4));  // w* w + q^4 w w*
  r.expect_equal("dw z* = q^-2 z* dw + z (w* w + q^4 w w*)", "domegaz", dw * zs,
                 (zs * dw).scaled(qp(-2)) + z * mixed);
  r.expect_equal("dw z = q^2 z dw + (q^2 + q^-2) z* w^2", "domegaz", dw * z,
                 (z * dw).scaled(qp(2)) + (zs * ww).scaled(qp(2) + qp(-2)));

  r.expect_equal("z* dw = -q^2 z w* w", "zdom", zs * dw, (z * wsw).scaled(-qp(2)));
  r.expect_equal("(1-x) dw = q^-4 z* dw z", "zdom", (one - x) * dw,
                 ((zs * dw) * z).scaled(qp(-4)));

  r.expect_equal("dw = (1+q^-4)/(q^2-1) z*^2 w^2", "domega", dw,
                 (zs * zs * ww).scaled((1 + qp(-4)) / (qp(2) - 1)));

  const Scalar c8 = -qp(8) / (qp(4) + 1);
  r.expect_equal("z*^3 w^2 = -q^8/(q^4+1) z (w* w + q^4 w w*)", "zomega",
                 DiscElement::monomial(0, -3) * ww, (z * mixed).scaled(c8));

  const DiscElement z4 = DiscElement::monomial(0, 4);
  r.expect_equal("(1-x)(1-q^-2 x)(1-q^-4 x) w^2 = -q^8/(q^4+1) z^4 (w* w + q^4 w w*)", "omegas",
                 ((one - x) * (one - x.scaled(qp(-2))) * (one - x.scaled(qp(-4)))) * ww,
                 (z4 * mixed).scaled(c8));
  r.expect_equal("(1-q^2 x)(1-q^4 x)(1-q^6 x) w^2 = -q^8/(q^4+1) z^4 (w* w + q^4 w w*)", "omegas",
                 ((one - x.scaled(qp(2))) * (one - x.scaled(qp(4))) * (one - x.scaled(qp(6)))) * ww,
                 (z4 * mixed).scaled(c8));

  r.expect_equal("x w^2 = 0", "xomegas", x * ww, TwoForm());
  r.expect_equal("w^2 x = 0", "xomegas", ww * x, TwoForm());
  r.expect_equal("x w*^2 = 0", "xomegas", x * wsws, TwoForm());
  r.expect_equal("w*^2 x = 0", "xomegas", wsws * x, TwoForm());

  r.expect_equal("w^2 = -q^8/(q^4+1) z^4 (w* w + q^4 w w*)", "omega.sq", ww,
                 (z4 * mixed).scaled(c8));

  r.expect_equal("x z w* w = 0", "xzomegas1", xz * wsw, TwoForm());
  r.expect_equal("w* w x z = 0", "xzomegas1", wsw * xz, TwoForm());
  r.expect_equal("x z w w* = 0", "xzomegas2", xz * wws, TwoForm());
  r.expect_equal("w w* x z = 0", "xzomegas2", wws * xz, TwoForm());

  r.expect_equal("x z v = 0", "xv", xz * v, TwoForm());
  r.expect_equal("v x z = 0", "xv", v * xz, TwoForm());
  r.expect_equal("x (1-x) v = 0", "xv", (x * (one - x)) * v, TwoForm());
  r.expect_equal("x (1-q^2 x) v = 0", "xv", (x * (one - x.scaled(qp(2)))) * v, TwoForm());
  r.expect_equal("x v = 0", "xv", x * v, TwoForm());
  r.expect_equal("v x = 0", "xv", v * x, TwoForm());

  r.expect_equal("dw = q^8 z^2 v", "full", dw, DiscElement::monomial(0, 2, qp(8)) * v);
  r.expect_equal("dw* = -z*^2 v", "full", dws, DiscElement::monomial(0, -2, Scalar(-1)) * v);
  r.expect_equal("w w* = v", "full", wws, v);
  r.expect_equal("w* w = -q^6 v", "full", wsw, v.scaled(-qp(6)));
  const Scalar c12 = (qp(2) - 1) / (qp(4) + 1);
  r.expect_equal("w^2 = q^12 (q^2-1)/(q^4+1) z^4 v", "full", ww, (z4 * v).scaled(qp(12) * c12));
  r.expect_equal("w*^2 = q^-4 (q^2-1)/(q^4+1) z*^4 v", "full", wsws,
                 (DiscElement::monomial(0, -4) * v).scaled(qp(-4) * c12));

  // dw and dw* again, now from the reconstruction of w, w* through dz, dz*
  // and the graded Leibniz rule alone: d(dz z) = -dz dz, d(z dz) = dz dz.
  r.expect_equal("dw = -q^-2 (1+q^4)/(1-q^2) dz dz", "full", dw,
                 wedge(dz, dz).scaled(-pre * (1 + qp(4))));
  r.expect_equal("dw* = q^-2 (1+q^4)/(1-q^2) dz* dz*", "full", dws,
                 wedge(dzs, dzs).scaled(pre * (1 + qp(4))));
}

}  // namespace qdisc
