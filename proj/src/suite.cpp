#include "qdisc/suite.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "qdisc/cone.hpp"
#include "qdisc/integral.hpp"
#include "qdisc/relations.hpp"

namespace qdisc {

namespace {

Scalar qp(int n) { return Scalar::q_power(n); }

std::string text(const DiscElement& a) { return a.to_string(); }
std::string text(const OneForm& a) { return a.to_string(); }

class Sampler {
 public:
  Sampler(std::uint64_t seed, int max_k, int max_l) : rng_(seed), k_(0, max_k), l_(-max_l, max_l) {}

  DiscElement monomial() { return DiscElement::monomial(k_(rng_), l_(rng_)); }

  // m1 w + m2 w* with one of the two coefficients possibly zero.
  OneForm one_form() {
    std::uniform_int_distribution<int> shape(0, 2);
    switch (shape(rng_)) {
      case 0: return monomial() * OneForm::omega();
      case 1: return monomial() * OneForm::omega_star();
      default: return monomial() * OneForm::omega() + monomial() * OneForm::omega_star();
    }
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<int> k_;
  std::uniform_int_distribution<int> l_;
};

}  // namespace

void verify_d_squared(int max_k, int max_l, Report& r) {
  for (int k = 0; k <= max_k; ++k)
    for (int l = -max_l; l <= max_l; ++l) {
      const DiscElement m = DiscElement::monomial(k, l);
      r.expect_equal("d(d(" + text(m) + ")) = 0", "sec.diff", d1(d0(m)), TwoForm());
    }
}

void verify_leibniz(std::uint64_t seed, int pairs, int max_k, int max_l, Report& r) {
  Sampler s(seed, max_k, max_l);
  for (int i = 0; i < pairs; ++i) {
    const DiscElement a = s.monomial(), b = s.monomial();
    const OneForm nu = s.one_form();
    const std::string ab = "a = " + text(a) + ", b = " + text(b);
    r.expect_equal("del(ab) = del(a) sigma(b) + a del(b); " + ab, "partial", partial(a * b),
                   partial(a) * sigma(b) + a * partial(b));
    r.expect_equal("delbar(ab) = delbar(a) sigma(b) + a delbar(b); " + ab, "partial",
                   partial_bar(a * b), partial_bar(a) * sigma(b) + a * partial_bar(b));
    r.expect_equal("d(ab) = d(a) b + a d(b); " + ab, "diff", d0(a * b), d0(a) * b + a * d0(b));
    const std::string an = "a = " + text(a) + ", nu = " + text(nu);
    r.expect_equal("d(a nu) = da nu + a d(nu); " + an, "sec.diff", d1(a * nu),
                   wedge(d0(a), nu) + a * d1(nu));
    r.expect_equal("d(nu a) = d(nu) a - nu da; " + an, "sec.diff", d1(nu * a),
                   d1(nu) * a - wedge(nu, d0(a)));
  }
}

void verify_q_derivations(int max_k, int max_l, Report& r) {
  for (int k = 0; k <= max_k; ++k)
    for (int l = -max_l; l <= max_l; ++l) {
      const DiscElement m = DiscElement::monomial(k, l);
      r.expect_equal("sigma^-1 del sigma = q^4 del on " + text(m), "q-deriv",
                     sigma_pow(partial(sigma(m)), -1), partial(m).scaled(qp(4)));
      r.expect_equal("sigma^-1 delbar sigma = q^-4 delbar on " + text(m), "q-deriv",
                     sigma_pow(partial_bar(sigma(m)), -1), partial_bar(m).scaled(qp(-4)));
    }
}

void verify_star(std::uint64_t seed, int samples, int max_k, int max_l, Report& r) {
  Sampler s(seed, max_k, max_l);
  r.expect_equal("v* = -v", "volume", star2(TwoForm::volume()), -TwoForm::volume());
  r.expect_equal("w* = ws", "sec.diff", star1(OneForm::omega()), OneForm::omega_star());
  for (int i = 0; i < samples; ++i) {
    const DiscElement a = s.monomial(), b = s.monomial();
    const OneForm nu = s.one_form(), mu = s.one_form();
    r.expect_equal("(ab)* = b* a*; a = " + text(a) + ", b = " + text(b), "sec.diff", star(a * b),
                   star(b) * star(a));
    r.expect_equal("(da)* = d(a*); a = " + text(a), "sec.diff", star1(d0(a)), d0(star(a)));
    r.expect_equal("(d nu)* = d(nu*); nu = " + text(nu), "sec.diff", star2(d1(nu)),
                   d1(star1(nu)));
    r.expect_equal("(nu mu)* = -mu* nu*; nu = " + text(nu) + ", mu = " + text(mu), "sec.diff",
                   star2(wedge(nu, mu)), -wedge(star1(mu), star1(nu)));
  }
}

void verify_torsion(std::uint64_t seed, int samples, Report& r) {
  Sampler s(seed, 4, 4);
  const DiscElement x = DiscElement::x();
  int done = 0;
  while (done < samples) {
    const TwoForm t = wedge(s.one_form(), s.one_form());
    if (t.is_zero()) continue;
    ++done;
    r.expect_equal("x t = 0; t = " + t.to_string(), "xv", x * t, TwoForm());
    r.expect_equal("t x = 0; t = " + t.to_string(), "xv", t * x, TwoForm());
  }
}

void verify_numeric(const std::vector<mpq_class>& samples, Report& r) {
  // Snapshot first: the new records must not be compared with themselves.
  const Report snapshot = r;
  for (const auto& q0 : samples) {
    const NumericAgreement a = numeric_agreement(snapshot, q0);
    std::ostringstream detail;
    detail << a.compared << " identities agree with the exact verdict";
    if (a.poles) detail << ", " << a.poles << " skipped at a pole";
    if (a.disagreements) {
      detail << "; " << a.disagreements << " disagree, first: " << a.mismatched.front();
    }
    r.record("exact and numeric verdicts agree at q = " + q0.get_str(), "numeric",
             a.disagreements == 0 && a.compared > 0, detail.str());
  }
}

Report verify_suite(const SuiteOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  Report r("quantum disc calculus");
  r.set_corruption(o.corrupt);

  verify_disc_relations(r);
  verify_d_squared(o.d2_max_k, o.d2_max_l, r);
  const int small_k = std::min(o.max_k, 5), small_l = std::min(o.max_l, 5);
  verify_leibniz(o.seed, o.random_pairs, small_k, small_l, r);
  verify_q_derivations(o.max_k, o.max_l, r);
  verify_star(o.seed + 1, std::max(1, o.random_pairs / 4), small_k, small_l, r);
  verify_torsion(o.seed + 2, std::max(1, o.random_pairs / 4), r);

  for (int n : o.cones) verify_cone(ConeParams(n), r);
  for (int n = 2; n <= o.crit_max; ++n) {
    if (std::find(o.cones.begin(), o.cones.end(), n) != o.cones.end()) continue;
    r.record("N=" + std::to_string(n) + ": no admissible k solves q^{2k}(q^{2N}+1) = q^2+1",
             "crit", coprimality_criterion_holds(n), "k in [-2N+2, -N-1] and [2, N-1]");
  }

  verify_integral(o.max_k, o.max_l, r);
  verify_numeric(o.q_samples, r);

  r.set_elapsed(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return r;
}

}  // namespace qdisc
