#pragma once

#include "qdisc/cone.hpp"
#include "qdisc/disc.hpp"
#include "qdisc/report.hpp"

namespace qdisc {

// A right-linear map f from 1-forms to the algebra, given by its values on
// the free generators w and w*.
struct CotangentFunctional {
  DiscElement on_omega;
  DiscElement on_omega_star;
  bool operator==(const CotangentFunctional&) const = default;
};

// input = constant * 1 + divergence(witness)
struct CokernelDecomposition {
  Scalar constant;
  CotangentFunctional witness;
};

// q^4 partial(f(w)) + q^-4 partial_bar(f(w*))
DiscElement divergence(const CotangentFunctional& f);

// The integral, normalised by its value `lambda` on 1:
//   x^k z^l  ->  lambda [k+1]_{q^2} / [k+1]_{q^4}  if l = 0, else 0.
Scalar integral_lambda(const DiscElement& a, const Scalar& lambda = Scalar(1));

// Writes a as a multiple of 1 plus a divergence, with an explicit preimage.
// Terms are eliminated in order of decreasing |l|, then decreasing k:
//   |l| >= 2   one derivative of x^{k+1} z^{l -+ 2} hits x^k z^l exactly;
//   |l| == 1   derivatives of x^{k-1} z^2 z* (and z* z^2 - q^4 z^2 z* for
//              k = 0), or their adjoints, reduce the x-power;
//   l == 0     derivatives of x^{k-1} z^2 reduce the x-power down to 1.
// The constant equals integral_lambda(a).
CokernelDecomposition cokernel_reduce(const DiscElement& a);

// a - constant - divergence(witness); zero for a correct decomposition.
DiscElement cokernel_residual(const DiscElement& a, const CokernelDecomposition& dec);

// integral_lambda(partial(m)) = integral_lambda(partial_bar(m)) = 0 for all
// monomials with k <= k_max and |l| <= l_max.
Report verify_integral_vanishing(int k_max, int l_max);
void verify_integral_vanishing(int k_max, int l_max, Report& report);

// The closed-form derivative values used by the reduction, the recursion
// for the integral on powers of x, and sound decompositions of every
// monomial in range.
void verify_integral(int k_max, int l_max, Report& report);

// The restriction of the integral to the cone. Throws DomainError on
// non-cone input.
Scalar cone_integral(const DiscElement& a, const ConeParams& cone);

}  // namespace qdisc
