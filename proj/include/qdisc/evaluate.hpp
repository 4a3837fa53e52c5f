#pragma once

#include <string>
#include <variant>

#include "qdisc/calculus.hpp"
#include "qdisc/expr.hpp"
#include "qdisc/integral.hpp"

namespace qdisc {

// Forms of degree three or more. The calculus stops at degree two, so every
// such form is zero.
struct HigherForm {
  bool operator==(const HigherForm&) const = default;
};

using Value = std::variant<Scalar, DiscElement, OneForm, TwoForm, HigherForm, long, bool,
                           CokernelDecomposition>;

struct EvalContext {
  int cone_order = 2;  // y stands for z^N
};

// Throws TypeError for ill-kinded input, DomainError for out-of-domain
// arguments (e.g. deg of an inhomogeneous element) and DivisionByZero.
Value evaluate(const Expr& e, const EvalContext& ctx = {});
Value evaluate(std::string_view text, const EvalContext& ctx = {});

// "Scalar", "Algebra", "OneForm", "TwoForm", "HigherForm", "Integer",
// "Boolean" or "Decomposition".
std::string kind_name(const Value& v);
// Canonical text; algebra elements and forms print in the input language.
std::string to_string(const Value& v);

struct CheckResult {
  bool equal;
  std::string lhs;
  std::string rhs;
  std::string kind;
};

// Evaluates both sides of an equality. Throws TypeError if the root is not
// an equality or if the sides have different kinds; a zero scalar matches
// the zero of every kind.
CheckResult check(const Expr& e, const EvalContext& ctx = {});
CheckResult check(std::string_view text, const EvalContext& ctx = {});

}  // namespace qdisc
