#include "qdisc/evaluate.hpp"

#include <sstream>

#include "qdisc/errors.hpp"

namespace qdisc {

namespace {

bool is_scalar_like(const Value& v) {
  return std::holds_alternative<Scalar>(v) || std::holds_alternative<long>(v);
}

// Form degree of an arithmetic value, or -1 for booleans and decompositions.
int grade(const Value& v) {
  switch (v.index()) {
    case 0:
    case 1:
    case 5: return 0;
    case 2: return 1;
    case 3: return 2;
    case 4: return 3;
    default: return -1;
  }
}

int require_grade(const Value& v, const char* what) {
  const int g = grade(v);
  if (g < 0) throw TypeError(std::string(what) + " is not defined on " + kind_name(v));
  return g;
}

Scalar as_scalar(const Value& v) {
  if (const auto* n = std::get_if<long>(&v)) return Scalar(*n);
  return std::get<Scalar>(v);
}

DiscElement as_disc(const Value& v, const char* what) {
  if (grade(v) != 0) throw TypeError(std::string(what) + " expects an algebra element, got " + kind_name(v));
  if (const auto* a = std::get_if<DiscElement>(&v)) return *a;
  return DiscElement(as_scalar(v));
}

bool value_is_zero(const Value& v) {
  switch (v.index()) {
    case 0: return std::get<Scalar>(v).is_zero();
    case 1: return std::get<DiscElement>(v).is_zero();
    case 2: return std::get<OneForm>(v).is_zero();
    case 3: return std::get<TwoForm>(v).is_zero();
    case 4: return true;
    case 5: return std::get<long>(v) == 0;
    default: return false;
  }
}

Value scale(const Value& v, const Scalar& s) {
  switch (v.index()) {
    case 1: return std::get<DiscElement>(v).scaled(s);
    case 2: return std::get<OneForm>(v).scaled(s);
    case 3: return std::get<TwoForm>(v).scaled(s);
    case 4: return HigherForm{};
    default: return as_scalar(v) * s;
  }
}

Value negate(const Value& v) {
  require_grade(v, "negation");
  if (const auto* n = std::get_if<long>(&v)) return -*n;
  return scale(v, Scalar(-1));
}

Value add(const Value& a, const Value& b, bool subtract) {
  const int ga = require_grade(a, "addition"), gb = require_grade(b, "addition");
  if (std::holds_alternative<long>(a) && std::holds_alternative<long>(b)) {
    const long x = std::get<long>(a), y = std::get<long>(b);
    return subtract ? x - y : x + y;
  }
  if (is_scalar_like(a) && is_scalar_like(b))
    return subtract ? as_scalar(a) - as_scalar(b) : as_scalar(a) + as_scalar(b);
  if (ga != gb) {
    if (value_is_zero(a)) return subtract ? negate(b) : b;
    if (value_is_zero(b)) return a;
    throw TypeError("cannot add " + kind_name(a) + " and " + kind_name(b));
  }
  const Scalar sign(subtract ? -1 : 1);
  switch (ga) {
    case 0: return as_disc(a, "addition") + as_disc(b, "addition").scaled(sign);
    case 1: return std::get<OneForm>(a) + std::get<OneForm>(b).scaled(sign);
    case 2: return std::get<TwoForm>(a) + std::get<TwoForm>(b).scaled(sign);
    default: return HigherForm{};
  }
}

Value multiply(const Value& a, const Value& b) {
  const int ga = require_grade(a, "multiplication"), gb = require_grade(b, "multiplication");
  if (std::holds_alternative<long>(a) && std::holds_alternative<long>(b))
    return Scalar(std::get<long>(a)) * Scalar(std::get<long>(b));
  if (is_scalar_like(a)) return scale(b, as_scalar(a));
  if (is_scalar_like(b)) return scale(a, as_scalar(b));
  if (ga + gb >= 3) return HigherForm{};
  switch (ga * 3 + gb) {
    case 0: return std::get<DiscElement>(a) * std::get<DiscElement>(b);
    case 1: return std::get<DiscElement>(a) * std::get<OneForm>(b);
    case 2: return std::get<DiscElement>(a) * std::get<TwoForm>(b);
    case 3: return std::get<OneForm>(a) * std::get<DiscElement>(b);
    case 4: return wedge(std::get<OneForm>(a), std::get<OneForm>(b));
    default: return std::get<TwoForm>(a) * std::get<DiscElement>(b);
  }
}

Value divide(const Value& a, const Value& b) {
  require_grade(a, "division");
  if (!is_scalar_like(b)) throw TypeError("division by " + kind_name(b) + "; only scalars invert");
  return multiply(a, as_scalar(b).inv());
}

Value power(const Value& v, int n) {
  const int g = require_grade(v, "exponentiation");
  if (is_scalar_like(v)) return as_scalar(v).pow(n);
  if (n == 0) return Scalar(1);
  if (g == 0) {
    const auto& a = std::get<DiscElement>(v);
    if (n > 0) return a.pow(n);
    // z^-n means z*^n; more generally (c z^l)^n = c^n z^{l n}
    if (a.size() == 1) {
      const auto& [m, c] = *a.terms().begin();
      if (m.k == 0 && m.l != 0) return DiscElement::monomial(0, m.l * n, c.pow(n));
    }
    throw TypeError("negative exponent on " + a.to_string() +
                    "; only powers of z and z* accept negative exponents");
  }
  if (n < 0) throw TypeError("negative exponent on a " + kind_name(v));
  if (n == 1) return v;
  if (g == 1 && n == 2) return wedge(std::get<OneForm>(v), std::get<OneForm>(v));
  return HigherForm{};
}

long as_integer(const Value& v, const char* what) {
  if (const auto* n = std::get_if<long>(&v)) return *n;
  if (const auto* s = std::get_if<Scalar>(&v)) {
    if (s->denominator().is_one() && s->numerator().is_constant()) {
      const mpz_class& c = s->numerator().is_zero() ? mpz_class(0) : s->numerator().leading();
      if (c.fits_slong_p()) return c.get_si();
    }
  }
  throw TypeError(std::string(what) + " must be an integer, got " + to_string(v));
}

Value apply(const std::string& f, const std::vector<Value>& args, const EvalContext&) {
  const Value& a = args[0];
  if (f == "d") {
    switch (require_grade(a, "d")) {
      case 0: return d0(as_disc(a, "d"));
      case 1: return d1(std::get<OneForm>(a));
      default: return HigherForm{};
    }
  }
  if (f == "star") {
    switch (a.index()) {
      case 1: return star(std::get<DiscElement>(a));
      case 2: return star1(std::get<OneForm>(a));
      case 3: return star2(std::get<TwoForm>(a));
      default:
        require_grade(a, "star");
        return a;  // q is real: scalars are fixed
    }
  }
  if (f == "sigma") {
    const long p = args.size() > 1 ? as_integer(args[1], "the power of sigma") : 1;
    if (is_scalar_like(a)) return a;
    return sigma_pow(as_disc(a, "sigma"), static_cast<int>(p));
  }
  if (f == "del") return partial(as_disc(a, "del"));
  if (f == "delbar") return partial_bar(as_disc(a, "delbar"));
  if (f == "deg") {
    switch (require_grade(a, "deg")) {
      case 0:
        if (is_scalar_like(a)) {
          if (value_is_zero(a)) throw DomainError("degree of zero");
          return 0L;
        }
        return static_cast<long>(deg(std::get<DiscElement>(a)));
      case 1: return static_cast<long>(deg(std::get<OneForm>(a)));
      case 2: return static_cast<long>(deg(std::get<TwoForm>(a)));
      default: throw DomainError("degree of a form of degree three or more");
    }
  }
  if (f == "proj") return lift(project_circle(as_disc(a, "proj")));
  if (f == "integral") return integral_lambda(as_disc(a, "integral"));
  if (f == "reduce") return cokernel_reduce(as_disc(a, "reduce"));
  if (f == "div2") return divergence({as_disc(a, "div2"), as_disc(args[1], "div2")});
  throw TypeError("unknown function " + f);
}

struct Comparison {
  bool equal;
  std::string kind;
};

Comparison compare(const Value& a, const Value& b) {
  if (std::holds_alternative<bool>(a) || std::holds_alternative<bool>(b))
    throw TypeError("equalities cannot be nested");
  const bool da = std::holds_alternative<CokernelDecomposition>(a);
  const bool db = std::holds_alternative<CokernelDecomposition>(b);
  if (da || db) {
    if (!(da && db)) throw TypeError("kind mismatch: " + kind_name(a) + " vs " + kind_name(b));
    const auto& x = std::get<CokernelDecomposition>(a);
    const auto& y = std::get<CokernelDecomposition>(b);
    return {x.constant == y.constant && x.witness == y.witness, "Decomposition"};
  }
  const int ga = grade(a), gb = grade(b);
  if (is_scalar_like(a) && is_scalar_like(b))
    return {as_scalar(a) == as_scalar(b), kind_name(a) == kind_name(b) ? kind_name(a) : "Scalar"};
  if (ga != gb) {
    // the scalar 0 stands for the zero of every kind
    if (is_scalar_like(a) && value_is_zero(a)) return {value_is_zero(b), kind_name(b)};
    if (is_scalar_like(b) && value_is_zero(b)) return {value_is_zero(a), kind_name(a)};
    throw TypeError("kind mismatch: " + kind_name(a) + " vs " + kind_name(b));
  }
  switch (ga) {
    case 0: return {as_disc(a, "==") == as_disc(b, "=="), "Algebra"};
    case 1: return {std::get<OneForm>(a) == std::get<OneForm>(b), "OneForm"};
    case 2: return {std::get<TwoForm>(a) == std::get<TwoForm>(b), "TwoForm"};
    default: return {true, "HigherForm"};
  }
}

Value symbol(const std::string& name, const EvalContext& ctx) {
  if (name == "q") return Scalar::q();
  if (name == "x") return DiscElement::x();
  if (name == "z") return DiscElement::z();
  if (name == "zs") return DiscElement::zs();
  if (name == "y") return DiscElement::monomial(0, ctx.cone_order);
  if (name == "w") return OneForm::omega();
  if (name == "ws") return OneForm::omega_star();
  if (name == "v") return TwoForm::volume();
  throw TypeError("unknown symbol " + name);
}

}  // namespace

Value evaluate(const Expr& e, const EvalContext& ctx) {
  switch (e.kind) {
    case Expr::Kind::Number:
      if (e.number.fits_slong_p()) return e.number.get_si();
      return Scalar(e.number);
    case Expr::Kind::Symbol: return symbol(e.name, ctx);
    case Expr::Kind::Neg: return negate(evaluate(*e.args[0], ctx));
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return add(evaluate(*e.args[0], ctx), evaluate(*e.args[1], ctx), e.kind == Expr::Kind::Sub);
    case Expr::Kind::Mul: return multiply(evaluate(*e.args[0], ctx), evaluate(*e.args[1], ctx));
    case Expr::Kind::Div: return divide(evaluate(*e.args[0], ctx), evaluate(*e.args[1], ctx));
    case Expr::Kind::Pow: return power(evaluate(*e.args[0], ctx), e.exponent);
    case Expr::Kind::Call: {
      std::vector<Value> args;
      for (const auto& a : e.args) args.push_back(evaluate(*a, ctx));
      return apply(e.name, args, ctx);
    }
    case Expr::Kind::Equal:
      return compare(evaluate(*e.args[0], ctx), evaluate(*e.args[1], ctx)).equal;
  }
  throw TypeError("malformed expression");
}

Value evaluate(std::string_view text, const EvalContext& ctx) { return evaluate(*parse(text), ctx); }

std::string kind_name(const Value& v) {
  static const char* names[] = {"Scalar",     "Algebra", "OneForm", "TwoForm",
                                "HigherForm", "Integer", "Boolean", "Decomposition"};
  return names[v.index()];
}

std::string to_string(const Value& v) {
  switch (v.index()) {
    case 0: return std::get<Scalar>(v).to_string();
    case 1: return std::get<DiscElement>(v).to_string();
    case 2: return std::get<OneForm>(v).to_string();
    case 3: return std::get<TwoForm>(v).to_string();
    case 4: return "0";
    case 5: return std::to_string(std::get<long>(v));
    case 6: return std::get<bool>(v) ? "true" : "false";
    default: {
      const auto& dec = std::get<CokernelDecomposition>(v);
      std::ostringstream os;
      os << "constant = " << dec.constant.to_string() << '\n'
         << "f(w) = " << dec.witness.on_omega.to_string() << '\n'
         << "f(ws) = " << dec.witness.on_omega_star.to_string();
      return os.str();
    }
  }
}

CheckResult check(const Expr& e, const EvalContext& ctx) {
  if (e.kind != Expr::Kind::Equal) throw TypeError("check expects an equality 'lhs == rhs'");
  const Value lhs = evaluate(*e.args[0], ctx);
  const Value rhs = evaluate(*e.args[1], ctx);
  const Comparison c = compare(lhs, rhs);
  return {c.equal, to_string(lhs), to_string(rhs), c.kind};
}

CheckResult check(std::string_view text, const EvalContext& ctx) { return check(*parse(text), ctx); }

}  // namespace qdisc
