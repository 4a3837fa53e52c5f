#include <algorithm>

#include "doctest.h"
#include "parser_corpus.hpp"
#include "qdisc/errors.hpp"
#include "qdisc/evaluate.hpp"

using namespace qdisc;

namespace {
using K = Expr::Kind;
ExprPtr num(long n) { return Expr::make_number(n); }
ExprPtr sym(const char* s) { return Expr::make_symbol(s); }
ExprPtr bin(K k, ExprPtr a, ExprPtr b) { return Expr::make_binary(k, std::move(a), std::move(b)); }
ExprPtr call(const char* f, std::vector<ExprPtr> args) { return Expr::make_call(f, std::move(args)); }

Scalar qp(int n) { return Scalar::q_power(n); }

ParseError parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for " << text);
  return ParseError("", 0, 0, {});
}

bool mentions(const ParseError& e, const std::string& token) {
  return std::find(e.expected().begin(), e.expected().end(), token) != e.expected().end();
}
}  // namespace

TEST_CASE("parse trees") {
  CHECK(*parse("d(z) == zs * w") ==
        *bin(K::Equal, call("d", {sym("z")}), bin(K::Mul, sym("zs"), sym("w"))));
  CHECK(*parse("q^2 * z * x") ==
        *bin(K::Mul, bin(K::Mul, Expr::make_pow(sym("q"), 2), sym("z")), sym("x")));
  CHECK(*parse("integral(x^2)") == *call("integral", {Expr::make_pow(sym("x"), 2)}));
  CHECK(*parse("-x^2") == *Expr::make_unary(K::Neg, Expr::make_pow(sym("x"), 2)));
  CHECK(*parse("-x * z") == *bin(K::Mul, Expr::make_unary(K::Neg, sym("x")), sym("z")));
  CHECK(*parse("x - z - zs") == *bin(K::Sub, bin(K::Sub, sym("x"), sym("z")), sym("zs")));
  CHECK(*parse("z^-2") == *Expr::make_pow(sym("z"), -2));
  CHECK(*parse("z^(-2)") == *parse("z^-2"));
  CHECK(*parse("7") == *num(7));
}

TEST_CASE("starred aliases") {
  CHECK(*parse("z*") == *sym("zs"));
  CHECK(*parse("w*") == *sym("ws"));
  CHECK(*parse("z* - x") == *bin(K::Sub, sym("zs"), sym("x")));
  CHECK(*parse("z*^2") == *Expr::make_pow(sym("zs"), 2));
  CHECK(*parse("z*x") == *bin(K::Mul, sym("z"), sym("x")));
  CHECK(*parse("z* x") == *bin(K::Mul, sym("z"), sym("x")));
  CHECK(*parse("z * (x)") == *bin(K::Mul, sym("z"), sym("x")));
  CHECK(*parse("d(z*)") == *call("d", {sym("zs")}));
}

TEST_CASE("syntax errors") {
  ParseError e = parse_error("z +");
  CHECK(e.line() == 1);
  CHECK(e.column() == 4);
  CHECK(mentions(e, "number"));
  CHECK(mentions(e, "'('"));

  e = parse_error("z x");
  CHECK(e.column() == 3);
  CHECK(mentions(e, "'*'"));

  e = parse_error("x +\n  (z");
  CHECK(e.line() == 2);
  CHECK(mentions(e, "')'"));

  e = parse_error("foo(x)");
  CHECK(mentions(e, "integral"));
  e = parse_error("d(x, z)");
  CHECK(std::string(e.what()).find("argument") != std::string::npos);
  e = parse_error("x^y");
  CHECK(mentions(e, "integer"));
  e = parse_error("x == z == w");
  CHECK(!mentions(e, "'=='"));
  e = parse_error("(x == z)");
  CHECK(mentions(e, "')'"));
  e = parse_error("t");
  CHECK(std::string(e.what()).find("unknown symbol") != std::string::npos);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("x $ z"), ParseError);
  CHECK_THROWS_AS(parse("x^2^3"), ParseError);
  CHECK_THROWS_AS(parse("sigma()"), ParseError);
}

TEST_CASE("round trip on the corpus") {
  const auto& corpus = parser_corpus();
  CHECK(corpus.size() >= 50);
  for (const auto& text : corpus) {
    CAPTURE(text);
    const ExprPtr once = parse(text);
    const std::string printed = print(*once);
    const ExprPtr twice = parse(printed);
    CHECK(*once == *twice);
    CHECK(print(*twice) == printed);
  }
}

TEST_CASE("corpus covers every function and symbol") {
  std::string all;
  for (const auto& text : parser_corpus()) all += print(*parse(text)) + " ";
  for (const auto& f : known_functions()) CHECK(all.find(f.name + "(") != std::string::npos);
  for (const auto& s : known_symbols()) CHECK(all.find(s) != std::string::npos);
}

TEST_CASE("evaluation examples") {
  CHECK(to_string(evaluate("z * zs")) == "1 - x");
  CHECK(std::get<TwoForm>(evaluate("w * ws")) == TwoForm::volume());
  CHECK(std::get<Scalar>(evaluate("integral(x)")) == (qp(2) + 1) / (qp(4) + 1));
  CHECK(std::get<TwoForm>(evaluate("d(d(x))")).is_zero());
  CHECK(std::get<long>(evaluate("deg(w)")) == 2);
  CHECK(std::get<long>(evaluate("deg(ws)")) == -2);
  CHECK(std::get<long>(evaluate("deg(v)")) == 0);
  CHECK(std::get<long>(evaluate("deg(zs^3)")) == -3);
  CHECK(std::get<DiscElement>(evaluate("z^-2")) == DiscElement::monomial(0, -2));
  CHECK(std::get<DiscElement>(evaluate("y", {3})) == DiscElement::monomial(0, 3));
  CHECK(std::holds_alternative<HigherForm>(evaluate("w * ws * w")));
  CHECK(std::holds_alternative<HigherForm>(evaluate("d(v)")));
  CHECK(std::get<Scalar>(evaluate("2/4")) == Scalar(mpq_class(1, 2)));
  const auto dec = std::get<CokernelDecomposition>(evaluate("reduce(x)"));
  CHECK(dec.constant == (qp(2) + 1) / (qp(4) + 1));
}

TEST_CASE("canonical output parses back to the same value") {
  for (const char* text : {"z * zs", "x * z * zs^2", "d(x^2 * z)", "d(z) * d(zs)",
                           "(q^2 + 1) / (q^4 - 1) * x^3", "star(d(x * z^2))", "q^-3 * z^2 * v"}) {
    CAPTURE(text);
    const Value v = evaluate(text);
    CHECK(check(to_string(v) + " == " + text).equal);
  }
}

TEST_CASE("evaluation is deterministic") {
  for (const auto& text : parser_corpus()) {
    CAPTURE(text);
    try {
      CHECK(to_string(evaluate(text)) == to_string(evaluate(text)));
    } catch (const TypeError&) {
    } catch (const DomainError&) {
    }
  }
}

TEST_CASE("check") {
  CHECK(check("zs*z == 1 - q^2*x").equal);
  CHECK(check("d(z) == zs*w").equal);
  CheckResult r = check("w*ws == ws*w");
  CHECK_FALSE(r.equal);
  CHECK(r.lhs == "v");
  CHECK(check(r.rhs + " == -q^6 * v").equal);
  CHECK(check("d(d(x*z)) == 0").equal);
  CHECK_FALSE(check("d(z) == 0").equal);
  CHECK(check("w^3 == 0").equal);
  CHECK(check("reduce(1) == reduce(1)").equal);
  CHECK_THROWS_AS(check("d(z) == x"), TypeError);
  CHECK_THROWS_AS(check("w == v"), TypeError);
  CHECK_THROWS_AS(check("x + z"), TypeError);
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(evaluate("w + v"), TypeError);
  CHECK_THROWS_AS(evaluate("x / z"), TypeError);
  CHECK_THROWS_AS(evaluate("x^-1"), TypeError);
  CHECK_THROWS_AS(evaluate("del(w)"), TypeError);
  CHECK_THROWS_AS(evaluate("integral(w)"), TypeError);
  CHECK_THROWS_AS(evaluate("sigma(z, q)"), TypeError);
  CHECK_THROWS_AS(evaluate("deg(z + x)"), DomainError);
  CHECK_THROWS_AS(evaluate("1/0"), DivisionByZero);
  CHECK_THROWS_AS(evaluate("x / (q - q)"), DivisionByZero);
  CHECK(std::get<OneForm>(evaluate("w + 0")) == OneForm::omega());
}
