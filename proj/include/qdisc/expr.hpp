#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qdisc {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Syntax tree of the expression language. Parentheses leave no trace, so
// two texts that differ only in redundant parentheses parse to equal trees.
struct Expr {
  enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow, Call, Equal };

  Kind kind;
  mpz_class number;            // Number
  std::string name;            // Symbol (canonical spelling) or Call
  int exponent = 0;            // Pow
  std::vector<ExprPtr> args;   // operands, base, or call arguments

  static ExprPtr make_number(mpz_class n);
  static ExprPtr make_symbol(std::string name);
  static ExprPtr make_unary(Kind kind, ExprPtr a);
  static ExprPtr make_binary(Kind kind, ExprPtr a, ExprPtr b);
  static ExprPtr make_pow(ExprPtr base, int exponent);
  static ExprPtr make_call(std::string name, std::vector<ExprPtr> args);

  friend bool operator==(const Expr& a, const Expr& b);
};

// Generators accepted as symbols: q x y z zs w ws v, with z* and w* as
// aliases of zs and ws when the star is attached to the letter and not
// followed by an operand.
const std::vector<std::string>& known_symbols();
// Functions with their accepted argument counts.
struct FunctionSpec {
  std::string name;
  int min_args;
  int max_args;
};
const std::vector<FunctionSpec>& known_functions();

// expr ['==' expr]. Throws ParseError.
ExprPtr parse(std::string_view text);

// Text that parses back to the same tree, with minimal parentheses.
std::string print(const Expr& e);

}  // namespace qdisc
