#include "qdisc/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qdisc/errors.hpp"

namespace qdisc {

ExprPtr Expr::make_number(mpz_class n) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Number;
  e->number = std::move(n);
  return e;
}

ExprPtr Expr::make_symbol(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Symbol;
  e->name = std::move(name);
  return e;
}

ExprPtr Expr::make_unary(Kind kind, ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->args.push_back(std::move(a));
  return e;
}

ExprPtr Expr::make_binary(Kind kind, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->args.push_back(std::move(a));
  e->args.push_back(std::move(b));
  return e;
}

ExprPtr Expr::make_pow(ExprPtr base, int exponent) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Pow;
  e->exponent = exponent;
  e->args.push_back(std::move(base));
  return e;
}

ExprPtr Expr::make_call(std::string name, std::vector<ExprPtr> args) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Call;
  e->name = std::move(name);
  e->args = std::move(args);
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.number != b.number || a.name != b.name || a.exponent != b.exponent ||
      a.args.size() != b.args.size())
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

const std::vector<std::string>& known_symbols() {
  static const std::vector<std::string> symbols = {"q", "x", "y", "z", "zs", "w", "ws", "v"};
  return symbols;
}

const std::vector<FunctionSpec>& known_functions() {
  static const std::vector<FunctionSpec> functions = {
      {"d", 1, 1},        {"star", 1, 1},  {"sigma", 1, 2},    {"del", 1, 1},
      {"delbar", 1, 1},   {"deg", 1, 1},   {"proj", 1, 1},     {"integral", 1, 1},
      {"reduce", 1, 1},   {"div2", 2, 2},
  };
  return functions;
}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, EqEq, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

bool starts_operand(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{Tok::End, "", line, col};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tok::Number;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(s.substr(i, j - i));
      // z* and w*: the star belongs to the letter unless an operand follows.
      if ((t.text == "z" || t.text == "w") && j < s.size() && s[j] == '*') {
        std::size_t k = j + 1;
        while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
        if (k >= s.size() || !starts_operand(s[k])) {
          t.text += "s";
          ++j;
        }
      }
      advance(j - i);
    } else if (c == '=' && i + 1 < s.size() && s[i + 1] == '=') {
      t.kind = Tok::EqEq;
      t.text = "==";
      advance(2);
    } else {
      switch (c) {
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '/': t.kind = Tok::Slash; break;
        case '^': t.kind = Tok::Caret; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case ',': t.kind = Tok::Comma; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line, col,
                           {"number", "identifier", "operator"});
      }
      t.text = std::string(1, c);
      advance(1);
    }
    out.push_back(std::move(t));
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const std::vector<std::string> kOperandStart = {"number", "identifier", "'('", "'-'"};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr top() {
    ExprPtr lhs = expr();
    if (peek().kind == Tok::EqEq) {
      next();
      ExprPtr rhs = expr();
      lhs = Expr::make_binary(Expr::Kind::Equal, std::move(lhs), std::move(rhs));
      expect_end(false);
    } else {
      expect_end(true);
    }
    return lhs;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    const Token& t = peek();
    std::ostringstream os;
    os << what << " at " << describe(t) << "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
    throw ParseError(os.str(), t.line, t.column, std::move(expected));
  }

  // After a complete operand: what may legally follow.
  std::vector<std::string> continuations(bool allow_eq) const {
    std::vector<std::string> e = {"'+'", "'-'", "'*'", "'/'", "'^'"};
    if (depth_ > 0) {
      e.push_back("')'");
      if (in_call_) e.push_back("','");
    }
    if (allow_eq && depth_ == 0) e.push_back("'=='");
    if (depth_ == 0) e.push_back("end of input");
    return e;
  }

  void expect_end(bool allow_eq) const {
    if (peek().kind != Tok::End) fail("unexpected token", continuations(allow_eq));
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const auto kind = next().kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      e = Expr::make_binary(kind, std::move(e), term());
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    for (;;) {
      const Tok k = peek().kind;
      if (k == Tok::Star || k == Tok::Slash) {
        next();
        e = Expr::make_binary(k == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div, std::move(e),
                              factor());
      } else if (k == Tok::Number || k == Tok::Ident || k == Tok::LParen) {
        fail("juxtaposition is not multiplication; write '*'", continuations(true));
      } else {
        return e;
      }
    }
  }

  ExprPtr factor() {
    if (peek().kind == Tok::Minus) {
      next();
      return Expr::make_unary(Expr::Kind::Neg, factor());
    }
    ExprPtr base = atom();
    if (peek().kind != Tok::Caret) return base;
    next();
    return Expr::make_pow(std::move(base), exponent());
  }

  int exponent() {
    bool paren = false;
    if (peek().kind == Tok::LParen) {
      next();
      paren = true;
    }
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      next();
      negative = true;
    }
    if (peek().kind != Tok::Number)
      fail("exponent must be an integer literal", negative || paren
                                                      ? std::vector<std::string>{"integer"}
                                                      : std::vector<std::string>{"integer", "'-'", "'('"});
    const Token& t = peek();
    mpz_class n(t.text);
    if (negative) n = -n;
    if (!n.fits_sint_p() || abs(n) > 100000) fail("exponent out of range", {"smaller integer"});
    next();
    if (paren) {
      if (peek().kind != Tok::RParen) fail("unclosed exponent", {"')'"});
      next();
    }
    return static_cast<int>(n.get_si());
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        next();
        return Expr::make_number(mpz_class(t.text));
      case Tok::LParen: {
        next();
        ++depth_;
        const bool saved = in_call_;
        in_call_ = false;
        ExprPtr e = expr();
        in_call_ = saved;
        --depth_;
        if (peek().kind != Tok::RParen) {
          ++depth_;
          fail("unclosed parenthesis", continuations(false));
        }
        next();
        return e;
      }
      case Tok::Ident: {
        std::string name = t.text;
        next();
        if (peek().kind == Tok::LParen) return call(name, t);
        const auto& syms = known_symbols();
        if (std::find(syms.begin(), syms.end(), name) == syms.end()) {
          --pos_;
          fail("unknown symbol '" + name + "'", {"q", "x", "y", "z", "zs", "w", "ws", "v", "function call"});
        }
        return Expr::make_symbol(std::move(name));
      }
      default:
        fail("expected an operand", kOperandStart);
    }
  }

  ExprPtr call(const std::string& name, const Token& at) {
    const auto& funcs = known_functions();
    auto it = std::find_if(funcs.begin(), funcs.end(),
                           [&](const FunctionSpec& f) { return f.name == name; });
    if (it == funcs.end()) {
      std::vector<std::string> names;
      for (const auto& f : funcs) names.push_back(f.name);
      throw ParseError("unknown function '" + name + "'", at.line, at.column, names);
    }
    next();  // '('
    ++depth_;
    const bool saved = in_call_;
    in_call_ = true;
    std::vector<ExprPtr> args;
    args.push_back(expr());
    while (peek().kind == Tok::Comma) {
      next();
      args.push_back(expr());
    }
    if (peek().kind != Tok::RParen) fail("unclosed argument list", continuations(false));
    in_call_ = saved;
    --depth_;
    next();
    const int n = static_cast<int>(args.size());
    if (n < it->min_args || n > it->max_args) {
      std::ostringstream os;
      os << name << " takes " << it->min_args;
      if (it->max_args != it->min_args) os << " or " << it->max_args;
      os << " argument" << (it->max_args == 1 ? "" : "s") << ", got " << n;
      throw ParseError(os.str(), at.line, at.column, {"argument list"});
    }
    return Expr::make_call(name, std::move(args));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  bool in_call_ = false;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Equal: return 0;
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

void print_to(std::ostringstream& os, const Expr& e, int min_prec) {
  const bool paren = precedence(e) < min_prec;
  if (paren) os << '(';
  switch (e.kind) {
    case Expr::Kind::Number: os << e.number.get_str(); break;
    case Expr::Kind::Symbol: os << e.name; break;
    case Expr::Kind::Neg:
      os << '-';
      print_to(os, *e.args[0], 3);
      break;
    case Expr::Kind::Pow:
      print_to(os, *e.args[0], 5);
      os << '^' << e.exponent;
      break;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      print_to(os, *e.args[0], 1);
      os << (e.kind == Expr::Kind::Add ? " + " : " - ");
      print_to(os, *e.args[1], 2);
      break;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      print_to(os, *e.args[0], 2);
      os << (e.kind == Expr::Kind::Mul ? " * " : " / ");
      print_to(os, *e.args[1], 3);
      break;
    case Expr::Kind::Equal:
      print_to(os, *e.args[0], 1);
      os << " == ";
      print_to(os, *e.args[1], 1);
      break;
    case Expr::Kind::Call:
      os << e.name << '(';
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) os << ", ";
        print_to(os, *e.args[i], 1);
      }
      os << ')';
      break;
  }
  if (paren) os << ')';
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(lex(text)).top(); }

std::string print(const Expr& e) {
  std::ostringstream os;
  print_to(os, e, 0);
  return os.str();
}

}  // namespace qdisc
