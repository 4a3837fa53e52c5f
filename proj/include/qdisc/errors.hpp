#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qdisc {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Evaluating a rational function at a root of its denominator.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& where)
      : std::domain_error("pole at q = " + where) {}
};

// Arguments outside an operation's domain (negative x-power, degree of an
// inhomogeneous element, non-cone input to a cone operation, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A claimed identity failed to hold; raised by constructions that are
// expected to succeed unconditionally.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed expression text. Line and column are 1-based; `expected` lists
// the tokens that would have been accepted at that position.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, int line, int column, std::vector<std::string> expected)
      : std::invalid_argument(message), line_(line), column_(column),
        expected_(std::move(expected)) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

// A well-formed expression applied to values of the wrong kind, e.g. the
// sum of a 1-form and a 2-form.
class TypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qdisc
