#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdisc/calculus.hpp"

namespace qdisc {

// Flattened coefficients of a value, used to compare both sides of an
// identity exactly and at sample values of q. The key is (slot, k, l) with
// slot 0 for scalars and algebra elements, 1 and 2 for the w and w*
// coefficients of a 1-form, and 3 for the v coefficient of a 2-form.
using Coordinates = std::map<std::array<int, 3>, Scalar>;

Coordinates coordinates(const Scalar& s);
Coordinates coordinates(const DiscElement& a);
Coordinates coordinates(const OneForm& nu);
Coordinates coordinates(const TwoForm& w);
std::string describe(const Coordinates& c);

struct CheckRecord {
  std::string name;
  std::string paper_ref;
  bool passed = false;
  std::string detail;
  // Both sides, for identities; empty for aggregated batteries.
  Coordinates lhs;
  Coordinates rhs;
  bool has_sides = false;
};

class Report {
 public:
  explicit Report(std::string suite = "") : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CheckRecord>& checks() const { return checks_; }
  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
  double elapsed_seconds() const { return elapsed_; }
  void set_elapsed(double seconds) { elapsed_ = seconds; }

  // Test-harness hook: the right-hand side of every identity whose name or
  // label equals this string is perturbed by adding 1.
  void set_corruption(std::optional<std::string> label) { corrupt_ = std::move(label); }
  const std::optional<std::string>& corruption() const { return corrupt_; }

  template <class L, class R>
  bool expect_equal(const std::string& name, const std::string& ref, const L& lhs, const R& rhs) {
    return record_identity(name, ref, coordinates(lhs), coordinates(rhs));
  }
  bool record_identity(const std::string& name, const std::string& ref, Coordinates lhs,
                       Coordinates rhs);
  void record(const std::string& name, const std::string& ref, bool passed, std::string detail);
  void merge(const Report& other);

  // {"suite", "checks": [{"name", "paper_ref", "status", "detail"}], "passed", "failed"}
  std::string to_json(int indent = 2) const;
  // Failures and a per-label tally; every record when verbose.
  std::string to_text(bool verbose = false) const;

 private:
  std::string suite_;
  std::vector<CheckRecord> checks_;
  double elapsed_ = 0;
  std::optional<std::string> corrupt_;
};

struct NumericAgreement {
  int compared = 0;
  int disagreements = 0;
  int poles = 0;
  std::vector<std::string> mismatched;
};

// For every identity in the report: do the two sides agree at q = q0, and
// does that agree with the exact verdict?
NumericAgreement numeric_agreement(const Report& report, const mpq_class& q0);

}  // namespace qdisc
