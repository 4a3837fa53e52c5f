#include "qdisc/report.hpp"

#include <sstream>

#include "json.hpp"
#include "qdisc/errors.hpp"

namespace qdisc {

Coordinates coordinates(const Scalar& s) {
  Coordinates c;
  if (!s.is_zero()) c[{0, 0, 0}] = s;
  return c;
}

Coordinates coordinates(const DiscElement& a) {
  Coordinates c;
  for (const auto& [m, v] : a.terms()) c[{0, m.k, m.l}] = v;
  return c;
}

Coordinates coordinates(const OneForm& nu) {
  Coordinates c;
  for (const auto& [m, v] : nu.omega_coeff().terms()) c[{1, m.k, m.l}] = v;
  for (const auto& [m, v] : nu.omega_star_coeff().terms()) c[{2, m.k, m.l}] = v;
  return c;
}

Coordinates coordinates(const TwoForm& w) {
  Coordinates c;
  for (const auto& [l, v] : w.coeff().terms()) c[{3, 0, l}] = v;
  return c;
}

std::string describe(const Coordinates& c) {
  if (c.empty()) return "0";
  static const char* const suffix[] = {"", "*w", "*ws", "*v"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, v] : c) {
    const auto [slot, k, l] = key;
    DiscElement coeff = DiscElement::monomial(k, l, v);
    if (!first) os << " + ";
    first = false;
    os << "(" << coeff.to_string() << ")" << suffix[slot];
  }
  return os.str();
}

bool Report::record_identity(const std::string& name, const std::string& ref, Coordinates lhs,
                             Coordinates rhs) {
  if (corrupt_ && (*corrupt_ == name || *corrupt_ == ref)) {
    const int slot = rhs.empty() ? (lhs.empty() ? 0 : lhs.begin()->first[0]) : rhs.begin()->first[0];
    Scalar& c = rhs[{slot, 0, 0}];
    c += 1;
    if (c.is_zero()) rhs.erase({slot, 0, 0});
  }
  CheckRecord rec;
  rec.name = name;
  rec.paper_ref = ref;
  rec.passed = lhs == rhs;
  rec.detail = rec.passed ? "exact" : "lhs = " + describe(lhs) + "; rhs = " + describe(rhs);
  rec.lhs = std::move(lhs);
  rec.rhs = std::move(rhs);
  rec.has_sides = true;
  checks_.push_back(std::move(rec));
  return checks_.back().passed;
}

void Report::record(const std::string& name, const std::string& ref, bool passed,
                    std::string detail) {
  CheckRecord rec;
  rec.name = name;
  rec.paper_ref = ref;
  rec.passed = passed;
  rec.detail = std::move(detail);
  checks_.push_back(std::move(rec));
}

void Report::merge(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  elapsed_ += other.elapsed_;
}

int Report::passed() const {
  int n = 0;
  for (const auto& c : checks_) n += c.passed ? 1 : 0;
  return n;
}

int Report::failed() const { return static_cast<int>(checks_.size()) - passed(); }

std::string Report::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json r;
    r["name"] = c.name;
    r["paper_ref"] = c.paper_ref;
    r["status"] = c.passed ? "pass" : "fail";
    r["detail"] = c.detail;
    j["checks"].push_back(std::move(r));
  }
  j["passed"] = passed();
  j["failed"] = failed();
  return j.dump(indent);
}

std::string Report::to_text(bool verbose) const {
  std::ostringstream os;
  // label -> (passed, total), in order of first appearance
  std::vector<std::string> order;
  std::map<std::string, std::pair<int, int>> tally;
  for (const auto& c : checks_) {
    if (verbose || !c.passed) {
      os << (c.passed ? "[pass] " : "[FAIL] ") << c.name << "  (" << c.paper_ref << ")";
      if (!c.passed || !c.has_sides) os << "  " << c.detail;
      os << '\n';
    }
    auto [it, fresh] = tally.try_emplace(c.paper_ref, 0, 0);
    if (fresh) order.push_back(c.paper_ref);
    it->second.first += c.passed ? 1 : 0;
    it->second.second += 1;
  }
  if (!verbose) {
    for (const auto& ref : order) {
      const auto [good, total] = tally[ref];
      os << (good == total ? "  ok   " : "  FAIL ") << ref << ": " << good << "/" << total << '\n';
    }
  }
  os << suite_ << ": " << passed() << " passed, " << failed() << " failed";
  return os.str();
}

namespace {

std::map<std::array<int, 3>, mpq_class> evaluate(const Coordinates& c, const mpq_class& q0) {
  std::map<std::array<int, 3>, mpq_class> out;
  for (const auto& [key, v] : c) {
    mpq_class e = v.eval_at(q0);
    if (e != 0) out.emplace(key, e);
  }
  return out;
}

}  // namespace

NumericAgreement numeric_agreement(const Report& report, const mpq_class& q0) {
  NumericAgreement result;
  for (const auto& c : report.checks()) {
    if (!c.has_sides) continue;
    try {
      const bool numeric_equal = evaluate(c.lhs, q0) == evaluate(c.rhs, q0);
      ++result.compared;
      if (numeric_equal != c.passed) {
        ++result.disagreements;
        result.mismatched.push_back(c.name);
      }
    } catch (const PoleError&) {
      ++result.poles;
    }
  }
  return result;
}

}  // namespace qdisc
