// Acceptance run: one line per criterion, exit status 0 iff all pass.
//
//   acceptance --cli PATH --schema PATH --workdir DIR

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "parser_corpus.hpp"
#include "qdisc/cone.hpp"
#include "qdisc/evaluate.hpp"
#include "qdisc/integral.hpp"
#include "qdisc/relations.hpp"
#include "qdisc/suite.hpp"

using namespace qdisc;
using json = nlohmann::json;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

Scalar qp(int n) { return Scalar::q_power(n); }

// [n]_{q^m} straight from the geometric sum.
Scalar geometric(int n, int m) {
  Scalar s;
  for (int i = 0; i < n; ++i) s += qp(m * i);
  return s;
}

std::string first_failure(const Report& r) {
  for (const auto& c : r.checks())
    if (!c.passed) return c.name + " (" + c.paper_ref + "): " + c.detail;
  return "";
}

Outcome from_report(const Report& r, const std::string& what) {
  if (!r.ok()) return {false, std::to_string(r.failed()) + " failed; first: " + first_failure(r)};
  return {true, std::to_string(r.passed()) + " " + what};
}

// --- 1 -----------------------------------------------------------------

Outcome disc_relations() {
  const auto start = std::chrono::steady_clock::now();
  const Report r = verify_disc_relations();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::map<std::string, int> per_label;
  for (const auto& c : r.checks()) ++per_label[c.paper_ref];
  const std::vector<std::string> required = {"dz",        "omegadz",   "zdz",   "omom",  "domegaz",
                                             "zdom",      "domega",    "zomega", "omega.sq",
                                             "xomegas",   "xzomegas1", "xzomegas2", "xv", "va",
                                             "full"};
  for (const auto& label : required)
    if (per_label[label] == 0) return {false, "no check labelled " + label};
  if (per_label["full"] < 6) return {false, "fewer than six checks of the final product table"};
  if (!r.ok()) return from_report(r, "");
  if (secs >= 5.0) return {false, "runtime " + std::to_string(secs) + " s"};
  std::ostringstream os;
  os << r.passed() << " identities over " << per_label.size() << " labels in " << secs << " s";
  return {true, os.str()};
}

// --- 2 -----------------------------------------------------------------

Outcome d_squared() {
  int count = 0, zero = 0;
  for (int k = 0; k <= 12; ++k)
    for (int l = -6; l <= 6; ++l) {
      ++count;
      if (d1(d0(DiscElement::monomial(k, l))).is_zero()) ++zero;
    }
  std::ostringstream os;
  os << zero << "/" << count << " monomials with k <= 12, |l| <= 6 (every k <= 6 included)";
  return {count == 169 && zero == count, os.str()};
}

// --- 3 -----------------------------------------------------------------

Outcome leibniz(std::uint64_t seed) {
  Report r("leibniz");
  verify_leibniz(seed, 200, 5, 5, r);
  if (r.checks().size() != 5 * 200) return {false, "unexpected number of checks"};
  return from_report(r, "identities on 200 seeded monomial pairs (twisted del, delbar, d, graded d)");
}

// --- 4 -----------------------------------------------------------------

Outcome q_derivations() {
  Report r("q-deriv");
  verify_q_derivations(12, 6, r);
  return from_report(r, "identities on the 169-monomial grid");
}

// --- 5 -----------------------------------------------------------------

Outcome cokernel() {
  int checked = 0;
  for (int k = 0; k <= 8; ++k)
    for (int l = -8; l <= 8; ++l) {
      const DiscElement m = DiscElement::monomial(k, l);
      const CokernelDecomposition dec = cokernel_reduce(m);
      if (!cokernel_residual(m, dec).is_zero())
        return {false, "nonzero residual for " + m.to_string()};
      const Scalar expected = l == 0 ? geometric(k + 1, 2) / geometric(k + 1, 4) : Scalar();
      if (dec.constant != expected)
        return {false, "constant for " + m.to_string() + " is " + dec.constant.to_string()};
      ++checked;
    }
  return {true, std::to_string(checked) + " monomials, k <= 8, |l| <= 8, zero residual"};
}

// --- 6 -----------------------------------------------------------------

Outcome integral_vanishing() {
  const Report r = verify_integral_vanishing(8, 8);
  if (r.checks().size() != 2 * 9 * 17) return {false, "unexpected number of checks"};
  return from_report(r, "values of Lambda on del/delbar of monomials are zero");
}

// --- 7 -----------------------------------------------------------------

Outcome cones() {
  Report r("cones");
  for (int n = 2; n <= 6; ++n) verify_cone(ConeParams(n), r);
  std::set<std::string> labels;
  for (const auto& c : r.checks()) labels.insert(c.paper_ref);
  for (const char* label : {"cone", "ydy", "y*dy", "dyy*", "crit", "z^{N-2}w", "o*o1"})
    if (!labels.count(label)) return {false, std::string("no check labelled ") + label};
  if (!r.ok()) return from_report(r, "");
  for (int n = 2; n <= 10; ++n) {
    if (!coprimality_criterion_holds(n)) return {false, "criterion fails at N = " + std::to_string(n)};
    for (int k = -2 * n + 2; k <= n - 1; ++k) {
      if (k > -n - 1 && k < 2) continue;
      if (qp(2 * k) * (qp(2 * n) + 1) == qp(2) + 1)
        return {false, "solution at N = " + std::to_string(n) + ", k = " + std::to_string(k)};
    }
  }
  return {true, std::to_string(r.passed()) + " cone checks for N = 2..6; criterion for N <= 10"};
}

// --- 8 -----------------------------------------------------------------

Outcome star_structure(std::uint64_t seed) {
  Report r("star");
  verify_star(seed, 60, 5, 5, r);
  bool volume = false;
  for (const auto& c : r.checks()) volume = volume || c.paper_ref == "volume";
  if (!volume) return {false, "v* = -v not checked"};
  return from_report(r, "identities: (ab)*, (da)*, (d nu)*, (nu mu)*, v*");
}

// --- 9 -----------------------------------------------------------------

bool scalar_identity(const CheckRecord& c) {
  auto only_scalar = [](const Coordinates& co) {
    for (const auto& [key, v] : co)
      if (key != std::array<int, 3>{0, 0, 0}) return false;
    return true;
  };
  return c.has_sides && only_scalar(c.lhs) && only_scalar(c.rhs);
}

Outcome numeric_cross_check() {
  SuiteOptions o;
  o.corrupt = "int";  // some exact verdicts are false; the numeric ones must follow
  const Report r = verify_suite(o);
  Report scalars("scalar identities");
  int failing = 0;
  for (const auto& c : r.checks())
    if (scalar_identity(c)) {
      scalars.record_identity(c.name, c.paper_ref, c.lhs, c.rhs);
      failing += c.passed ? 0 : 1;
    }
  if (scalars.checks().empty() || failing == 0) return {false, "no scalar identities sampled"};
  std::ostringstream os;
  for (const auto& q0 : o.q_samples) {
    const NumericAgreement all = numeric_agreement(r, q0);
    const NumericAgreement s = numeric_agreement(scalars, q0);
    if (s.disagreements || all.disagreements || s.compared == 0)
      return {false, "disagreement at q = " + q0.get_str() + ": " +
                         (s.mismatched.empty() ? all.mismatched.front() : s.mismatched.front())};
    if (s.poles) return {false, "pole at q = " + q0.get_str()};
  }
  os << scalars.checks().size() << " scalar identities (" << failing
     << " deliberately false) and all " << r.checks().size()
     << " records agree at q = 1/3, 1/2, 2/3";
  return {true, os.str()};
}

// --- 10 ----------------------------------------------------------------

struct Run {
  int status;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(const std::string& cli, const std::string& args) {
  Run r{-1, ""};
  FILE* p = popen((quote(cli) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

// A validator for the subset of JSON Schema used by the published schema:
// type, properties, required, additionalProperties, items, enum, minimum,
// minLength.
bool validate(const json& v, const json& schema, const std::string& path, std::string& error) {
  auto fail = [&](const std::string& what) {
    error = path + ": " + what;
    return false;
  };
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    const bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array()) ||
                    (t == "string" && v.is_string()) ||
                    (t == "integer" && v.is_number_integer()) ||
                    (t == "number" && v.is_number()) || (t == "boolean" && v.is_boolean());
    if (!ok) return fail("expected " + t);
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || e == v;
    if (!found) return fail("value not in enum");
  }
  if (schema.contains("minimum") && v.is_number() && v.get<double>() < schema["minimum"].get<double>())
    return fail("below minimum");
  if (schema.contains("minLength") && v.is_string() &&
      v.get<std::string>().size() < schema["minLength"].get<std::size_t>())
    return fail("string too short");
  if (v.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!v.contains(key.get<std::string>())) return fail("missing " + key.get<std::string>());
    const json props = schema.value("properties", json::object());
    for (const auto& [key, val] : v.items()) {
      if (props.contains(key)) {
        if (!validate(val, props[key], path + "." + key, error)) return false;
      } else if (schema.contains("additionalProperties") && schema["additionalProperties"] == false) {
        return fail("unexpected property " + key);
      }
    }
  }
  if (v.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!validate(v[i], schema["items"], path + "[" + std::to_string(i) + "]", error)) return false;
  }
  return true;
}

Outcome validate_report_file(const std::string& path, const json& schema, json& doc) {
  std::ifstream f(path);
  if (!f) return {false, "no report written to " + path};
  try {
    doc = json::parse(f);
  } catch (const json::exception& e) {
    return {false, std::string("report is not JSON: ") + e.what()};
  }
  std::string error;
  if (!validate(doc, schema, "$", error)) return {false, "schema violation at " + error};
  int pass = 0, fail = 0;
  for (const auto& c : doc["checks"]) (c["status"] == "pass" ? pass : fail)++;
  if (doc["passed"] != pass || doc["failed"] != fail) return {false, "summary counts disagree"};
  return {true, ""};
}

Outcome parser_and_cli(const std::string& cli, const std::string& schema_path,
                       const std::string& workdir) {
  const auto& corpus = parser_corpus();
  if (corpus.size() < 50) return {false, "corpus has fewer than 50 expressions"};
  for (const auto& text : corpus) {
    const ExprPtr once = parse(text);
    if (!(*parse(print(*once)) == *once)) return {false, "round trip fails for " + text};
  }

  Run r = run(cli, "check " + quote("d(z) == zs*w"));
  if (r.status != 0 || r.out != "true\n") return {false, "check d(z) == zs*w: status " + std::to_string(r.status)};
  r = run(cli, "check " + quote("w*ws == ws*w"));
  if (r.status != 1 || r.out.rfind("false", 0) != 0) return {false, "false identity: status " + std::to_string(r.status)};
  r = run(cli, "eval " + quote("z +"));
  if (r.status != 2) return {false, "parse error: status " + std::to_string(r.status)};
  r = run(cli, "check " + quote("d(z) == x"));
  if (r.status != 2) return {false, "kind mismatch: status " + std::to_string(r.status)};
  r = run(cli, "verify --max-k 0");
  if (r.status != 2) return {false, "bad option value: status " + std::to_string(r.status)};
  r = run(cli, "frobnicate");
  if (r.status != 2) return {false, "unknown subcommand: status " + std::to_string(r.status)};

  std::ifstream sf(schema_path);
  if (!sf) return {false, "cannot read schema " + schema_path};
  const json schema = json::parse(sf);

  const std::string good = workdir + "/acceptance_report.json";
  r = run(cli, "verify --json " + quote(good));
  if (r.status != 0) return {false, "verify: status " + std::to_string(r.status)};
  json doc;
  Outcome v = validate_report_file(good, schema, doc);
  if (!v.passed) return v;
  const auto total = doc["checks"].size();

  const std::string bad = workdir + "/acceptance_corrupted.json";
  r = run(cli, "verify --corrupt domega --json " + quote(bad));
  if (r.status != 1) return {false, "corrupted verify: status " + std::to_string(r.status)};
  v = validate_report_file(bad, schema, doc);
  if (!v.passed) return v;
  for (const auto& c : doc["checks"])
    if (c["status"] == "fail" && c["paper_ref"] != "domega" && c["paper_ref"] != "numeric")
      return {false, "corruption leaked into " + c["name"].get<std::string>()};
  if (doc["failed"] == 0) return {false, "corruption not detected"};

  std::ostringstream os;
  os << corpus.size() << " expressions round-trip; CLI exit codes 0/1/2; report with " << total
     << " checks validates";
  return {true, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string cli, schema, workdir = ".";
  std::uint64_t seed = 20240601;
  app.add_option("--cli", cli, "path to the qdisc executable")->required();
  app.add_option("--schema", schema, "path to the report schema")->required();
  app.add_option("--workdir", workdir, "directory for report files");
  app.add_option("--seed", seed, "seed for the random batteries");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"disc relation suite", disc_relations},
      {"d^2 = 0 on the monomial grid", d_squared},
      {"Leibniz battery", [&] { return leibniz(seed); }},
      {"q-derivation property", q_derivations},
      {"cokernel reduction and the integral", cokernel},
      {"integral vanishes on the image", integral_vanishing},
      {"cone suite", cones},
      {"star structure", [&] { return star_structure(seed + 1); }},
      {"numeric cross-validation", numeric_cross_check},
      {"parser, CLI and report schema", [&] { return parser_and_cli(cli, schema, workdir); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.passed ? 0 : 1;
    std::cout << (o.passed ? "PASS " : "FAIL ") << (i + 1) << ". " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
