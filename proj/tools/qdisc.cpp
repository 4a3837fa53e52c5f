// Command-line front end: evaluate and check expressions, reduce elements
// modulo the image of the divergence, and run the verification suite.
//
// Exit status: 0 success, 1 a check failed, 2 usage, parse or type error.

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qdisc/errors.hpp"
#include "qdisc/evaluate.hpp"
#include "qdisc/suite.hpp"

using namespace qdisc;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

void report_parse_error(const ParseError& e, const std::string& text) {
  std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what()
            << '\n';
  // Echo the offending line with a caret under the column.
  std::istringstream lines(text);
  std::string line;
  for (int i = 1; std::getline(lines, line); ++i) {
    if (i != e.line()) continue;
    std::cerr << "  " << line << '\n' << "  " << std::string(static_cast<std::size_t>(e.column() - 1), ' ') << "^\n";
  }
}

// Runs `body`, translating the library's error types into exit status 2.
template <class F>
int guarded(const std::string& text, F body) {
  try {
    return body();
  } catch (const ParseError& e) {
    report_parse_error(e, text);
  } catch (const TypeError& e) {
    std::cerr << "type error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
  } catch (const DivisionByZero& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsage;
}

int run_eval(const std::string& text, const EvalContext& ctx) {
  return guarded(text, [&] {
    std::cout << to_string(evaluate(text, ctx)) << '\n';
    return kPass;
  });
}

int run_check(const std::string& text, const EvalContext& ctx, std::ostream& out) {
  return guarded(text, [&] {
    const CheckResult r = check(text, ctx);
    if (r.equal) {
      out << "true\n";
      return kPass;
    }
    out << "false\n  lhs: " << r.lhs << "\n  rhs: " << r.rhs << '\n';
    return kFail;
  });
}

int run_reduce(const std::string& text, const EvalContext& ctx) {
  return guarded(text, [&] {
    const Value v = evaluate(text, ctx);
    DiscElement a;
    if (const auto* s = std::get_if<Scalar>(&v)) {
      a = DiscElement(*s);
    } else if (const auto* n = std::get_if<long>(&v)) {
      a = DiscElement(*n);
    } else if (const auto* e = std::get_if<DiscElement>(&v)) {
      a = *e;
    } else {
      throw TypeError("reduce expects an algebra element, got " + kind_name(v));
    }
    const CokernelDecomposition dec = cokernel_reduce(a);
    std::cout << to_string(Value(dec)) << '\n';
    const bool sound = cokernel_residual(a, dec).is_zero();
    std::cout << "residual = " << (sound ? "0" : cokernel_residual(a, dec).to_string()) << '\n';
    return sound ? kPass : kFail;
  });
}

int run_repl(EvalContext ctx) {
  const bool interactive = isatty(STDIN_FILENO) != 0;
  std::string line;
  int status = kPass;
  for (;;) {
    if (interactive) std::cout << "qdisc> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line == ":quit" || line == ":q") break;
    if (line == ":help") {
      std::cout << "expressions: q x y z zs w ws v, + - * / ^, d star sigma del delbar deg proj\n"
                   "integral reduce div2; 'a == b' checks an identity\n"
                   ":cone N sets the order of y = z^N, :quit leaves\n";
      continue;
    }
    if (line.rfind(":cone", 0) == 0) {
      try {
        const int n = std::stoi(line.substr(5));
        if (n < 2) throw std::invalid_argument("order");
        ctx.cone_order = n;
        std::cout << "y = z^" << n << '\n';
      } catch (const std::exception&) {
        std::cerr << "usage: :cone N with N >= 2\n";
      }
      continue;
    }
    const int rc = line.find("==") != std::string::npos ? run_check(line, ctx, std::cout)
                                                        : run_eval(line, ctx);
    if (rc != kPass) status = rc;
  }
  return status;
}

std::vector<mpq_class> parse_samples(const std::vector<std::string>& items) {
  std::vector<mpq_class> out;
  for (const auto& s : items) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw CLI::ValidationError("--q-samples", "not a rational: " + s);
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

int run_verify(const SuiteOptions& options, const std::string& json_path, bool verbose) {
  const Report r = verify_suite(options);
  if (json_path == "-") {
    std::cout << r.to_json() << '\n';
  } else {
    std::cout << r.to_text(verbose) << '\n';
    std::cout.precision(3);
    std::cout << "elapsed " << r.elapsed_seconds() << " s\n";
    if (!json_path.empty()) {
      std::ofstream f(json_path);
      if (!f) {
        std::cerr << "cannot write " << json_path << '\n';
        return kUsage;
      }
      f << r.to_json() << '\n';
    }
  }
  return r.ok() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the quantum disc algebra and its differential calculus"};
  app.require_subcommand(1);

  EvalContext ctx;
  int cone_order = 2;
  auto add_cone_order = [&](CLI::App* sub) {
    sub->add_option("--cone-order", cone_order, "order N of y = z^N")
        ->check(CLI::Range(2, 1000));
  };

  std::string expr;
  auto* eval = app.add_subcommand("eval", "evaluate an expression and print its canonical form");
  eval->add_option("EXPR", expr, "expression")->required();
  add_cone_order(eval);

  auto* chk = app.add_subcommand("check", "decide an identity 'lhs == rhs'");
  chk->add_option("EXPR", expr, "equality")->required();
  add_cone_order(chk);

  auto* red = app.add_subcommand("reduce", "write an element as constant + divergence");
  red->add_option("EXPR", expr, "algebra element")->required();
  add_cone_order(red);

  SuiteOptions options;
  std::vector<std::string> samples;
  std::string json_path;
  std::string corrupt;
  bool verbose = false;
  auto* ver = app.add_subcommand("verify", "run the verification suite");
  ver->add_option("--max-k", options.max_k, "largest x-power in the monomial grids")
      ->check(CLI::Range(1, 40));
  ver->add_option("--max-l", options.max_l, "largest |z-power| in the monomial grids")
      ->check(CLI::Range(1, 40));
  ver->add_option("--cone", options.cones, "cone orders, e.g. 2,3,4")
      ->delimiter(',')
      ->check(CLI::Range(2, 30));
  ver->add_option("--q-samples", samples, "rational sample points, e.g. 1/3,1/2")
      ->delimiter(',');
  ver->add_option("--json", json_path, "write the JSON report to PATH ('-' for stdout)");
  ver->add_option("--seed", options.seed, "seed for the random batteries");
  ver->add_option("--corrupt", corrupt, "perturb identities with this label (harness check)")
      ->group("");
  ver->add_flag("--verbose", verbose, "list every check");

  auto* repl = app.add_subcommand("repl", "read expressions from standard input");
  add_cone_order(repl);

  try {
    app.parse(argc, argv);
    if (!samples.empty()) options.q_samples = parse_samples(samples);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  ctx.cone_order = cone_order;
  if (!corrupt.empty()) options.corrupt = corrupt;

  if (*eval) return run_eval(expr, ctx);
  if (*chk) return run_check(expr, ctx, std::cout);
  if (*red) return run_reduce(expr, ctx);
  if (*ver) return run_verify(options, json_path, verbose);
  return run_repl(ctx);
}
