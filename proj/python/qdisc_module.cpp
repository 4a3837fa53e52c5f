#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "qdisc/cone.hpp"
#include "qdisc/errors.hpp"
#include "qdisc/evaluate.hpp"
#include "qdisc/integral.hpp"
#include "qdisc/relations.hpp"
#include "qdisc/suite.hpp"

namespace py = pybind11;
using namespace qdisc;

namespace {

// Python ints, Fractions and strings such as "1/3" all print as rationals.
mpq_class to_mpq(const py::handle& value) {
  const std::string s = py::str(value);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw py::value_error("not a rational number: " + s);
  q.canonicalize();
  return q;
}

py::object to_fraction(const mpq_class& q) {
  return py::module_::import("fractions").attr("Fraction")(q.get_str());
}

Scalar to_scalar(const py::handle& value) {
  if (py::isinstance<Scalar>(value)) return value.cast<Scalar>();
  return Scalar(to_mpq(value));
}

// Scalars, ints and Fractions; anything else is left to the other operand.
std::optional<Scalar> try_scalar(const py::handle& value) {
  if (py::isinstance<Scalar>(value)) return value.cast<Scalar>();
  if (!py::isinstance<py::int_>(value) &&
      !py::isinstance(value, py::module_::import("fractions").attr("Fraction")))
    return std::nullopt;
  return Scalar(to_mpq(value));
}

// Binary operator of a Scalar with an arbitrary Python object.
template <class F>
auto mixed(F f) {
  return [f](const Scalar& a, const py::object& b) -> py::object {
    const auto other = try_scalar(b);
    if (!other) return py::reinterpret_borrow<py::object>(Py_NotImplemented);
    return py::cast(f(a, *other));
  };
}

py::dict report_check(const CheckRecord& c) {
  py::dict d;
  d["name"] = c.name;
  d["paper_ref"] = c.paper_ref;
  d["status"] = c.passed ? "pass" : "fail";
  d["detail"] = c.detail;
  return d;
}

template <class T>
std::string repr(const char* type, const T& v) {
  return std::string(type) + "(" + v.to_string() + ")";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact symbolic engine for the quantum disc algebra and its calculus";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<PoleError> pole_error(m, "PoleError", PyExc_ZeroDivisionError);
  static py::exception<TypeError> kind_error(m, "KindError", PyExc_TypeError);
  static py::exception<VerificationFailure> verification(m, "VerificationFailure",
                                                         PyExc_RuntimeError);
  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      std::ostringstream os;
      os << "line " << e.line() << ", column " << e.column() << ": " << e.what();
      py::set_error(parse_error, os.str().c_str());
    } catch (const PoleError& e) {
      py::set_error(pole_error, e.what());
    } catch (const DivisionByZero& e) {
      py::set_error(PyExc_ZeroDivisionError, e.what());
    } catch (const DomainError& e) {
      py::set_error(domain_error, e.what());
    } catch (const TypeError& e) {
      py::set_error(kind_error, e.what());
    } catch (const VerificationFailure& e) {
      py::set_error(verification, e.what());
    }
  });

  py::class_<Scalar>(m, "Scalar", "Element of the field Q(q) of rational functions")
      .def(py::init([](const py::object& v) { return to_scalar(v); }), py::arg("value") = 0)
      .def_static("q", &Scalar::q)
      .def_static("q_power", &Scalar::q_power, py::arg("n"))
      .def("is_zero", &Scalar::is_zero)
      .def("inv", &Scalar::inv)
      .def("pow", &Scalar::pow)
      .def("__pow__", [](const Scalar& a, int n) { return a.pow(n); })
      .def("eval_at", [](const Scalar& a, const py::object& q0) { return to_fraction(a.eval_at(to_mpq(q0))); },
           py::arg("q0"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def("__add__", mixed([](const Scalar& a, const Scalar& b) { return a + b; }))
      .def("__radd__", mixed([](const Scalar& a, const Scalar& b) { return b + a; }))
      .def("__sub__", mixed([](const Scalar& a, const Scalar& b) { return a - b; }))
      .def("__rsub__", mixed([](const Scalar& a, const Scalar& b) { return b - a; }))
      .def("__mul__", mixed([](const Scalar& a, const Scalar& b) { return a * b; }))
      .def("__rmul__", mixed([](const Scalar& a, const Scalar& b) { return b * a; }))
      .def("__truediv__", mixed([](const Scalar& a, const Scalar& b) { return a / b; }))
      .def("__rtruediv__", mixed([](const Scalar& a, const Scalar& b) { return b / a; }))
      .def("__eq__", [](const Scalar& a, const py::object& b) {
        const auto other = try_scalar(b);
        return other && a == *other;
      })
      .def("__hash__", [](const Scalar& a) { return py::hash(py::str(a.to_string())); })
      .def("__str__", &Scalar::to_string)
      .def("__repr__", [](const Scalar& a) { return repr("Scalar", a); });

  py::implicitly_convertible<py::int_, Scalar>();

  py::class_<DiscElement>(m, "DiscElement", "Element of the quantum disc algebra in normal form")
      .def(py::init([](const py::object& c) { return DiscElement(to_scalar(c)); }),
           py::arg("constant") = 0)
      .def_static("monomial",
                  [](int k, int l, const py::object& c) { return DiscElement::monomial(k, l, to_scalar(c)); },
                  py::arg("k"), py::arg("l"), py::arg("c") = 1)
      .def_static("x", &DiscElement::x)
      .def_static("z", &DiscElement::z)
      .def_static("zs", &DiscElement::zs)
      .def("is_zero", &DiscElement::is_zero)
      .def("terms",
           [](const DiscElement& a) {
             py::dict d;
             for (const auto& [mono, c] : a.terms()) d[py::make_tuple(mono.k, mono.l)] = c;
             return d;
           })
      .def("coefficient", &DiscElement::coefficient, py::arg("k"), py::arg("l"))
      .def("__pow__", [](const DiscElement& a, int n) { return a.pow(n); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__mul__", [](const DiscElement& a, const Scalar& c) { return a.scaled(c); })
      .def("__rmul__", [](const DiscElement& a, const Scalar& c) { return a.scaled(c); })
      .def("__mul__", [](const DiscElement& a, const OneForm& b) { return a * b; })
      .def("__mul__", [](const DiscElement& a, const TwoForm& b) { return a * b; })
      .def("__str__", &DiscElement::to_string)
      .def("__repr__", [](const DiscElement& a) { return repr("DiscElement", a); });

  py::class_<OneForm>(m, "OneForm", "1-form p w + r w* with algebra coefficients on the left")
      .def(py::init<DiscElement, DiscElement>(), py::arg("on_omega"), py::arg("on_omega_star"))
      .def_static("omega", &OneForm::omega)
      .def_static("omega_star", &OneForm::omega_star)
      .def_property_readonly("on_omega", &OneForm::omega_coeff)
      .def_property_readonly("on_omega_star", &OneForm::omega_star_coeff)
      .def("is_zero", &OneForm::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def("__mul__", [](const OneForm& a, const DiscElement& b) { return a * b; })
      .def("__mul__", [](const OneForm& a, const OneForm& b) { return wedge(a, b); })
      .def("__mul__", [](const OneForm& a, const Scalar& c) { return a.scaled(c); })
      .def("__rmul__", [](const OneForm& a, const Scalar& c) { return a.scaled(c); })
      .def("__str__", &OneForm::to_string)
      .def("__repr__", [](const OneForm& a) { return repr("OneForm", a); });

  py::class_<TwoForm>(m, "TwoForm", "2-form f v with f a Laurent polynomial in the class of z")
      .def_static("volume", &TwoForm::volume)
      .def("is_zero", &TwoForm::is_zero)
      .def(py::self + py::self)
      .def(py::self == py::self)
      .def("__mul__", [](const TwoForm& a, const DiscElement& b) { return a * b; })
      .def("__mul__", [](const TwoForm& a, const Scalar& c) { return a.scaled(c); })
      .def("__rmul__", [](const TwoForm& a, const Scalar& c) { return a.scaled(c); })
      .def("__str__", &TwoForm::to_string)
      .def("__repr__", [](const TwoForm& a) { return repr("TwoForm", a); });

  py::class_<HigherForm>(m, "HigherForm", "Form of degree three or more; always zero")
      .def("__eq__", [](const HigherForm&, const HigherForm&) { return true; })
      .def("__str__", [](const HigherForm&) { return "0"; })
      .def("__repr__", [](const HigherForm&) { return "HigherForm(0)"; });

  py::class_<CotangentFunctional>(m, "CotangentFunctional")
      .def(py::init<DiscElement, DiscElement>(), py::arg("on_omega"), py::arg("on_omega_star"))
      .def_readonly("on_omega", &CotangentFunctional::on_omega)
      .def_readonly("on_omega_star", &CotangentFunctional::on_omega_star);

  py::class_<CokernelDecomposition>(m, "CokernelDecomposition")
      .def_readonly("constant", &CokernelDecomposition::constant)
      .def_readonly("witness", &CokernelDecomposition::witness)
      .def("__str__", [](const CokernelDecomposition& d) { return to_string(Value(d)); });

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("equal", &CheckResult::equal)
      .def_readonly("lhs", &CheckResult::lhs)
      .def_readonly("rhs", &CheckResult::rhs)
      .def_readonly("kind", &CheckResult::kind)
      .def("__bool__", [](const CheckResult& r) { return r.equal; });

  py::class_<Report>(m, "Report")
      .def_property_readonly("suite", &Report::suite)
      .def_property_readonly("passed", &Report::passed)
      .def_property_readonly("failed", &Report::failed)
      .def_property_readonly("ok", &Report::ok)
      .def_property_readonly("elapsed_seconds", &Report::elapsed_seconds)
      .def_property_readonly("checks",
                             [](const Report& r) {
                               py::list out;
                               for (const auto& c : r.checks()) out.append(report_check(c));
                               return out;
                             })
      .def("to_json", &Report::to_json, py::arg("indent") = 2)
      .def("to_text", &Report::to_text, py::arg("verbose") = false);

  m.def("q_int", &q_int, py::arg("n"), py::arg("m"), "[n]_{q^m} = 1 + q^m + ... + q^{m(n-1)}");
  m.def("star", py::overload_cast<const DiscElement&>(&star));
  m.def("star", [](const OneForm& a) { return star1(a); });
  m.def("star", [](const TwoForm& a) { return star2(a); });
  m.def("sigma_pow", &sigma_pow, py::arg("a"), py::arg("p") = 1);
  m.def("partial", &partial);
  m.def("partial_bar", &partial_bar);
  m.def("d0", &d0);
  m.def("d1", &d1);
  m.def("wedge", &wedge);
  m.def("divergence", &divergence);
  m.def("integral_lambda", &integral_lambda, py::arg("a"), py::arg("scale") = Scalar(1));
  m.def("cokernel_reduce", &cokernel_reduce);
  m.def("cone_integral", [](const DiscElement& a, int n) { return cone_integral(a, ConeParams(n)); },
        py::arg("a"), py::arg("order"));

  m.def("normalize", [](const std::string& text) { return print(*parse(text)); },
        "Parse and reprint an expression with minimal parentheses");
  m.def("evaluate", [](const std::string& text, int cone_order) {
          return evaluate(text, EvalContext{cone_order});
        },
        py::arg("text"), py::arg("cone_order") = 2);
  m.def("check", [](const std::string& text, int cone_order) {
          return check(text, EvalContext{cone_order});
        },
        py::arg("text"), py::arg("cone_order") = 2);

  m.def("verify_disc_relations", py::overload_cast<>(&verify_disc_relations));
  m.def(
      "verify_suite",
      [](int max_k, int max_l, std::vector<int> cones, const py::object& q_samples,
         std::uint64_t seed, int random_pairs, std::optional<std::string> corrupt) {
        SuiteOptions o;
        o.max_k = max_k;
        o.max_l = max_l;
        o.cones = std::move(cones);
        if (!q_samples.is_none()) {
          o.q_samples.clear();
          for (const auto& s : q_samples) o.q_samples.push_back(to_mpq(s));
        }
        o.seed = seed;
        o.random_pairs = random_pairs;
        o.corrupt = std::move(corrupt);
        py::gil_scoped_release release;
        return verify_suite(o);
      },
      py::arg("max_k") = 8, py::arg("max_l") = 8, py::arg("cones") = std::vector<int>{2, 3, 4, 5, 6},
      py::arg("q_samples") = py::none(), py::arg("seed") = SuiteOptions{}.seed,
      py::arg("random_pairs") = 200, py::arg("corrupt") = py::none());
}
