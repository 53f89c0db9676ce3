#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "whitforge/cli.hpp"
#include "whitforge/errors.hpp"
#include "whitforge/io.hpp"
#include "whitforge/orbits.hpp"

namespace py = pybind11;
using namespace whitforge;
using io::Json;

namespace {

// Structured arguments and results cross the boundary as JSON text; the
// Python package decodes them.
WhittakerPair pair_arg(const std::string& json) {
  const auto in = io::read_pair_input(Json::parse(json));
  return make_whittaker_pair(in.s, in.f);
}

// Leaked on purpose: the translator may run during interpreter shutdown.
py::object* parse_error = nullptr;
py::object* math_error = nullptr;

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact toolkit for nilpotent orbits and Whittaker pairs";

  parse_error = new py::object(py::exception<ParseError>(m, "ParseError", PyExc_ValueError));
  math_error = new py::object(py::exception<MathError>(m, "MathError", PyExc_ArithmeticError));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(parse_error->ptr(), e.what());
    } catch (const Json::exception& e) {
      PyErr_SetString(parse_error->ptr(), e.what());
    } catch (const MathError& e) {
      py::object inst = (*math_error)(e.what());
      inst.attr("kind") = to_string(e.kind());
      inst.attr("clause") = e.clause();
      PyErr_SetObject(math_error->ptr(), inst.ptr());
    }
  });

  m.def("parse_matrix", [](const std::string& text, std::size_t n) {
    return io::encode(io::parse_e_notation(text, n)).dump();
  }, py::arg("text"), py::arg("n"));
  m.def("jordan_partition", [](const std::string& matrix, std::optional<std::size_t> n) {
    return jordan_partition(io::matrix_from_json(Json::parse(matrix), n)).parts();
  }, py::arg("matrix"), py::arg("n") = py::none());
  m.def("sl_class", [](const std::string& matrix, std::optional<std::size_t> n) {
    return io::encode(sl_class(io::matrix_from_json(Json::parse(matrix), n))).dump();
  }, py::arg("matrix"), py::arg("n") = py::none());
  m.def("dominance_leq", [](const std::string& mu, const std::string& lambda) {
    return dominance_leq(io::parse_partition(mu), io::parse_partition(lambda));
  });
  m.def("oht_admissible", [](const std::string& lambda) { return oht_admissible(io::parse_partition(lambda)); });
  m.def("chain", [](const std::string& pair) { return io::encode(chain(pair_arg(pair))).dump(); });
  m.def("find_z", [](const std::string& pair) {
    const auto d = find_Z(pair_arg(pair));
    return Json{{"h", io::encode(d.h)}, {"Z", io::encode(d.z)}}.dump();
  });
  m.def("quasi_criticals", [](const std::string& pair, const std::string& rule) {
    const auto in = io::read_pair_input(Json::parse(pair));
    const auto wp = make_whittaker_pair(in.s, in.f);
    const QMatrix h = in.h ? *in.h : find_Z(wp).h;
    return io::encode(quasi_criticals(in.s, in.f, h, parse_quasi_rule(rule))).dump();
  }, py::arg("pair"), py::arg("rule") = "weight-two");
  m.def("deform_gl", [](const std::string& mu, const std::string& lambda) {
    return io::encode(deform_gl(io::parse_partition(mu), io::parse_partition(lambda))).dump();
  });
  m.def("deform_sl", [](const std::string& mu, const std::string& lambda, const std::string& a, const std::string& b) {
    const auto out = deform_sl(io::parse_partition(mu), io::parse_partition(lambda), parse_rational(a), parse_rational(b));
    return std::visit([](const auto& v) { return io::encode(v).dump(); }, out);
  }, py::arg("mu"), py::arg("lambda_"), py::arg("a") = "1", py::arg("b") = "1");
  m.def("compar", [](const std::string& mu, const std::string& lambda) {
    return io::encode(compar_certificate(io::parse_partition(mu), io::parse_partition(lambda))).dump();
  });
  m.def("run", [](const std::vector<std::string>& args, const std::string& stdin_text) {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int status = cli::run(args, in, out, err);
    return py::make_tuple(status, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "");
}
