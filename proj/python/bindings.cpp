#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ostro/cli.hpp"
#include "ostro/expr.hpp"
#include "ostro/kernels.hpp"
#include "ostro/verify.hpp"

namespace py = pybind11;
using namespace ostro;

namespace {

expr::Var var_of(const std::string& name) {
  if (name == "t") return expr::Var::T;
  if (name == "s") return expr::Var::S;
  throw py::value_error("variable must be 't' or 's'");
}

}  // namespace

PYBIND11_MODULE(_ostro, m) {
  py::exception<Error> created(m, "OstroError");
  static PyObject* const ostro_error = created.inc_ref().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::handle(ostro_error)(py::str(e.what()));
      err.attr("code") = std::string(to_string(e.code()));
      err.attr("position") = e.position() ? py::cast(*e.position()) : py::none();
      PyErr_SetObject(ostro_error, err.ptr());
    }
  });

  m.def("version", &tool_version);

  m.def(
      "main",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = cli::main_entry(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line with argv (without the program name); returns (code, stdout, stderr).");

  m.def("canonical", [](const std::string& text) { return expr::to_string(expr::parse(text)); }, py::arg("text"));
  m.def("evaluate", [](const std::string& text, double t, double s) { return expr::evaluate(expr::parse(text), t, s); },
        py::arg("text"), py::arg("t"), py::arg("s"));
  m.def(
      "differentiate",
      [](const std::string& text, const std::string& var) {
        return expr::to_string(expr::simplify(expr::differentiate(expr::parse(text), var_of(var))));
      },
      py::arg("text"), py::arg("var"));

  m.def(
      "signed_moment",
      [](double a, double b, double c, double d, double x, double y) {
        const Rectangle r = make_rectangle(a, b, c, d);
        return signed_moment(r, make_point(r, x, y));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("x"), py::arg("y"));
  m.def(
      "abs_moment",
      [](double a, double b, double c, double d, double x, double y) {
        const Rectangle r = make_rectangle(a, b, c, d);
        return abs_moment(r, make_point(r, x, y));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("x"), py::arg("y"));
}
