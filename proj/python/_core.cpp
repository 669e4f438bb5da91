// Python bindings: each report function returns (canonical JSON text, verdict, exit code).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <tuple>

#include "shiftkit/cli.hpp"

namespace py = pybind11;
using namespace shiftkit;

namespace {

using Report = std::tuple<std::string, std::string, int>;

Report pack(const CommandResult& r) { return {r.record.dump(2), to_string(r.verdict), exit_code(r.verdict)}; }

Options options(std::optional<std::string> field, std::size_t cap, std::uint64_t seed) {
  Options o;
  o.field = std::move(field);
  o.cap = cap;
  o.seed = seed;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "shiftkit native core";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<PreconditionError> precondition_error(m, "PreconditionError", PyExc_ValueError);
  static py::exception<AdmissibilityError> admissibility_error(m, "AdmissibilityError", PyExc_ValueError);
  static py::exception<VerificationError> verification_error(m, "VerificationError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object cls = parse_error;
      py::object inst = cls(e.what());
      inst.attr("line") = e.line();
      inst.attr("field") = e.field();
      py::set_error(parse_error, inst);
    } catch (const PreconditionError& e) {
      py::set_error(precondition_error, e.what());
    } catch (const AdmissibilityError& e) {
      py::set_error(admissibility_error, e.what());
    } catch (const VerificationError& e) {
      py::set_error(verification_error, e.what());
    }
  });

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_command(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line; returns (exit code, stdout, stderr).");

  m.def(
      "parse",
      [](const std::string& text, const std::string& origin) {
        return emit_algebra_file(parse_algebra_text(text, origin));
      },
      py::arg("text"), py::arg("origin") = "<input>", "Validate an algebra file and return its canonical form.");

  m.def(
      "analyze",
      [](const std::string& text, std::optional<std::string> field, std::size_t cap, std::uint64_t seed) {
        return pack(cmd_analyze(parse_algebra_text(text), options(std::move(field), cap, seed)));
      },
      py::arg("text"), py::arg("field") = py::none(), py::arg("cap") = 24, py::arg("seed") = 0);

  m.def(
      "shift",
      [](const std::string& text, std::size_t level, std::optional<std::string> field, std::size_t cap,
         std::uint64_t seed) {
        return pack(cmd_shift(parse_algebra_text(text), level, options(std::move(field), cap, seed)));
      },
      py::arg("text"), py::arg("level"), py::arg("field") = py::none(), py::arg("cap") = 24, py::arg("seed") = 0);

  m.def(
      "order",
      [](const std::string& text, std::size_t krull, std::size_t level, std::optional<std::string> field,
         std::size_t cap, std::uint64_t seed) {
        return pack(cmd_order(parse_algebra_text(text), krull, level, options(std::move(field), cap, seed)));
      },
      py::arg("text"), py::arg("krull"), py::arg("level") = 1, py::arg("field") = py::none(), py::arg("cap") = 24,
      py::arg("seed") = 0);

  m.def(
      "endcheck",
      [](const std::string& text, const std::string& module, std::optional<std::string> field, std::size_t cap,
         std::uint64_t seed) {
        return pack(cmd_endcheck(parse_algebra_text(text), module, options(std::move(field), cap, seed)));
      },
      py::arg("text"), py::arg("module"), py::arg("field") = py::none(), py::arg("cap") = 24, py::arg("seed") = 0);

  m.def(
      "mechanism",
      [](const std::string& text, std::size_t level, std::optional<std::size_t> simple,
         std::optional<std::string> field, std::size_t cap, std::uint64_t seed) {
        return pack(cmd_mechanism(parse_algebra_text(text), level, simple, options(std::move(field), cap, seed)));
      },
      py::arg("text"), py::arg("level"), py::arg("simple") = py::none(), py::arg("field") = py::none(),
      py::arg("cap") = 24, py::arg("seed") = 0);

  m.def(
      "corpus",
      [](const std::string& dir, std::optional<std::string> field, std::size_t cap, std::uint64_t seed) {
        return pack(cmd_corpus(dir, options(std::move(field), cap, seed)));
      },
      py::arg("dir"), py::arg("field") = py::none(), py::arg("cap") = 24, py::arg("seed") = 0);

  m.def(
      "selftest",
      [](const std::string& dir, std::optional<std::string> field, std::size_t cap, std::uint64_t seed) {
        return pack(cmd_selftest(dir, options(std::move(field), cap, seed)));
      },
      py::arg("dir"), py::arg("field") = py::none(), py::arg("cap") = 24, py::arg("seed") = 0);

  m.def("render_table", [](const std::string& record) { return render_table(nlohmann::json::parse(record)); },
        py::arg("record"), "Table rendering of a JSON report.");
}
