#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "magari4/cli.hpp"
#include "magari4/closure.hpp"
#include "magari4/errors.hpp"
#include "magari4/formula.hpp"
#include "magari4/preservation.hpp"
#include "magari4/synthesis.hpp"
#include "magari4/system_io.hpp"

namespace py = pybind11;
using namespace magari4;

namespace {

// Accepts either a table ("n:entries") or a formula; formulas are tabulated over
// their free variables in sorted order.
FuncTable table_of(const std::string& text) {
    if (looks_like_table(text)) return FuncTable::parse(text);
    return truth_table(parse(text));
}

std::string element_string(Element x) { return std::string(1, to_char(x)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Formulas, clones and constants over the four-element Magari algebra";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<EvaluationError>(m, "EvaluationError", PyExc_ValueError);
    py::register_exception<NotRepresentable>(m, "NotRepresentable", PyExc_ValueError);
    py::register_exception<PreconditionViolated>(m, "PreconditionViolated", PyExc_ValueError);
    py::register_exception<ResourceLimitExceeded>(m, "ResourceLimitExceeded", PyExc_RuntimeError);

    m.def("normalize", [](const std::string& f) { return print(parse(f)); },
          "Parse a formula and print it back in canonical form.");

    m.def(
        "evaluate",
        [](const std::string& f, const std::map<std::string, std::string>& env) {
            Valuation v;
            for (const auto& [name, value] : env) v[name] = parse_element(value);
            return element_string(evaluate(parse(f), v));
        },
        py::arg("formula"), py::arg("env") = std::map<std::string, std::string>{});

    m.def(
        "table",
        [](const std::string& f, std::optional<std::vector<std::string>> vars) {
            const auto parsed = parse(f);
            return (vars ? truth_table(parsed, *vars) : truth_table(parsed)).to_string();
        },
        py::arg("formula"), py::arg("vars") = py::none());

    m.def("equivalent", [](const std::string& f, const std::string& g) { return equivalent(parse(f), parse(g)); });

    m.def("classify", [](const std::string& t) { return classify(table_of(t)); },
          "Indices i of the relations R_i preserved by a table or formula.");

    m.def("preserves_delta_pairing", [](const std::string& t) { return preserves_delta_pairing(table_of(t)); });

    m.def(
        "synthesize",
        [](const std::string& t, std::optional<std::vector<std::string>> vars, bool simplify) {
            const auto table = FuncTable::parse(t);
            const SynthesisOptions opts{simplify};
            return print(vars ? synthesize(table, *vars, opts) : synthesize(table, opts));
        },
        py::arg("table"), py::arg("vars") = py::none(), py::arg("simplify") = false);

    m.def("expressible_constants",
          [](const std::string& system_text) {
              std::vector<std::string> out;
              for (Element c : expressible_constants(to_sigma(parse_system(system_text))))
                  out.push_back(element_string(c));
              return out;
          },
          "Constants in the unary closure of a system file's members.");

    m.def("canned_system", &cli::canned_system_text);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            const auto out = cli::run(args);
            return py::make_tuple(out.exit_code, out.payload, out.errors);
        },
        "Run one command line in-process; returns (exit_code, stdout, stderr).");
}
