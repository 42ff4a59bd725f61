/* Python bindings for the constant-term engine: expression evaluation, the
 * closed product, the identity registry and the grid runner.  Polynomial
 * values cross the boundary in their canonical printed form, which parses
 * back through evaluate(). */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qct/dsl.hpp"
#include "qct/qblocks.hpp"
#include "qct/suites.hpp"

namespace py = pybind11;
using namespace qct;

namespace {

std::string py_evaluate(const std::string& text,
                        const std::map<std::string, long long>& bindings,
                        size_t budget) {
    dsl::Bindings b(bindings.begin(), bindings.end());
    BudgetScope scope(budget);
    return dsl::evaluate(dsl::parse(text), b).to_string();
}

std::string py_morris(int k, int a, int b, int c) {
    return MultiLaurent(QRat(morris_product({k, a, b, c}))).to_string();
}

py::dict py_verify(const std::string& name,
                   const std::map<std::string, std::pair<long long, long long>>&
                       overrides,
                   int jobs, size_t budget, bool keep_reports) {
    RunOptions opt;
    for (const auto& [key, rng] : overrides)
        opt.overrides[key] = ParamRange{rng.first, rng.second};
    opt.jobs = jobs;
    opt.budget = budget;
    std::vector<std::string> lines;
    if (keep_reports)
        opt.sink = [&](const VerifyReport& r) { lines.push_back(r.to_json_line()); };
    RunSummary sum = run_identity(name, opt);

    py::dict out;
    out["identity"] = name;
    out["total"] = sum.total;
    out["passed"] = sum.passed;
    out["failed"] = sum.failed;
    out["no_claim"] = sum.no_claim;
    out["budget_exceeded"] = sum.budget_exceeded;
    out["errors"] = sum.errors;
    out["exit_code"] = sum.exit_code();
    out["reports"] = lines;
    return out;
}

py::list py_identities() {
    py::list out;
    for (const IdentityInfo& info : list_identities()) {
        py::dict d;
        d["name"] = info.name;
        d["description"] = info.description;
        d["parameters"] = info.param_names;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_qct, m) {
    m.doc() = "exact constant-term engine for q-series product identities";

    m.def("evaluate", &py_evaluate, py::arg("text"),
          py::arg("bindings") = std::map<std::string, long long>{},
          py::arg("budget") = size_t{0},
          "Evaluate an expression document and return the canonical printed "
          "form of the resulting Laurent polynomial.");

    m.def("morris", &py_morris, py::arg("k"), py::arg("a"), py::arg("b"),
          py::arg("c"),
          "The closed product value of the k-row constant term, printed "
          "canonically.");

    m.def("verify", &py_verify, py::arg("name"),
          py::arg("overrides") =
              std::map<std::string, std::pair<long long, long long>>{},
          py::arg("jobs") = 1, py::arg("budget") = size_t{0},
          py::arg("keep_reports") = true,
          "Run one identity over its parameter grid and return the summary "
          "counts plus one JSON report line per grid point.");

    m.def("identities", &py_identities,
          "All registered identities with their overridable parameters.");

    py::register_exception<dsl::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const BudgetExceeded& e) {
            const std::string msg =
                "term budget exceeded (limit " + std::to_string(e.limit) + ")";
            PyErr_SetString(PyExc_RuntimeError, msg.c_str());
        }
    });
}
