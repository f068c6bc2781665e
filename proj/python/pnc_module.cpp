#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pnc/hornnc.hpp"
#include "pnc/parser.hpp"
#include "pnc/semantics.hpp"
#include "pnc/solver.hpp"
#include "pnc/trace.hpp"

namespace py = pybind11;

namespace {

// The core holds formulas as shared_ptr<const formula>; python gets a thin
// value wrapper around that handle.
struct py_formula {
    pnc::formula::ptr ptr;
};

pnc::engine_options options(bool lur, bool hur) {
    pnc::engine_options opt;
    opt.use_lur = lur;
    opt.use_hur = hur;
    return opt;
}

py::dict solve_to_dict(const pnc::solve_result& result) {
    py::list rounds;
    for (const auto& round : result.rounds) {
        py::list steps;
        for (const auto& step : round.steps) {
            py::dict s;
            s["step"] = step.id;
            s["rule"] = pnc::rule_name(step.r);
            s["premises"] = step.premises;
            s["conclusion"] = pnc::render(step.conclusion);
            s["weight"] = step.w.to_string();
            steps.append(std::move(s));
        }
        py::dict r;
        r["steps"] = std::move(steps);
        r["outcome"] = round.empty_clause_found ? "empty_clause" : "fixpoint";
        if (round.empty_clause_found)
            r["weight"] = round.empty_weight->to_string();
        r["inferences"] = round.inference_count;
        rounds.append(std::move(r));
    }
    py::dict out;
    out["inc"] = result.inc.to_string();
    out["rounds"] = std::move(rounds);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "possibilistic Horn non-clausal reasoning engine";

    py::register_exception<pnc::parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<pnc::not_horn_nc_error>(m, "NotHornNCError", PyExc_ValueError);
    py::register_exception<pnc::budget_error>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<py_formula>(m, "Formula")
        .def("__str__", [](const py_formula& f) { return pnc::render(f.ptr); })
        .def("__repr__", [](const py_formula& f) { return "Formula(" + pnc::render(f.ptr) + ")"; })
        .def_property_readonly("size", [](const py_formula& f) { return pnc::size(f.ptr); })
        .def("negate", [](const py_formula& f) { return py_formula{pnc::negate_nnf(f.ptr)}; })
        .def("simplify_constants",
             [](const py_formula& f) { return py_formula{pnc::simplify_constants(f.ptr)}; });

    py::class_<pnc::base>(m, "Base")
        .def_property_readonly("items",
                               [](const pnc::base& b) {
                                   py::list out;
                                   for (const auto& item : b.items)
                                       out.append(py::make_tuple(py_formula{item.f},
                                                                 item.w.to_string()));
                                   return out;
                               })
        .def("__len__", [](const pnc::base& b) { return b.items.size(); });

    m.def("parse_formula",
          [](const std::string& text) { return py_formula{pnc::parse_formula(text)}; });
    m.def("parse_base", [](const std::string& text) { return pnc::parse_base(text); });

    m.def("is_horn_nc", [](const py_formula& f) { return pnc::is_horn_nc(f.ptr); });
    m.def("is_horn_nc_base", [](const pnc::base& b) { return pnc::is_horn_nc_base(b); });
    m.def("is_negative", [](const py_formula& f) { return pnc::is_negative(f.ptr); });

    m.def(
        "inc",
        [](const pnc::base& b, bool lur, bool hur) {
            return pnc::find_inc(b, options(lur, hur)).inc.to_string();
        },
        py::arg("base"), py::arg("lur") = false, py::arg("hur") = false,
        "Inconsistency degree through unit resolution, as an exact decimal string.");
    m.def(
        "solve",
        [](const pnc::base& b, bool lur, bool hur) {
            return solve_to_dict(pnc::find_inc(b, options(lur, hur)));
        },
        py::arg("base"), py::arg("lur") = false, py::arg("hur") = false,
        "Inconsistency degree plus the full derivation trace.");
    m.def(
        "inc_oracle",
        [](const pnc::base& b) { return pnc::inc_oracle(b).to_string(); },
        "Inconsistency degree by brute-force model enumeration.");
    m.def(
        "entails",
        [](const pnc::base& b, const py_formula& query, bool lur, bool hur) {
            return pnc::entails(b, query.ptr, options(lur, hur)).inc.to_string();
        },
        py::arg("base"), py::arg("query"), py::arg("lur") = false, py::arg("hur") = false,
        "Necessity degree of the query given the base.");
    m.def("necessity_oracle", [](const pnc::base& b, const py_formula& query) {
        return pnc::necessity_oracle(b, query.ptr).to_string();
    });
    m.def(
        "is_consistent",
        [](const pnc::base& b) { return pnc::is_consistent(b); },
        "True iff the inconsistency degree is zero.");
    m.def("cl_transform", [](const py_formula& f) {
        pnc::clausal_formula c = pnc::cl_transform(pnc::simplify_constants(f.ptr));
        py::list clauses;
        for (const auto& cl : c.clauses) {
            py::list lits;
            for (const auto& lit : cl)
                lits.append(lit.negative ? "-" + lit.name : lit.name);
            clauses.append(std::move(lits));
        }
        return clauses;
    });
    m.def("is_horn_clausal", [](const py_formula& f) {
        return pnc::is_horn_clausal(pnc::cl_transform(pnc::simplify_constants(f.ptr)));
    });
}
