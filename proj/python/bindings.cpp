#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "quiverinv/canonical.hpp"
#include "quiverinv/cli.hpp"
#include "quiverinv/errors.hpp"
#include "quiverinv/generic_rep.hpp"
#include "quiverinv/semi_invariants.hpp"
#include "quiverinv/stability.hpp"

namespace py = pybind11;
using namespace quiverinv;

namespace {

using Vec = std::vector<std::int64_t>;

DimVector dim(const Quiver &q, const Vec &v) {
    if (v.size() != q.num_vertices())
        throw InputError("expected " + std::to_string(q.num_vertices()) + " entries, got " +
                         std::to_string(v.size()));
    for (auto x : v)
        if (x < 0)
            throw InputError("dimension vectors are non-negative");
    return DimVector(v);
}

Weight weight(const Quiver &q, const Vec &v) {
    if (v.size() != q.num_vertices())
        throw InputError("expected " + std::to_string(q.num_vertices()) + " entries, got " +
                         std::to_string(v.size()));
    return Weight(v);
}

py::object fraction(const Rational &r) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(py::int_(py::str(numerator(r).str())), py::int_(py::str(denominator(r).str())));
}

py::list summands(const std::vector<Summand> &s) {
    py::list out;
    for (const auto &x : s)
        out.append(py::make_tuple(x.root.values(), x.multiplicity, to_string(x.cls)));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quiver representations, semi-invariants and canonical algebras.";

    auto base = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
    py::register_exception<NotFoundError>(m, "NotFoundError", PyExc_LookupError);
    (void)base;

    py::class_<Quiver>(m, "Quiver")
        .def(py::init([](std::vector<std::string> vertices, std::vector<std::tuple<std::string, std::string, std::string>> arrows) {
                 std::vector<Arrow> as;
                 for (auto &[id, t, h] : arrows)
                     as.push_back({id, t, h});
                 return Quiver(std::move(vertices), std::move(as));
             }),
             py::arg("vertices"), py::arg("arrows"))
        .def_static(
            "parse",
            [](const std::string &text) {
                auto p = parse_quiver(text);
                if (!p.is_path_algebra())
                    throw PreconditionError("relations are not supported here; use the CLI");
                return p.quiver();
            },
            py::arg("text"))
        .def_static("kronecker", &catalogue::kronecker, py::arg("arrows"))
        .def_static("type_a", &catalogue::type_a, py::arg("n"))
        .def_static("type_d", &catalogue::type_d, py::arg("n"))
        .def_static("type_e", &catalogue::type_e, py::arg("n"))
        .def_static("extended_a", &catalogue::extended_a, py::arg("n"))
        .def_static("extended_d", &catalogue::extended_d, py::arg("n"))
        .def_static("extended_e", &catalogue::extended_e, py::arg("n"))
        .def_property_readonly("vertices", &Quiver::vertices)
        .def_property_readonly("num_arrows", &Quiver::num_arrows)
        .def("__str__", [](const Quiver &q) { return print_quiver(q); })
        .def("__repr__", [](const Quiver &q) {
            return "<Quiver " + std::to_string(q.num_vertices()) + " vertices, " + std::to_string(q.num_arrows()) +
                   " arrows>";
        });

    m.def(
        "euler_form",
        [](const Quiver &q, const Vec &d, const Vec &e) { return euler_form(EulerMatrix(q), dim(q, d), dim(q, e)); },
        py::arg("quiver"), py::arg("d"), py::arg("e"));
    m.def(
        "tits_form", [](const Quiver &q, const Vec &d) { return tits_form(EulerMatrix(q), dim(q, d)); },
        py::arg("quiver"), py::arg("d"));
    m.def(
        "classify",
        [](const Quiver &q) {
            const auto c = classify_path_algebra(q);
            return py::make_tuple(to_string(c.type), c.diagram);
        },
        py::arg("quiver"));
    m.def(
        "is_schur_root", [](const Quiver &q, const Vec &d) { return is_schur_root(EulerMatrix(q), dim(q, d)); },
        py::arg("quiver"), py::arg("d"));
    m.def(
        "canonical_decomposition",
        [](const Quiver &q, const Vec &d) { return summands(canonical_decomposition(EulerMatrix(q), dim(q, d)).summands); },
        py::arg("quiver"), py::arg("d"),
        "List of (root, multiplicity, root class).");
    m.def(
        "is_semistable",
        [](const Quiver &q, const Vec &d, const Vec &t) {
            return is_semistable_generic(EulerMatrix(q), dim(q, d), weight(q, t));
        },
        py::arg("quiver"), py::arg("d"), py::arg("theta"));
    m.def(
        "theta_stable_decomposition",
        [](const Quiver &q, const Vec &d, const Vec &t) {
            return summands(theta_stable_decomposition(EulerMatrix(q), dim(q, d), weight(q, t)).factors);
        },
        py::arg("quiver"), py::arg("d"), py::arg("theta"));
    m.def(
        "si_dim",
        [](const Quiver &q, const Vec &d, const Vec &t, std::uint64_t budget) {
            return si_dim(q, dim(q, d), weight(q, t), budget);
        },
        py::arg("quiver"), py::arg("d"), py::arg("theta"), py::arg("budget") = kDefaultSIBudget);
    m.def(
        "si_table",
        [](const Quiver &q, const Vec &d, const Vec &t, int n, std::uint64_t budget) {
            return si_table(q, dim(q, d), weight(q, t), n, budget).dims;
        },
        py::arg("quiver"), py::arg("d"), py::arg("theta"), py::arg("n_max"), py::arg("budget") = kDefaultSIBudget);
    m.def("is_log_concave", [](const std::vector<std::uint64_t> &v) { return log_concavity_check(v).ok; },
          py::arg("values"));
    m.def(
        "rational_invariants",
        [](const Quiver &q, const Vec &d) { return rational_invariants_profile(q, dim(q, d)).field_description; },
        py::arg("quiver"), py::arg("d"));

    m.def(
        "virtual_genus", [](const std::vector<int> &w) { return fraction(virtual_genus(w)); }, py::arg("weights"));
    m.def(
        "classify_canonical", [](const std::vector<int> &w) { return to_string(classify_canonical(w)); },
        py::arg("weights"));

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs one CLI command in-process; returns (exit code, stdout, stderr).");
}
