#include "pivar/errors.hpp"
#include "pivar/exprio.hpp"
#include "pivar/models.hpp"
#include "pivar/partitions.hpp"
#include "pivar/scenarios.hpp"
#include "pivar/tideal.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pivar;

namespace {

Polynomial as_poly(const py::object& o) {
    if (py::isinstance<Polynomial>(o))
        return o.cast<Polynomial>();
    return parse(o.cast<std::string>());
}

std::vector<Polynomial> as_polys(const py::iterable& items) {
    std::vector<Polynomial> out;
    for (const auto& item : items)
        out.push_back(as_poly(py::reinterpret_borrow<py::object>(item)));
    return out;
}

Rational as_rational(const py::object& o) {
    if (py::isinstance<py::int_>(o))
        return Rational(py::str(o).cast<std::string>());
    // str or fractions.Fraction
    Rational q(py::str(o).cast<std::string>());
    if (q.get_den() == 0)
        throw Error("zero denominator");
    q.canonicalize();
    return q;
}

py::dict cochar_dict(const CocharTable& t) {
    py::dict out;
    for (const auto& [p, m] : t.entries)
        out[py::tuple(py::cast(p.parts()))] = m;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Identities of free associative algebras over Q";

    // Translators are tried newest first, so the base class goes first.
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<SyntaxError>(m, "SyntaxError", PyExc_ValueError);

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init([](const std::string& text) { return parse(text); }), py::arg("text"))
        .def_static("variable", &Polynomial::variable)
        .def("__str__", [](const Polynomial& f) { return print(f); })
        .def("__repr__", [](const Polynomial& f) { return "Polynomial('" + print(f) + "')"; })
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
        .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
        .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
        .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
        .def("__mul__", [](const Polynomial& a, const py::object& c) { return a * as_rational(c); })
        .def("__rmul__", [](const Polynomial& a, const py::object& c) { return as_rational(c) * a; })
        .def("__neg__", [](const Polynomial& a) { return -a; })
        .def("__pow__", [](const Polynomial& a, int e) { return pow(a, e); })
        .def("is_zero", &Polynomial::is_zero)
        .def("__len__", &Polynomial::size)
        .def("max_variable", &Polynomial::max_variable);

    m.def("parse", &parse, py::arg("text"));
    m.def("commutator", [](const py::object& a, const py::object& b) { return commutator(as_poly(a), as_poly(b)); });
    m.def("multilinearize", [](const py::object& f) { return multilinearize(as_poly(f)); });
    m.def("catalog", &catalog, py::arg("name"));

    py::class_<IdealPresentation>(m, "Ideal")
        .def(py::init([](const py::iterable& gens) { return IdealPresentation(as_polys(gens)); }),
             py::arg("generators"))
        .def("with_", [](const IdealPresentation& I, const py::iterable& extra) { return I.with(as_polys(extra)); })
        .def_property_readonly("generators", &IdealPresentation::generators)
        .def("contains", [](const IdealPresentation& I, const py::object& g) { return contains(I, as_poly(g)); })
        .def("span_json",
             [](const IdealPresentation& I, const std::vector<int>& k) {
                 return to_json(*consequence_basis(I, MultiDegree(k)));
             })
        .def("rank", [](const IdealPresentation& I,
                        const std::vector<int>& k) { return consequence_basis(I, MultiDegree(k))->rank(); })
        .def(
            "cocharacter",
            [](const IdealPresentation& I, int n, std::optional<int> max_parts) {
                return cochar_dict(cocharacter(I, n, max_parts.value_or(n)));
            },
            py::arg("n"), py::arg("max_parts") = py::none())
        .def("pn_dim", [](const IdealPresentation& I, int n) { return pn_dim(I, n); })
        .def("highest_weight", [](const IdealPresentation& I,
                                  const py::object& f) { return highest_weight_check(I, as_poly(f)); })
        .def("independent", [](const IdealPresentation& I, const py::iterable& fs) {
            return independent_modulo(I, as_polys(fs));
        });

    m.def("kostka", [](const std::vector<int>& shape, const std::vector<int>& content) {
        return kostka(Partition(shape), MultiDegree(content));
    });
    m.def("hook_dim", [](const std::vector<int>& shape) { return hook_dim(Partition(shape)); });

    py::class_<Algebra>(m, "Algebra")
        .def_static("builtin", &builtin_algebra, py::arg("name"))
        .def_static("from_json", &algebra_from_json, py::arg("text"))
        .def("to_json", [](const Algebra& a) { return algebra_to_json(a); })
        .def_property_readonly("name", &Algebra::name)
        .def_property_readonly("basis", &Algebra::basis)
        .def("evaluate",
             [](const Algebra& a, const py::object& f, const std::string& assignment) {
                 return a.format(evaluate(as_poly(f), a, parse_assignment(a, assignment)));
             })
        .def("satisfies", [](const Algebra& a, const py::object& f) { return satisfies(a, as_poly(f)); })
        .def("witness", [](const Algebra& a, const py::object& f) -> std::optional<std::string> {
            auto w = witness_nonzero(a, as_poly(f));
            if (!w)
                return std::nullopt;
            return format_assignment(a, *w);
        });

    m.def(
        "run_case_json",
        [](const std::string& name, int n_max, unsigned jobs) {
            RunOptions o;
            o.n_max = n_max;
            o.jobs = jobs;
            py::gil_scoped_release release;
            return to_json(run_case(name, o));
        },
        py::arg("case"), py::arg("n_max") = 6, py::arg("jobs") = 0);
    m.def(
        "verify_all_json",
        [](int n_max, unsigned jobs) {
            RunOptions o;
            o.n_max = n_max;
            o.jobs = jobs;
            py::gil_scoped_release release;
            return to_json(verify_all(o));
        },
        py::arg("n_max") = 6, py::arg("jobs") = 0);
    m.def(
        "lattice_dot", [](const std::string& name, int n_max) { return emit_dot(implication_graph(name, n_max)); },
        py::arg("case"), py::arg("n_max"));
    m.def("case_names", &case_names);
}
