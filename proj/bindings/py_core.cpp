// Python bindings: a thin exact-conversion layer over the C++ core.
// Integers cross the boundary as arbitrary-precision Python ints (decimal
// strings internally), rationals as "p/q" strings, and structured results
// as JSON text decoded by the package wrapper.
#include <pybind11/pybind11.h>

#include <string>
#include <vector>

#include "hk/oracles.hpp"
#include "hk/render.hpp"
#include "hk/report.hpp"

namespace py = pybind11;

namespace {

using namespace hk;

py::int_ py_int(const Int& x) {
    PyObject* v = PyLong_FromString(x.str().c_str(), nullptr, 10);
    if (!v) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(v);
}

Int int_from(py::handle h) {
    if (!py::isinstance<py::int_>(h)) throw py::type_error("expected an int");
    return Int(py::cast<std::string>(py::str(h)));
}

IVec ivec_from(py::handle h) {
    if (!py::isinstance<py::sequence>(h) || py::isinstance<py::str>(h))
        throw py::type_error("expected a sequence of ints");
    IVec v;
    for (py::handle x : py::reinterpret_borrow<py::sequence>(h)) v.push_back(int_from(x));
    return v;
}

std::vector<IVec> rows_from(py::handle h) {
    if (!py::isinstance<py::sequence>(h) || py::isinstance<py::str>(h))
        throw py::type_error("expected a sequence of integer vectors");
    std::vector<IVec> rows;
    for (py::handle r : py::reinterpret_borrow<py::sequence>(h)) rows.push_back(ivec_from(r));
    if (rows.empty()) throw ValidationError("no generators");
    return rows;
}

py::list ivec_to_py(const IVec& v) {
    py::list out;
    for (const Int& x : v) out.append(py_int(x));
    return out;
}

py::list rows_to_py(const std::vector<IVec>& rows) {
    py::list out;
    for (const IVec& r : rows) out.append(ivec_to_py(r));
    return out;
}

AffineSemigroup sg(py::handle gens) {
    std::vector<IVec> rows = rows_from(gens);
    return AffineSemigroup::create(rows, rows[0].size());
}

Polycell cell(py::handle gens, py::handle ideal) {
    AffineSemigroup m = sg(gens);
    MonomialIdeal id =
        MonomialIdeal::create(m, ideal.is_none() ? m.generators() : rows_from(ideal));
    return Polycell::create(m, id);
}

std::string version_string() {
    std::string v = tool_version();
    size_t sp = v.find(' ');
    return sp == std::string::npos ? v : v.substr(sp + 1);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact lattice-point core for Hilbert-Kunz functions of normal affine "
              "semigroup rings";
    m.attr("__version__") = version_string();

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);

    m.def(
        "support_hyperplanes",
        [](py::handle generators) {
            std::vector<IVec> rows = rows_from(generators);
            return rows_to_py(hk::support_hyperplanes(rows, rows[0].size()).normals);
        },
        py::arg("generators"),
        "Irredundant facet normals of cone(generators), primitive, lex sorted");

    m.def(
        "extreme_rays",
        [](py::handle generators) {
            std::vector<IVec> rows = rows_from(generators);
            SupportHyperplanes h = hk::support_hyperplanes(rows, rows[0].size());
            return rows_to_py(hk::extreme_rays(rows, h));
        },
        py::arg("generators"), "Primitive extreme rays of cone(generators)");

    m.def(
        "is_pointed",
        [](py::handle generators) {
            std::vector<IVec> rows = rows_from(generators);
            return hk::is_pointed(rows, rows[0].size());
        },
        py::arg("generators"), "cone(generators) contains no line");

    m.def(
        "is_normal", [](py::handle generators) { return sg(generators).is_normal(); },
        py::arg("generators"), "The semigroup equals cone cap Z^d");

    m.def(
        "contains",
        [](py::handle generators, py::handle x) { return sg(generators).contains(ivec_from(x)); },
        py::arg("generators"), py::arg("x"), "Semigroup membership of x (not mere cone membership)");

    m.def(
        "count",
        [](py::handle generators, py::handle n, py::handle ideal) {
            return py_int(cell(generators, ideal).count(int_from(n)));
        },
        py::arg("generators"), py::arg("n"), py::arg("ideal") = py::none(),
        "#(n*P cap Z^d) for P = cone \\ union of (d_j + cone); ideal defaults to the generators");

    m.def(
        "hk_counts",
        [](py::handle generators, py::handle p, unsigned e_max, py::handle ideal) {
            Polycell pc = cell(generators, ideal);
            Int prime = int_from(p);
            py::list out;
            for (unsigned e = 1; e <= e_max; ++e) out.append(py_int(hk_value(pc, prime, e)));
            return out;
        },
        py::arg("generators"), py::arg("p"), py::arg("e_max"), py::arg("ideal") = py::none(),
        "Lattice-point counts of (p^e)*P for e = 1..e_max");

    m.def(
        "bfs_lengths",
        [](py::handle generators, py::handle p, unsigned e_max, py::handle ideal) {
            AffineSemigroup m2 = sg(generators);
            MonomialIdeal id =
                MonomialIdeal::create(m2, ideal.is_none() ? m2.generators() : rows_from(ideal));
            Int prime = int_from(p);
            py::list out;
            for (unsigned e = 1; e <= e_max; ++e)
                out.append(py_int(semigroup_bfs_hk(m2, id, prime, e)));
            return out;
        },
        py::arg("generators"), py::arg("p"), py::arg("e_max"), py::arg("ideal") = py::none(),
        "Independent check: the same lengths by pure semigroup membership enumeration");

    m.def(
        "hk_via_cells",
        [](py::handle generators, py::handle p, unsigned e) {
            return py_int(hk::hk_via_cells(sg(generators), int_from(p), e));
        },
        py::arg("generators"), py::arg("p"), py::arg("e"),
        "The count of (p^e)*P recomputed through the class decomposition");

    m.def(
        "volume_via_cells",
        [](py::handle generators) {
            return to_string(hk::volume_via_cells(cell(generators, py::none())));
        },
        py::arg("generators"), "vol(P) as the exact sum of cell volumes, as a rational string");

    m.def(
        "hs_multiplicity",
        [](py::handle generators, py::handle ideal) {
            return to_string(cell(generators, ideal).hilbert_samuel_multiplicity());
        },
        py::arg("generators"), py::arg("ideal") = py::none(),
        "Hilbert-Samuel multiplicity d! * vol(cone \\ conv(ideal + cone)), as a rational string");

    m.def(
        "ehrhart_json",
        [](py::handle generators, py::handle ideal) {
            QuasiPolynomial qp = ehrhart_quasipolynomial(cell(generators, ideal));
            Json j = qp_to_json(qp);
            j["latex"] = qp.latex();
            return j.dump();
        },
        py::arg("generators"), py::arg("ideal") = py::none(),
        "Fitted counting quasipolynomial of P as JSON text");

    m.def(
        "hk_form_json",
        [](py::handle generators, py::handle p, unsigned e_max) {
            return hk_form_to_json(hk_form(cell(generators, py::none()), int_from(p), e_max))
                .dump();
        },
        py::arg("generators"), py::arg("p"), py::arg("e_max") = 2,
        "Closed form of e -> #((p^e)*P cap Z^d) as JSON text, checked against direct counts");

    m.def(
        "cell_classes_json",
        [](py::handle generators) {
            CellDecomposition dec = CellDecomposition::create(sg(generators));
            Json out;
            out["class_count"] = dec.classes.size();
            out["volume"] = json_rat(dec.volume());
            Json classes = Json::array();
            for (const ConicClass& c : dec.classes) {
                Json jc;
                jc["label"] = json_ivec(c.representative.label);
                jc["multiplicity_in_P"] = c.members.size();
                jc["mu"] = json_int(c.mu);
                classes.push_back(jc);
            }
            out["classes"] = classes;
            return out.dump();
        },
        py::arg("generators"),
        "Classes of the integer-threshold cell decomposition of P for the maximal ideal");

    m.def(
        "hypersurface_lengths",
        [](py::handle p, size_t nvars, py::handle terms, unsigned e_max) {
            std::vector<std::pair<IVec, Int>> ts;
            if (!py::isinstance<py::sequence>(terms))
                throw py::type_error("expected a sequence of (exponents, coefficient) pairs");
            for (py::handle t : py::reinterpret_borrow<py::sequence>(terms)) {
                py::sequence pr = py::reinterpret_borrow<py::sequence>(t);
                if (py::len(pr) != 2)
                    throw py::type_error("each term must be (exponents, coefficient)");
                ts.emplace_back(ivec_from(pr[0]), int_from(pr[1]));
            }
            HypersurfacePresentation f =
                HypersurfacePresentation::create(int_from(p), nvars, std::move(ts));
            py::list out;
            for (unsigned e = 1; e <= e_max; ++e) out.append(py_int(hk_hypersurface(f, e)));
            return out;
        },
        py::arg("p"), py::arg("nvars"), py::arg("terms"), py::arg("e_max"),
        "Lengths of k[x]/((x_i^q) + (f)) over F_p for q = p^e, e = 1..e_max");

    m.def(
        "run_spec_json",
        [](const std::string& text, bool is_json) {
            ProblemSpec spec = parse_spec_text(text, "<python>", is_json);
            return report_bytes(run_tasks(spec));
        },
        py::arg("text"), py::arg("is_json"),
        "Parse a problem spec (JSON or key = value text) and run its task list; returns the "
        "report as JSON text");

    m.def(
        "svg",
        [](py::handle generators, py::handle n, py::handle ideal) {
            return emit_svg(cell(generators, ideal), int_from(n));
        },
        py::arg("generators"), py::arg("n"), py::arg("ideal") = py::none(),
        "SVG drawing of n*P with its lattice points (dimension 2 only)");
}
