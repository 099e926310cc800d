#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaps/json_io.hpp"

namespace py = pybind11;
using namespace gaps;
using gaps::io::json;

namespace {

Character make_character(const std::vector<std::string>& c, i64 p, int precision) {
    if (c.empty()) throw io::InputError("character needs at least one parameter");
    std::string text;
    for (std::size_t k = 0; k < c.size(); ++k) text += (k ? "," : "") + c[k];
    return io::parse_character(text, p, precision);
}

std::string xz_json(int i, int j, int n, int D, i64 p, int precision) {
    return io::to_json(xz_decompose(i, j, n, D, p, precision)).dump();
}

std::string act_json(const std::string& vector, const std::string& matrix) {
    const auto f = io::psvector_from_json(json::parse(vector));
    const auto g = io::matrix_from_json(json::parse(matrix), f.f.p(), f.f.cap());
    return io::to_json(act_group(g, f)).dump();
}

std::string check_json(const std::vector<std::string>& c, i64 p, int precision, i64 e) {
    auto chi = make_character(c, p, precision);
    chi.e = e;
    return io::to_json(check_analytic(chi)).dump();
}

std::string irreducible_json(const std::vector<std::string>& c, i64 p, int precision) {
    const auto chi = make_character(c, p, precision);
    return io::to_json(is_irreducible(chi, chi.n)).dump();
}

std::string rank_json(const std::vector<std::string>& c, int D, i64 p, int precision) {
    const auto chi = make_character(c, p, precision);
    const auto rep = phi_weight_rank(chi, chi.n, D);
    return io::to_json(rep, rep.irreducible).dump();
}

std::string weyl_json(const std::vector<std::string>& c, i64 p, int precision) {
    const auto chi = make_character(c, p, precision);
    json comps = json::array();
    for (const auto& comp : bruhat_components(chi, chi.n).components) comps.push_back(io::to_json(comp));
    return json{{"components", comps}}.dump();
}

std::string basechange_json(const std::string& series, int N) {
    const auto f = io::series_from_json(json::parse(series));
    const auto ctx = ResScalarsContext::make(f.p(), N, f.cap(), f.vars());
    return json{{"context", io::to_json(ctx)}, {"series", io::to_json(full_bc(f, ctx))}}.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "p-adic principal series toolkit";

    py::register_exception<io::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr ep) {
        try {
            if (ep) std::rethrow_exception(ep);
        } catch (const DomainError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const PrecisionError& e) {
            PyErr_SetString(PyExc_ArithmeticError, e.what());
        } catch (const DivergenceError& e) {
            PyErr_SetString(PyExc_ArithmeticError, e.what());
        } catch (const json::exception& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<PadicScalar>(m, "Padic")
        .def_static("from_int", &PadicScalar::from_int, py::arg("p"), py::arg("precision"), py::arg("n"))
        .def_static("from_rational", &PadicScalar::from_rational, py::arg("p"), py::arg("precision"), py::arg("num"),
                    py::arg("den"))
        .def_property_readonly("p", &PadicScalar::p)
        .def_property_readonly("valuation", [](const PadicScalar& x) -> py::object {
            if (x.is_zero()) return py::none();
            return py::int_(x.val());
        })
        .def_property_readonly("unit", &PadicScalar::unit)
        .def_property_readonly("precision", &PadicScalar::rel_prec)
        .def("is_zero", &PadicScalar::is_zero)
        .def("same", &PadicScalar::same)
        .def("inv", &PadicScalar::inv)
        .def("pow", &PadicScalar::pow)
        .def("residue", &PadicScalar::residue)
        .def("to_json", [](const PadicScalar& x) { return io::to_json(x).dump(); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def("__repr__", &PadicScalar::str);

    m.def("power_char", &power_char, py::arg("t"), py::arg("c"));
    m.def("kostant_count", &kostant_count, py::arg("shift"));
    m.def("xz_decompose_json", &xz_json, py::arg("i"), py::arg("j"), py::arg("n"), py::arg("truncation"), py::arg("p"),
          py::arg("precision"));
    m.def("act_json", &act_json, py::arg("vector"), py::arg("matrix"));
    m.def("check_character_json", &check_json, py::arg("c"), py::arg("p"), py::arg("precision"), py::arg("e") = 1);
    m.def("is_irreducible_json", &irreducible_json, py::arg("c"), py::arg("p"), py::arg("precision"));
    m.def("weight_rank_json", &rank_json, py::arg("c"), py::arg("truncation"), py::arg("p"), py::arg("precision"));
    m.def("bruhat_components_json", &weyl_json, py::arg("c"), py::arg("p"), py::arg("precision"));
    m.def("base_change_json", &basechange_json, py::arg("series"), py::arg("N"));
}
