#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quotdeg/bound_poly.hpp"
#include "quotdeg/errors.hpp"
#include "quotdeg/quot.hpp"
#include "quotdeg/residue.hpp"
#include "quotdeg/versch.hpp"

namespace py = pybind11;
using namespace quotdeg;

namespace {

// Exact values cross the boundary as fractions.Fraction / int, never floats.
py::object to_fraction(const BigRational& q) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::str(q.str()));
}

py::object to_py_int(const BigRational& q) {
    // q is integral whenever this is called; arbitrary precision via string.
    return py::module_::import("builtins").attr("int")(py::str(q.str()));
}

py::dict report_to_dict(const BoundReport& r) {
    py::dict d;
    d["bound_exact"] = to_fraction(r.bound_exact);
    d["quotF_degree_bound"] = to_py_int(r.quotf_degree_bound);
    d["trig_value"] = r.trig_value;
    d["rel_err"] = r.rel_err;
    d["tol"] = r.tol;
    d["within_tol"] = r.within_tol;
    d["bound_is_integer"] = r.bound_is_integer;
    d["deg_pushforward"] = r.degrees.deg_pushforward;
    d["deg_hom"] = r.degrees.deg_hom;
    d["euler_diff"] = r.degrees.euler_diff;
    if (r.g2) {
        d["g2_exact"] = to_fraction(r.g2->exact);
        d["g2_bound"] = to_fraction(r.g2->bound);
        d["gap"] = to_fraction(r.g2->gap);
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_quotdeg, m) {
    m.doc() = "Exact degrees of zero-dimensional Quot schemes and the degree bound "
              "for the rank-2 Frobenius pullback map";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<DimensionPositive>(m, "DimensionPositive", PyExc_ValueError);
    py::register_exception<NonInvertible>(m, "NonInvertible", PyExc_ArithmeticError);
    py::register_exception<NonIntegerSign>(m, "NonIntegerSign", PyExc_RuntimeError);
    py::register_exception<NonRationalResult>(m, "NonRationalResult", PyExc_RuntimeError);
    py::register_exception<CrossCheckFailure>(m, "CrossCheckFailure", PyExc_RuntimeError);

    py::class_<QuotParams>(m, "QuotParams", "Validated Quot-scheme parameter pack")
        .def_readonly("n", &QuotParams::n)
        .def_readonly("d", &QuotParams::d)
        .def_readonly("r", &QuotParams::r)
        .def_readonly("g", &QuotParams::g)
        .def_readonly("a", &QuotParams::a)
        .def_readonly("b", &QuotParams::b)
        .def_readonly("eps", &QuotParams::eps)
        .def_readonly("s_r", &QuotParams::s_r)
        .def_readonly("e_max", &QuotParams::e_max)
        .def_readonly("quot_dim", &QuotParams::quot_dim)
        .def("__repr__", [](const QuotParams& q) {
            return "QuotParams(n=" + std::to_string(q.n) + ", d=" + std::to_string(q.d) +
                   ", r=" + std::to_string(q.r) + ", g=" + std::to_string(q.g) +
                   ", eps=" + std::to_string(q.eps) + ")";
        });

    m.def("derive_params", &derive_params, py::arg("n"), py::arg("d"), py::arg("r"),
          py::arg("g"), "Derive (a, b, eps, s_r, e_max, quot_dim) for a parameter pack");
    m.def("is_zero_dimensional", &is_zero_dimensional, py::arg("params"));

    m.def(
        "holla_degree",
        [](const QuotParams& q) { return to_py_int(holla_degree(q)); }, py::arg("params"),
        "Exact degree of the zero-dimensional Quot scheme (assumes a general stable bundle)");
    m.def(
        "holla_degree",
        [](long long n, long long d, long long r, long long g) {
            return to_py_int(holla_degree(derive_params(n, d, r, g)));
        },
        py::arg("n"), py::arg("d"), py::arg("r"), py::arg("g"));

    m.def(
        "brute_force_degree",
        [](const QuotParams& q, long long max_n, double imag_tol) {
            return brute_force_degree(q, {max_n, imag_tol});
        },
        py::arg("params"), py::arg("max_n") = 64, py::arg("imag_tol") = 1e-6,
        "Floating-point oracle: direct summation over explicit complex roots of unity");

    m.def(
        "specialize",
        [](long long g, long long p) { return specialize(VerschParams(p, g)); }, py::arg("g"),
        py::arg("p"), "The parameter pack (2p, 2(p-1)(g-1), 2, g) of the pullback bound");
    m.def(
        "bound_exact",
        [](long long g, long long p) { return to_fraction(bound_exact(VerschParams(p, g))); },
        py::arg("g"), py::arg("p"),
        "Exact degree bound (-4p)^{g-1} * sum_{z^{2p}=1, z!=1} z^{g-1}/(z-1)^{2g-2}");
    m.def(
        "bound_trig",
        [](long long g, long long p) { return bound_trig(VerschParams(p, g)); }, py::arg("g"),
        py::arg("p"), "Float cross-check via the sine power sum");
    m.def(
        "quotf_degree_bound",
        [](long long g, long long p) {
            return to_py_int(quotf_degree_bound(VerschParams(p, g)));
        },
        py::arg("g"), py::arg("p"),
        "p^g * bound_exact, cross-checked against the root-of-unity degree engine");
    m.def(
        "pushforward_degrees",
        [](long long g, long long p) {
            PushforwardDegrees d = pushforward_degrees(VerschParams(p, g));
            return py::make_tuple(d.deg_pushforward, d.deg_hom, d.euler_diff);
        },
        py::arg("g"), py::arg("p"),
        "(deg_pushforward, deg_hom, euler_diff) with euler_diff asserted zero");
    m.def(
        "g2_comparison",
        [](long long p) {
            G2Comparison c = g2_comparison(p);
            py::dict d;
            d["exact"] = to_fraction(c.exact);
            d["bound"] = to_fraction(c.bound);
            d["gap"] = to_fraction(c.gap);
            return d;
        },
        py::arg("p"), "Known exact genus-2 degree vs the bound; gap is exactly p^3 - p");
    m.def(
        "bound_report",
        [](long long g, long long p, double tol) {
            return report_to_dict(bound_report(VerschParams(p, g), tol));
        },
        py::arg("g"), py::arg("p"), py::arg("tol") = 1e-9);

    py::class_<PolynomialInP>(m, "PolynomialInP",
                              "The bound as an exact polynomial in the characteristic")
        .def_property_readonly("g", &PolynomialInP::genus)
        .def_property_readonly("degree", &PolynomialInP::degree)
        .def(
            "coeffs",
            [](const PolynomialInP& poly) {
                py::dict d;
                for (std::size_t k = 0; k < poly.coeffs().size(); ++k)
                    if (!poly.coeffs()[k].is_zero())
                        d[py::int_(k)] = to_fraction(poly.coeffs()[k]);
                return d;
            },
            "Nonzero coefficients as {power: Fraction}")
        .def(
            "__call__",
            [](const PolynomialInP& poly, long long p) {
                return to_fraction(eval_polynomial(poly, p));
            },
            py::arg("p"))
        .def("__repr__", [](const PolynomialInP& poly) {
            return "PolynomialInP(g=" + std::to_string(poly.genus()) +
                   ", degree=" + std::to_string(poly.degree()) + ")";
        });

    m.def("bound_polynomial", &bound_polynomial, py::arg("g"),
          "Interpolate the bound as the unique polynomial of degree 3g-3 and verify it");
    m.def(
        "eval_polynomial",
        [](const PolynomialInP& poly, long long p) {
            return to_fraction(eval_polynomial(poly, p));
        },
        py::arg("poly"), py::arg("p"));

    m.def(
        "nontrivial_root_sum",
        [](unsigned long n, long long g) { return to_fraction(nontrivial_root_sum(n, g)); },
        py::arg("n"), py::arg("g"),
        "Exact sum of z^{g-1}/(z-1)^{2g-2} over the nontrivial n-th roots of unity");
    m.def(
        "cyclotomic",
        [](unsigned long n) {
            const PolyQ phi = cyclotomic(n);
            py::list coeffs;
            for (const auto& c : phi.coeffs()) coeffs.append(to_py_int(c));
            return coeffs;
        },
        py::arg("n"), "Coefficients of the n-th cyclotomic polynomial, low power first");
}
