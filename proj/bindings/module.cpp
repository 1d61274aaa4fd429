#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cvtele/closed_form.hpp"
#include "cvtele/fock_oracle.hpp"
#include "cvtele/gaussian_calculus.hpp"
#include "cvtele/non_gaussianity.hpp"
#include "cvtele/resource_state.hpp"
#include "cvtele/special_functions.hpp"

namespace py = pybind11;
using namespace cvtele;

namespace {

SubtractionSpec make_spec(int m, int n, double lam) {
    SubtractionSpec spec{m, n, lam};
    spec.validate();
    return spec;
}

}  // namespace

PYBIND11_MODULE(_cvtele, mod) {
    mod.doc() = "Teleportation fidelity and non-Gaussianity of photon-subtracted "
                "two-mode squeezed vacuum resources";

    mod.def("jacobi_p", &sf::jacobi_p, py::arg("m"), py::arg("alpha"), py::arg("beta"),
            py::arg("x"));
    mod.def("laguerre_assoc", &sf::laguerre_assoc, py::arg("n"), py::arg("k"), py::arg("x"));
    mod.def("h_entropy", &sf::h_entropy, py::arg("x"));

    mod.def(
        "normalization",
        [](int m, int n, double lam) { return normalization(make_spec(m, n, lam)); },
        py::arg("m"), py::arg("n"), py::arg("lam"),
        "Squared normalization constant of the (m,n)-subtracted state");
    mod.def(
        "covariance_matrix",
        [](int m, int n, double lam) {
            const TwoModeCM cm = covariance_matrix(make_spec(m, n, lam));
            return py::make_tuple(cm.a_diag, cm.b_diag, cm.c_diag);
        },
        py::arg("m"), py::arg("n"), py::arg("lam"),
        "Block diagonals (a, b, c) of the standard-form covariance matrix");
    mod.def(
        "non_gaussianity",
        [](int m, int n, double lam) { return non_gaussianity(make_spec(m, n, lam)); },
        py::arg("m"), py::arg("n"), py::arg("lam"));
    mod.def(
        "chi12",
        [](int m, int n, double lam, std::complex<double> alpha, std::complex<double> beta) {
            return chi12(make_spec(m, n, lam), alpha, beta);
        },
        py::arg("m"), py::arg("n"), py::arg("lam"), py::arg("alpha"), py::arg("beta"));

    mod.def(
        "fidelity",
        [](int m, int n, double lam, const std::string& path) {
            const SubtractionSpec spec = make_spec(m, n, lam);
            if (path == "engine") return fidelity_general(spec);
            if (path == "closed") return fidelity_closed_value(m, n, lam);
            if (path == "oracle") {
                return oracle::fidelity_numeric(fock_coefficients(spec, 1e-16), 0.0);
            }
            if (path == "auto") {
                return std::min(m, n) <= 5 ? fidelity_closed_value(m, n, lam)
                                           : fidelity_general(spec);
            }
            throw py::value_error("path must be closed|engine|oracle|auto");
        },
        py::arg("m"), py::arg("n"), py::arg("lam"), py::arg("path") = "auto");
    mod.def(
        "fidelity_closed_report",
        [](int m, int n, double lam) {
            const ClosedFormReport rep = fidelity_closed(m, n, lam);
            py::dict out;
            out["value"] = rep.value;
            out["formula_id"] = rep.formula_id;
            out["printed_formula_deviation"] =
                rep.printed_formula_deviation ? py::object(py::float_(*rep.printed_formula_deviation))
                                              : py::object(py::none());
            return out;
        },
        py::arg("m"), py::arg("n"), py::arg("lam"));
    mod.def(
        "fidelity_oracle",
        [](int m, int n, double lam, std::complex<double> mu, double tail_eps) {
            return oracle::fidelity_numeric(fock_coefficients(make_spec(m, n, lam), tail_eps), mu);
        },
        py::arg("m"), py::arg("n"), py::arg("lam"), py::arg("mu") = std::complex<double>(0.0, 0.0),
        py::arg("tail_eps") = 1e-16);
    mod.def(
        "covariance_matrix_oracle",
        [](int m, int n, double lam, double tail_eps) {
            const TwoModeCM cm =
                oracle::cm_numeric(fock_coefficients(make_spec(m, n, lam), tail_eps));
            return py::make_tuple(cm.a_diag, cm.b_diag, cm.c_diag);
        },
        py::arg("m"), py::arg("n"), py::arg("lam"), py::arg("tail_eps") = 1e-16);
    mod.def("coefficient_table_json", &coefficient_table_json);
}
