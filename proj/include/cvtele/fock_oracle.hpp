#ifndef CVTELE_FOCK_ORACLE_HPP
#define CVTELE_FOCK_ORACLE_HPP

#include <complex>
#include <utility>
#include <vector>

#include "cvtele/resource_state.hpp"

namespace cvtele::oracle {

/// Polar quadrature over the complex plane: Gauss-Laguerre in t = |alpha|^2
/// (weight e^{-t}) times a uniform phase grid. angular_nodes = 0 means
/// "auto": 4(m+n) + 8, the exactness bound for the integrand's
/// trigonometric degree.
struct QuadratureScheme {
    int radial_nodes = 48;
    int angular_nodes = 0;
};

/// Gauss-Laguerre nodes and weights for weight e^{-t} on [0, inf).
std::pair<std::vector<double>, std::vector<double>> gauss_laguerre(int order);

/// Displacement-operator matrix element <j|D(alpha)|k>.
std::complex<double> displacement_element(int j, int k, std::complex<double> alpha);

/// Two-mode characteristic function by direct double sum over the state's
/// shifted-diagonal support.
std::complex<double> chi12_numeric(const FockState& state, std::complex<double> alpha,
                                   std::complex<double> beta);

/// Brute-force quadrature of the fidelity integral with the coherent input
/// amplitude mu kept explicit (mu-independence is a checked property, not
/// an assumption). Throws quadrature_error if doubling the radial order
/// moves the result by more than 1e-8.
double fidelity_numeric(const FockState& state, std::complex<double> mu,
                        QuadratureScheme scheme = {});

/// Moment-based covariance matrix via ladder-operator sums; asserts the
/// structural zeros (<a>, <b>, <a^2>, <b^2>) of the shifted-diagonal support.
TwoModeCM cm_numeric(const FockState& state);

}  // namespace cvtele::oracle

#endif
