#include <doctest.h>

#include <cmath>
#include <complex>

#include "cvtele/errors.hpp"
#include "cvtele/fock_oracle.hpp"
#include "cvtele/gaussian_calculus.hpp"
#include "cvtele/non_gaussianity.hpp"
#include "cvtele/special_functions.hpp"

using namespace cvtele;
using cd = std::complex<double>;

TEST_CASE("gauss-laguerre rule") {
    const auto [nodes, weights] = oracle::gauss_laguerre(24);
    REQUIRE(nodes.size() == 24);
    // integrates t^k e^{-t} = k! exactly for k well below 2*order
    for (int k : {0, 1, 5, 12}) {
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * std::pow(nodes[i], k);
        CHECK(sum == doctest::Approx(sf::factorial(k)).epsilon(1e-10));
    }
}

TEST_CASE("displacement matrix elements") {
    const cd alpha(0.4, -0.3);
    // <0|D|0> = e^{-|alpha|^2/2}
    CHECK(std::abs(oracle::displacement_element(0, 0, alpha) -
                   std::exp(-0.5 * std::norm(alpha))) < 1e-14);
    // <1|D|0> = alpha e^{-|alpha|^2/2}
    CHECK(std::abs(oracle::displacement_element(1, 0, alpha) -
                   alpha * std::exp(-0.5 * std::norm(alpha))) < 1e-14);
    // <0|D|1> = -alpha* e^{-|alpha|^2/2}
    CHECK(std::abs(oracle::displacement_element(0, 1, alpha) +
                   std::conj(alpha) * std::exp(-0.5 * std::norm(alpha))) < 1e-14);
    // unitarity: columns of D have unit norm (summed far past alpha^2)
    double col = 0.0;
    for (int j = 0; j < 60; ++j) col += std::norm(oracle::displacement_element(j, 2, alpha));
    CHECK(col == doctest::Approx(1.0).epsilon(1e-12));
    // large-index elements stay finite through the rescaled recurrence
    CHECK(std::isfinite(std::abs(oracle::displacement_element(1200, 1180, cd(1.5, 0.5)))));
}

TEST_CASE("chi12 numeric agrees with the derivative engine") {
    for (auto [m, n] : {std::pair{0, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 2}}) {
        const SubtractionSpec spec{m, n, 0.55};
        const FockState st = fock_coefficients(spec, 1e-16);
        for (cd a : {cd(0.3, 0.2), cd(-0.5, 0.1)}) {
            for (cd b : {cd(0.1, -0.4), cd(0.25, 0.0)}) {
                CHECK(std::abs(oracle::chi12_numeric(st, a, b) - chi12(spec, a, b)) < 1e-9);
            }
        }
    }
}

TEST_CASE("fidelity quadrature") {
    const FockState st = fock_coefficients({1, 1, 0.5}, 1e-16);
    CHECK(oracle::fidelity_numeric(st, 0.0) == doctest::Approx(0.84375).epsilon(1e-9));
    // independent of the teleported coherent amplitude
    const double base = oracle::fidelity_numeric(st, cd(0.7, -0.4));
    CHECK(base == doctest::Approx(0.84375).epsilon(1e-8));

    const FockState asym = fock_coefficients({0, 2, 0.5}, 1e-16);
    CHECK(oracle::fidelity_numeric(asym, 0.0) == doctest::Approx(0.421875).epsilon(1e-9));

    // an unconverged radial rule must be caught by the doubling check
    oracle::QuadratureScheme coarse;
    coarse.radial_nodes = 2;
    CHECK_THROWS_AS(oracle::fidelity_numeric(fock_coefficients({2, 2, 0.8}, 1e-16), 0.0, coarse),
                    quadrature_error);
}

TEST_CASE("moment covariance matrix matches the closed form") {
    for (auto [m, n] : {std::pair{0, 0}, {0, 1}, {1, 1}, {2, 3}, {4, 4}}) {
        for (double lam : {0.2, 0.5, 0.8}) {
            if (m + n > 0 && lam == 0.0) continue;
            const TwoModeCM closed = covariance_matrix({m, n, lam});
            const TwoModeCM numeric = oracle::cm_numeric(fock_coefficients({m, n, lam}, 1e-16));
            CHECK(std::abs(closed.a_diag - numeric.a_diag) < 1e-8);
            CHECK(std::abs(closed.b_diag - numeric.b_diag) < 1e-8);
            CHECK(std::abs(closed.c_diag - numeric.c_diag) < 1e-8);
        }
    }
    // and the non-Gaussianity computed through it agrees too
    const double via_moments =
        non_gaussianity_from_cm(oracle::cm_numeric(fock_coefficients({1, 1, 0.5}, 1e-16)));
    CHECK(via_moments == doctest::Approx(non_gaussianity({1, 1, 0.5})).epsilon(1e-8));
}
