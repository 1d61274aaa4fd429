#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cvtele/special_functions.hpp"

using namespace cvtele::sf;

TEST_CASE("factorials") {
    CHECK(factorial(0) == 1.0);
    CHECK(factorial(5) == 120.0);
    CHECK(factorial(20) == 2432902008176640000.0);
    CHECK(log_factorial(0) == 0.0);
    CHECK(std::abs(log_factorial(100) - std::lgamma(101.0)) < 1e-12);
    CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10.0);
    CHECK(binomial(10, 0) == 1.0);
    CHECK(binomial(4, 7) == 0.0);
    CHECK(binomial(4, -1) == 0.0);
    // symmetry at moderate size
    CHECK(binomial(30, 11) == binomial(30, 19));
}

TEST_CASE("jacobi polynomial") {
    // P_0 = 1, P_1^{(a,b)}(x) = (a - b)/2 + (a + b + 2) x / 2
    CHECK(jacobi_p(0, 3, 1, 0.7) == 1.0);
    CHECK(jacobi_p(1, 2, 1, 0.4) == doctest::Approx(0.5 + 2.5 * 0.4).epsilon(1e-14));
    // value at x = 1 is binomial(m + alpha, m), exactly
    for (int m = 0; m <= 8; ++m) {
        for (int a = 0; a <= 4; ++a) {
            CHECK(jacobi_p(m, a, 2, 1.0) == binomial(m + a, m));
        }
    }
    // three-term comparison against a direct sum for P_3^{(1,2)}
    const double x = 1.37;
    double direct = 0.0;
    for (int s = 0; s <= 3; ++s) {
        direct += binomial(3 + 1, s) * binomial(3 + 2, 3 - s) * std::pow((x - 1) / 2, 3 - s) *
                  std::pow((x + 1) / 2, s);
    }
    CHECK(jacobi_p(3, 1, 2, x) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("associated Laguerre") {
    CHECK(laguerre_assoc(0, 3, 2.0) == 1.0);
    CHECK(laguerre_assoc(1, 2, 0.5) == doctest::Approx(3.0 - 0.5).epsilon(1e-14));
    // L_2^{(0)}(x) = 1 - 2x + x^2/2
    CHECK(laguerre_assoc(2, 0, 1.3) ==
          doctest::Approx(1.0 - 2 * 1.3 + 1.3 * 1.3 / 2).epsilon(1e-13));
    // scaled variant agrees where both are finite
    const auto scaled = laguerre_assoc_scaled(25, 3, 7.5);
    CHECK(scaled.collapsed() == doctest::Approx(laguerre_assoc(25, 3, 7.5)).epsilon(1e-10));
    // scaled variant survives orders where the plain value overflows
    const auto big = laguerre_assoc_scaled(900, 2, 40.0);
    CHECK(std::isfinite(big.value));
}

TEST_CASE("entropy kernel h") {
    CHECK(h_entropy(0.5) == 0.0);
    // h(3/2) = 2 ln 2
    CHECK(h_entropy(1.5) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
    // monotone increasing above 1/2
    CHECK(h_entropy(0.9) < h_entropy(1.4));
    // clamp window just below 1/2, hard failure further out
    CHECK(h_entropy(0.5 - 1e-12) == 0.0);
    CHECK_THROWS_AS(h_entropy(0.4), std::domain_error);
}
