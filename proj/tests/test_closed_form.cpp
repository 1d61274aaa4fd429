#include <doctest.h>

#include <cmath>
#include <json.hpp>

#include "cvtele/closed_form.hpp"
#include "cvtele/errors.hpp"
#include "cvtele/gaussian_calculus.hpp"

using namespace cvtele;

TEST_CASE("baseline and one-sided rows") {
    for (double lam : {0.05, 0.3, 0.55, 0.8, 0.95}) {
        CHECK(fidelity_closed_value(0, 0, lam) ==
              doctest::Approx((1 + lam) / 2).epsilon(1e-13));
        for (int n = 1; n <= 6; ++n) {
            CHECK(fidelity_closed_value(0, n, lam) ==
                  doctest::Approx(std::pow((1 + lam) / 2, n + 1)).epsilon(1e-12));
        }
    }
    CHECK(fidelity_closed_value(1, 1, 0.5) == doctest::Approx(0.84375).epsilon(1e-13));
}

TEST_CASE("closed vs engine across the table") {
    for (int m = 0; m <= 5; ++m) {
        for (int n = m; n <= m + 4; ++n) {
            for (double lam : {0.1, 0.35, 0.6, 0.85}) {
                const double closed = fidelity_closed_value(m, n, lam);
                const double engine = fidelity_general({m, n, lam});
                CHECK(std::abs(closed - engine) < 1e-10);
            }
        }
    }
}

TEST_CASE("swap and report metadata") {
    CHECK(fidelity_closed_value(4, 2, 0.3) ==
          doctest::Approx(fidelity_closed_value(2, 4, 0.3)).epsilon(1e-13));

    const ClosedFormReport plain = fidelity_closed(2, 3, 0.5);
    CHECK(plain.formula_id == "m2");
    CHECK(!plain.printed_formula_deviation.has_value());

    const ClosedFormReport third = fidelity_closed(3, 3, 0.5);
    CHECK(third.formula_id == "m3-corrected");
    REQUIRE(third.printed_formula_deviation.has_value());
    CHECK(std::abs(*third.printed_formula_deviation) > 1e-6);
    // the corrected value, not the literal one, must match the engine
    CHECK(third.value == doctest::Approx(fidelity_general({3, 3, 0.5})).epsilon(1e-11));

    CHECK_THROWS_AS(fidelity_closed(6, 6, 0.5), unsupported_order_error);
    CHECK_THROWS_AS(f_prefactor(3, 1, 0.5), std::invalid_argument);
}

TEST_CASE("lam -> 0 limit") {
    CHECK(fidelity_limit_lam0(0, 0) == 0.5);
    // the closed form approaches the limit from above lam = 0
    for (auto [m, n] : {std::pair{0, 1}, {1, 1}, {2, 3}, {3, 3}}) {
        const double lim = fidelity_limit_lam0(m, n);
        const double near = fidelity_closed_value(m, n, 1e-7);
        CHECK(std::abs(near - lim) < 1e-5);
    }
}

TEST_CASE("coefficient table export is valid json") {
    const auto table = nlohmann::json::parse(coefficient_table_json());
    CHECK(table["version"] == 1);
    REQUIRE(table.contains("m3_corrected"));
    REQUIRE(table.contains("m3_literal"));
    CHECK(table["m3_corrected"] != table["m3_literal"]);
    // every row: integer numerator coefficients over an integer denominator
    for (const auto& row : table["m5"]) {
        CHECK(row["denominator"].is_number_integer());
        for (const auto& c : row["numerator"]) CHECK(c.is_number_integer());
    }
}
