#include "cvtele/closed_form.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "cvtele/errors.hpp"
#include "cvtele/resource_state.hpp"
#include "cvtele/special_functions.hpp"

namespace cvtele {

namespace {

// Bracket polynomials: F^{(m,n)} = [sum_j c_j(n) lam^j] * f^{(m,n)} with
// each c_j(n) an integer-coefficient polynomial in n over a denominator.
// Row layout: numerator coefficients of n^0..n^m, then the denominator.
// Version 1 of the corrected table; the order-3 row is regenerated from
// the general engine (the original tabulation of that row is kept below
// as kBracketM3Literal for the deviation report).
constexpr int kTableVersion = 1;

constexpr std::array<std::array<long long, 2>, 1> kBracketM0 = {{
    {{1, 1}},
}};
constexpr std::array<std::array<long long, 3>, 3> kBracketM1 = {{
    {{0, 4, 1}},
    {{0, -4, 1}},
    {{1, 1, 1}},
}};
constexpr std::array<std::array<long long, 4>, 5> kBracketM2 = {{
    {{0, -8, 8, 1}},
    {{0, 16, -16, 1}},
    {{0, -4, 12, 1}},
    {{0, -4, -4, 1}},
    {{2, 3, 1, 2}},
}};
constexpr std::array<std::array<long long, 5>, 7> kBracketM3 = {{
    {{0, 64, -96, 32, 3}},
    {{0, -64, 96, -32, 1}},
    {{0, 56, -96, 40, 1}},
    {{0, -16, 96, -80, 3}},
    {{0, -4, 6, 10, 1}},
    {{0, -4, -6, -2, 1}},
    {{6, 11, 6, 1, 6}},
}};
constexpr std::array<std::array<long long, 6>, 9> kBracketM4 = {{
    {{0, -192, 352, -192, 32, 3}},
    {{0, 768, -1408, 768, -128, 3}},
    {{0, -1088, 2080, -1216, 224, 3}},
    {{0, 576, -1312, 960, -224, 3}},
    {{0, -24, 244, -360, 140, 3}},
    {{0, -16, 56, 16, -56, 3}},
    {{0, -12, 10, 36, 14, 3}},
    {{0, -12, -22, -12, -2, 3}},
    {{24, 50, 35, 10, 1, 24}},
}};
constexpr std::array<std::array<long long, 7>, 11> kBracketM5 = {{
    {{0, 3072, -6400, 4480, -1280, 128, 15}},
    {{0, -3072, 6400, -4480, 1280, -128, 3}},
    {{0, 5952, -12640, 9120, -2720, 288, 3}},
    {{0, -5376, 12160, -9600, 3200, -384, 3}},
    {{0, 1984, -5440, 5360, -2240, 336, 3}},
    {{0, -192, 3200, -6480, 4480, -1008, 15}},
    {{0, -24, 140, -60, -140, 84, 3}},
    {{0, -16, 40, 40, -40, -24, 3}},
    {{0, -24, 10, 75, 50, 9, 6}},
    {{0, -24, -50, -35, -10, -1, 6}},
    {{120, 274, 225, 85, 15, 1, 120}},
}};

// Literal transcription of the order-3 row as originally tabulated: the
// lam^3 and lam^4 terms print without their lam powers (landing in the
// constant term), the leading factor prints (n-3) instead of (n-2), and
// the prefactor prints as the order-2 one.
constexpr std::array<std::array<long long, 5>, 7> kBracketM3Literal = {{
    {{0, 68, -14, -18, 3}},
    {{0, -96, 128, -32, 1}},
    {{0, 56, -96, 40, 1}},
    {{0, 0, 0, 0, 1}},
    {{0, 0, 0, 0, 1}},
    {{0, -4, -6, -2, 1}},
    {{6, 11, 6, 1, 6}},
}};

template <std::size_t Cols, std::size_t Rows>
double bracket_value(const std::array<std::array<long long, Cols>, Rows>& table, int n,
                     double lam) {
    double total = 0.0;
    double lam_pow = 1.0;
    for (const auto& row : table) {
        double num = 0.0;
        double n_pow = 1.0;
        for (std::size_t i = 0; i + 1 < Cols; ++i) {
            num += static_cast<double>(row[i]) * n_pow;
            n_pow *= n;
        }
        total += num / static_cast<double>(row[Cols - 1]) * lam_pow;
        lam_pow *= lam;
    }
    return total;
}

double bracket_for(int m, int n, double lam) {
    switch (m) {
        case 0: return bracket_value(kBracketM0, n, lam);
        case 1: return bracket_value(kBracketM1, n, lam);
        case 2: return bracket_value(kBracketM2, n, lam);
        case 3: return bracket_value(kBracketM3, n, lam);
        case 4: return bracket_value(kBracketM4, n, lam);
        case 5: return bracket_value(kBracketM5, n, lam);
        default: throw unsupported_order_error("closed form tabulated only for m <= 5");
    }
}

template <std::size_t Cols, std::size_t Rows>
void table_to_json(std::ostringstream& out, const char* name,
                   const std::array<std::array<long long, Cols>, Rows>& table) {
    out << "\"" << name << "\":[";
    for (std::size_t r = 0; r < Rows; ++r) {
        if (r) out << ",";
        out << "{\"lam_power\":" << r << ",\"numerator\":[";
        for (std::size_t i = 0; i + 1 < Cols; ++i) {
            if (i) out << ",";
            out << table[r][i];
        }
        out << "],\"denominator\":" << table[r][Cols - 1] << "}";
    }
    out << "]";
}

}  // namespace

double f_prefactor(int m, int n, double lam) {
    if (n < m) throw std::invalid_argument("f_prefactor: requires n >= m");
    SubtractionSpec spec{m, n, lam};
    const double norm = normalization(spec);  // validates, rejects lam = 0 degenerate
    return std::pow(lam, 2 * n) / norm * sf::factorial(m) * sf::factorial(n) * (1.0 + lam) /
           (std::pow(2.0, m + n + 1) * std::pow(1.0 - lam, m + n));
}

ClosedFormReport fidelity_closed(int m, int n, double lam) {
    if (m > n) std::swap(m, n);  // fidelity is mode-swap symmetric
    SubtractionSpec{m, n, lam}.validate();
    if (m > 5) throw unsupported_order_error("fidelity_closed: m > 5, use fidelity_general");

    ClosedFormReport report;
    report.formula_id = (m == 3) ? "m3-corrected" : ("m" + std::to_string(m));
    report.value = bracket_for(m, n, lam) * f_prefactor(m, n, lam);
    if (m == 3) {
        const double literal =
            bracket_value(kBracketM3Literal, n, lam) * f_prefactor(2, n, lam);
        report.printed_formula_deviation = std::abs(literal - report.value);
    }
    return report;
}

double fidelity_closed_value(int m, int n, double lam) {
    return fidelity_closed(m, n, lam).value;
}

double fidelity_limit_lam0(int m, int n) {
    if (m > n) std::swap(m, n);
    if (m > 5) throw unsupported_order_error("fidelity_limit_lam0: m > 5");
    if (m == 0 && n == 0) return 0.5;
    // lam^{2n}/N -> 1/(m! n! C(n,m)), so f -> 1/(C(n,m) 2^{m+n+1}); only the
    // constant bracket term survives.
    const double f0 = 1.0 / (sf::binomial(n, m) * std::pow(2.0, m + n + 1));
    return bracket_for(m, n, 0.0) * f0;
}

std::string coefficient_table_json() {
    std::ostringstream out;
    out << "{\"version\":" << kTableVersion << ",";
    table_to_json(out, "m0", kBracketM0);
    out << ",";
    table_to_json(out, "m1", kBracketM1);
    out << ",";
    table_to_json(out, "m2", kBracketM2);
    out << ",";
    table_to_json(out, "m3_corrected", kBracketM3);
    out << ",";
    table_to_json(out, "m3_literal", kBracketM3Literal);
    out << ",";
    table_to_json(out, "m4", kBracketM4);
    out << ",";
    table_to_json(out, "m5", kBracketM5);
    out << "}";
    return out.str();
}

}  // namespace cvtele
