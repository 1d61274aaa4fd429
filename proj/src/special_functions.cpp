#include "cvtele/special_functions.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cvtele::sf {

namespace {

constexpr int kExactFactMax = 20;

const std::array<double, kExactFactMax + 1>& exact_factorials() {
    static const auto table = [] {
        std::array<double, kExactFactMax + 1> t{};
        t[0] = 1.0;
        for (int k = 1; k <= kExactFactMax; ++k) t[k] = t[k - 1] * k;
        return t;
    }();
    return table;
}

}  // namespace

double PolyEvalResult::collapsed() const {
    return log_scale_hint ? value * std::exp(*log_scale_hint) : value;
}

double log_factorial(int k) {
    if (k < 0) throw std::domain_error("log_factorial: negative argument");
    // memoized: this sits on the oracle's innermost loops
    constexpr int kCached = 8192;
    static const std::vector<double> cache = [] {
        std::vector<double> t(kCached);
        for (int i = 0; i < kCached; ++i) {
            t[i] = (i <= kExactFactMax) ? std::log(exact_factorials()[i])
                                        : std::lgamma(static_cast<double>(i) + 1.0);
        }
        return t;
    }();
    if (k < kCached) return cache[k];
    return std::lgamma(static_cast<double>(k) + 1.0);
}

double factorial(int k) {
    if (k < 0) throw std::domain_error("factorial: negative argument");
    if (k <= kExactFactMax) return exact_factorials()[k];
    return std::exp(log_factorial(k));
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    if (n <= kExactFactMax) {
        return exact_factorials()[n] / (exact_factorials()[k] * exact_factorials()[n - k]);
    }
    // log-domain accumulation; sweeps up to m = n = 10 need factorials past 20!
    return std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k));
}

double jacobi_p(int m, int alpha, int beta, double x) {
    if (m < 0) throw std::domain_error("jacobi_p: negative degree");
    if (m + alpha < 0) throw std::domain_error("jacobi_p: alpha < -m");
    if (beta < 0) throw std::domain_error("jacobi_p: negative beta");
    // Finite sum in (x-1)/2 and (x+1)/2 powers; the k = m term alone
    // survives at x = 1, so that point is exact rather than a 0/0 limit.
    const double xm = 0.5 * (x - 1.0);
    const double xp = 0.5 * (x + 1.0);
    double sum = 0.0;
    for (int k = 0; k <= m; ++k) {
        const double b1 = binomial(m + alpha, k);
        const double b2 = binomial(m + beta, m - k);
        if (b1 == 0.0 || b2 == 0.0) continue;
        sum += b1 * b2 * std::pow(xm, m - k) * std::pow(xp, k);
    }
    return sum;
}

double laguerre_assoc(int n, int k, double x) {
    if (n < 0 || n + k < 0) throw std::domain_error("laguerre_assoc: out of domain");
    if (n == 0) return 1.0;
    double lm1 = 1.0;
    double l = 1.0 + k - x;
    for (int i = 1; i < n; ++i) {
        const double next = ((2.0 * i + 1.0 + k - x) * l - (i + k) * lm1) / (i + 1.0);
        lm1 = l;
        l = next;
    }
    return l;
}

PolyEvalResult laguerre_assoc_scaled(int n, int k, double x) {
    if (n < 0 || n + k < 0) throw std::domain_error("laguerre_assoc_scaled: out of domain");
    constexpr double kRescaleAt = 1e250;
    constexpr double kRescaleBy = 1e-250;
    double scale_log = 0.0;
    double lm1 = 1.0;
    double l = 1.0 + k - x;
    if (n == 0) return {1.0, std::nullopt};
    for (int i = 1; i < n; ++i) {
        double next = ((2.0 * i + 1.0 + k - x) * l - (i + k) * lm1) / (i + 1.0);
        lm1 = l;
        l = next;
        if (std::abs(l) > kRescaleAt || std::abs(lm1) > kRescaleAt) {
            l *= kRescaleBy;
            lm1 *= kRescaleBy;
            scale_log += std::log(1.0 / kRescaleBy);
        }
    }
    if (scale_log == 0.0) return {l, std::nullopt};
    return {l, scale_log};
}

double h_entropy(double x) {
    constexpr double kClampTol = 1e-10;
    if (x < 0.5 - kClampTol) throw std::domain_error("h_entropy: x < 1/2 beyond tolerance");
    if (x <= 0.5) return 0.0;  // 0 ln 0 := 0 at the vacuum eigenvalue
    const double p = x + 0.5;
    const double q = x - 0.5;
    return p * std::log(p) - q * std::log(q);
}

}  // namespace cvtele::sf
