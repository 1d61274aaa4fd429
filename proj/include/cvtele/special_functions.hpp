#ifndef CVTELE_SPECIAL_FUNCTIONS_HPP
#define CVTELE_SPECIAL_FUNCTIONS_HPP

#include <optional>

namespace cvtele::sf {

/// Polynomial value together with an optional log-magnitude split for
/// regimes where the plain value would overflow. When log_scale_hint is
/// set, the true value is value * exp(*log_scale_hint).
struct PolyEvalResult {
    double value = 0.0;
    std::optional<double> log_scale_hint;

    double collapsed() const;
};

/// ln(k!), exact integer accumulation for k <= 20, log-domain beyond.
double log_factorial(int k);

/// k! as a double. Exact up to k = 20; throws std::domain_error for k < 0.
double factorial(int k);

/// Binomial coefficient; 0 when k < 0 or k > n.
double binomial(int n, int k);

/// Jacobi polynomial P_m^{(alpha,beta)}(x), integer parameters with
/// alpha >= -m and beta >= 0. Evaluated as the finite sum in powers of
/// (x-1)/2 and (x+1)/2, which is exact at x = 1.
double jacobi_p(int m, int alpha, int beta, double x);

/// Associated Laguerre polynomial L_n^{(k)}(x), n >= 0, n + k >= 0.
double laguerre_assoc(int n, int k, double x);

/// As laguerre_assoc but with internal rescaling, for large n where the
/// plain value overflows. Result carries the accumulated log scale.
PolyEvalResult laguerre_assoc_scaled(int n, int k, double x);

/// h(x) = (x+1/2)ln(x+1/2) - (x-1/2)ln(x-1/2), the thermal-entropy kernel
/// of the symplectic spectrum. h(1/2) = 0 with the 0 ln 0 := 0 convention.
/// Inputs inside [1/2 - 1e-10, 1/2) are clamped; smaller inputs throw.
double h_entropy(double x);

}  // namespace cvtele::sf

#endif
