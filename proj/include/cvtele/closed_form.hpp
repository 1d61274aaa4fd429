#ifndef CVTELE_CLOSED_FORM_HPP
#define CVTELE_CLOSED_FORM_HPP

#include <optional>
#include <string>

namespace cvtele {

/// Result of a closed-form fidelity evaluation.
///
/// The order-3 row of the published coefficient tabulation contains
/// transcription defects (two terms missing their lam powers, one factor
/// off by one, and the wrong prefactor order). `value` always comes from
/// the regenerated coefficients; when the literal tabulation disagrees,
/// the gap is reported in printed_formula_deviation rather than silently
/// corrected.
struct ClosedFormReport {
    double value = 0.0;
    std::string formula_id;
    std::optional<double> printed_formula_deviation;
};

/// The prefactor lam^{2n}/N * m! n! (1+lam) / (2^{m+n+1} (1-lam)^{m+n})
/// shared by all closed-form rows. Requires n >= m (callers swap first).
double f_prefactor(int m, int n, double lam);

/// Closed-form fidelity for m <= 5 (after swapping so m <= n). Throws
/// unsupported_order_error for min(m,n) > 5.
ClosedFormReport fidelity_closed(int m, int n, double lam);

/// Convenience accessor for the closed-form value alone.
double fidelity_closed_value(int m, int n, double lam);

/// One-sided lam -> 0+ limit of the closed-form fidelity (the state itself
/// degenerates at lam = 0 when m + n > 0).
double fidelity_limit_lam0(int m, int n);

/// The corrected coefficient table (bracket polynomial coefficients as
/// integer polynomials in n over a common denominator), serialized as
/// JSON for auditability.
std::string coefficient_table_json();

}  // namespace cvtele

#endif
