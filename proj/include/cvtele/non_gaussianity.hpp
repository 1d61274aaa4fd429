#ifndef CVTELE_NON_GAUSSIANITY_HPP
#define CVTELE_NON_GAUSSIANITY_HPP

#include "cvtele/resource_state.hpp"

namespace cvtele {

/// Symplectic data of a two-mode covariance matrix in standard block form.
struct SymplecticSpectrum {
    double d_plus = 0.5;
    double d_minus = 0.5;
    double i1 = 0.0, i2 = 0.0, i3 = 0.0, i4 = 0.0;
    double delta_sigma = 0.0;
};

/// Symplectic eigenvalues from the local invariants I1 = a^2, I2 = b^2,
/// I3 = -c^2, I4 = (ab - c^2)^2. The discriminant is clamped to zero
/// within 1e-10 (degenerate d+ = d- occurs for m = n); an undershoot of
/// d- below 1/2 beyond 1e-6 throws unphysical_cm_error.
SymplecticSpectrum symplectic_eigenvalues(const TwoModeCM& cm);

/// Relative-entropy non-Gaussianity of the subtracted state. The state is
/// pure by construction, so this is h(d-) + h(d+) of its covariance
/// matrix; zero exactly when m = n = 0.
double non_gaussianity(const SubtractionSpec& spec);

/// Same measure evaluated from an explicitly supplied covariance matrix
/// (used to cross nG through the brute-force moment path).
double non_gaussianity_from_cm(const TwoModeCM& cm);

}  // namespace cvtele

#endif
