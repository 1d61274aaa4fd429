#include "cvtele/non_gaussianity.hpp"

#include <algorithm>
#include <cmath>

#include "cvtele/errors.hpp"
#include "cvtele/special_functions.hpp"

namespace cvtele {

SymplecticSpectrum symplectic_eigenvalues(const TwoModeCM& cm) {
    constexpr double kClampTol = 1e-10;
    SymplecticSpectrum spec;
    const double a = cm.a_diag, b = cm.b_diag, c = cm.c_diag;
    spec.i1 = a * a;
    spec.i2 = b * b;
    spec.i3 = -c * c;
    spec.i4 = (a * b - c * c) * (a * b - c * c);
    spec.delta_sigma = spec.i1 + spec.i2 + 2.0 * spec.i3;
    double disc = spec.delta_sigma * spec.delta_sigma - 4.0 * spec.i4;
    // disc can undershoot zero by rounding when d+ = d- (m = n resources);
    // under the clamp the root must come out exactly Delta/2, not NaN.
    if (disc < 0.0) {
        if (disc < -kClampTol) {
            throw unphysical_cm_error("symplectic_eigenvalues: negative discriminant");
        }
        disc = 0.0;
    }
    const double root = std::sqrt(disc);
    const double plus_sq = 0.5 * (spec.delta_sigma + root);
    const double minus_sq = 0.5 * (spec.delta_sigma - root);
    if (!(plus_sq >= 0.0) || !(minus_sq >= -kClampTol)) {
        throw unphysical_cm_error("symplectic_eigenvalues: negative squared eigenvalue");
    }
    spec.d_plus = std::sqrt(plus_sq);
    spec.d_minus = std::sqrt(std::max(minus_sq, 0.0));
    if (spec.d_minus < 0.5 - 1e-6) {
        throw unphysical_cm_error("symplectic_eigenvalues: d_minus below 1/2 beyond tolerance");
    }
    return spec;
}

double non_gaussianity_from_cm(const TwoModeCM& cm) {
    const SymplecticSpectrum s = symplectic_eigenvalues(cm);
    return sf::h_entropy(std::max(s.d_minus, 0.5)) + sf::h_entropy(s.d_plus);
}

double non_gaussianity(const SubtractionSpec& spec) {
    // The state is pure by construction, so the Gaussian-reference entropy
    // h(d-) + h(d+) is the whole measure.
    return non_gaussianity_from_cm(covariance_matrix(spec));
}

}  // namespace cvtele
