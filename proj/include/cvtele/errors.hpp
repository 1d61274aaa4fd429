#ifndef CVTELE_ERRORS_HPP
#define CVTELE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cvtele {

// lam = 0 with m + n > 0: the unnormalized state is the zero vector.
struct degenerate_state_error : std::domain_error {
    explicit degenerate_state_error(const std::string& what) : std::domain_error(what) {}
};

// Covariance matrix whose smaller symplectic eigenvalue undershoots 1/2
// beyond clamping tolerance.
struct unphysical_cm_error : std::domain_error {
    explicit unphysical_cm_error(const std::string& what) : std::domain_error(what) {}
};

// Adaptive Fock truncation would exceed the hard cap.
struct truncation_error : std::runtime_error {
    explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

// Doubling the radial order moved the quadrature result more than tolerated.
struct quadrature_error : std::runtime_error {
    explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

// Closed-form table requested beyond its tabulated order.
struct unsupported_order_error : std::invalid_argument {
    explicit unsupported_order_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cvtele

#endif
