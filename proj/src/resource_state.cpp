#include "cvtele/resource_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cvtele/errors.hpp"
#include "cvtele/special_functions.hpp"

namespace cvtele {

void SubtractionSpec::validate() const {
    if (m < 0 || n < 0) throw std::domain_error("SubtractionSpec: negative subtraction order");
    if (m > kMaxOrder || n > kMaxOrder) {
        throw std::domain_error("SubtractionSpec: order beyond implementation ceiling " +
                                std::to_string(kMaxOrder));
    }
    if (!(lam >= 0.0) || lam >= 1.0) {
        throw std::domain_error("SubtractionSpec: lam must lie in [0,1)");
    }
    if (lam == 0.0 && m + n > 0) {
        throw degenerate_state_error(
            "subtracting photons from the two-mode vacuum gives the zero vector (lam = 0)");
    }
}

FockState::FockState(int m, int n, int kmin, std::vector<double> amps, double raw_norm_sq)
    : m_(m), n_(n), kmin_(kmin), amps_(std::move(amps)), raw_norm_sq_(raw_norm_sq) {}

double FockState::amplitude(int j, int k) const {
    if (k - j != m_ - n_) return 0.0;  // off the shifted diagonal
    const int pre = j + m_;
    const int i = pre - kmin_;
    if (i < 0 || i >= static_cast<int>(amps_.size())) return 0.0;
    return amps_[i];
}

double normalization(const SubtractionSpec& spec) {
    spec.validate();
    if (spec.m == 0 && spec.n == 0) return 1.0;
    const double r = spec.r();
    const double x = std::cosh(2.0 * r);
    const double sh = std::sinh(r);
    const int lo = std::min(spec.m, spec.n);
    const int hi = std::max(spec.m, spec.n);
    return sf::factorial(spec.m) * sf::factorial(spec.n) * std::pow(sh * sh, hi) *
           sf::jacobi_p(lo, hi - lo, 0, x);
}

namespace {

FockState build_fock(const SubtractionSpec& spec, int trunc) {
    const int m = spec.m, n = spec.n;
    const int kmin = std::max(m, n);
    const double one_minus = 1.0 - spec.lam * spec.lam;
    std::vector<double> amps(trunc - kmin + 1);
    // unnormalized amplitude at (k-m, k-n):
    //   sqrt(1-lam^2) lam^k sqrt(k!/(k-m)!) sqrt(k!/(k-n)!)
    for (int k = kmin; k <= trunc; ++k) {
        const double lg = k * std::log(spec.lam > 0.0 ? spec.lam : 1.0) +
                          0.5 * (sf::log_factorial(k) - sf::log_factorial(k - m)) +
                          0.5 * (sf::log_factorial(k) - sf::log_factorial(k - n));
        amps[k - kmin] = (spec.lam == 0.0 && k > 0) ? 0.0 : std::sqrt(one_minus) * std::exp(lg);
    }
    double raw_sq = 0.0;
    for (double a : amps) raw_sq += a * a;
    const double norm = std::sqrt(raw_sq);
    for (double& a : amps) a /= norm;
    return FockState(m, n, kmin, std::move(amps), raw_sq);
}

}  // namespace

FockState fock_coefficients(const SubtractionSpec& spec, double tail_eps, int hard_cap) {
    spec.validate();
    if (!(tail_eps > 0.0)) throw std::domain_error("fock_coefficients: tail_eps must be > 0");
    const int kmin = std::max(spec.m, spec.n);
    int trunc = kmin;
    if (spec.lam > 0.0) {
        // geometric tail with polynomial prefactor
        const double extra =
            std::ceil(std::log(tail_eps * (1.0 - spec.lam * spec.lam)) / (2.0 * std::log(spec.lam)));
        trunc = kmin + static_cast<int>(std::max(extra, 0.0)) + 10;
    }
    if (trunc > hard_cap) {
        throw truncation_error("fock_coefficients: truncation " + std::to_string(trunc) +
                               " exceeds cap " + std::to_string(hard_cap));
    }
    return build_fock(spec, trunc);
}

FockState fock_coefficients_with_truncation(const SubtractionSpec& spec, int trunc) {
    spec.validate();
    if (trunc < std::max(spec.m, spec.n)) {
        throw std::domain_error("fock_coefficients_with_truncation: truncation below support");
    }
    return build_fock(spec, trunc);
}

TwoModeCM covariance_matrix(const SubtractionSpec& spec) {
    spec.validate();
    if (spec.m > spec.n) {
        // block formulas assume n >= m; swap modes, compute, swap A and B back
        SubtractionSpec swapped{spec.n, spec.m, spec.lam};
        TwoModeCM cm = covariance_matrix(swapped);
        std::swap(cm.a_diag, cm.b_diag);
        return cm;
    }
    if (spec.lam == 0.0) return {0.5, 0.5, 0.0};  // two-mode vacuum
    const int m = spec.m, n = spec.n;
    const double r = spec.r();
    const double x = std::cosh(2.0 * r);
    const double nc = normalization(spec);
    const double a = 0.5 + normalization({m + 1, n, spec.lam}) / nc;
    const double b = 0.5 + normalization({m, n + 1, spec.lam}) / nc;
    const double c = 0.5 * (n + 1) * std::sinh(2.0 * r) * sf::jacobi_p(m, n - m, 1, x) /
                     sf::jacobi_p(m, n - m, 0, x);
    return {a, b, c};
}

}  // namespace cvtele
