#ifndef CVTELE_RESOURCE_STATE_HPP
#define CVTELE_RESOURCE_STATE_HPP

#include <cmath>
#include <vector>

namespace cvtele {

/// Descriptor of an (m,n)-photon-subtracted two-mode squeezed vacuum:
/// m photons removed from mode 1, n from mode 2, squeezing lam = tanh r.
struct SubtractionSpec {
    int m = 0;
    int n = 0;
    double lam = 0.0;

    static constexpr int kMaxOrder = 12;

    double r() const { return std::atanh(lam); }

    /// Throws std::domain_error / degenerate_state_error on invalid input.
    void validate() const;
};

/// Truncated Fock expansion of the subtracted state. Support lies on the
/// single shifted diagonal k - j = m - n; amplitudes are stored along it,
/// indexed by the pre-subtraction index k in [max(m,n), truncation].
class FockState {
public:
    FockState(int m, int n, int kmin, std::vector<double> amps, double raw_norm_sq);

    int m() const { return m_; }
    int n() const { return n_; }
    int kmin() const { return kmin_; }
    int truncation() const { return kmin_ + static_cast<int>(amps_.size()) - 1; }
    int support_size() const { return static_cast<int>(amps_.size()); }

    /// Normalized amplitude at mode occupations (j, k); zero off support.
    double amplitude(int j, int k) const;

    /// Normalized amplitude along the diagonal, pre-subtraction index kmin()+i.
    double diag(int i) const { return amps_[i]; }

    /// Squared norm of the unnormalized expansion (equals the analytic
    /// normalization constant up to the truncation tail).
    double raw_norm_sq() const { return raw_norm_sq_; }

private:
    int m_, n_, kmin_;
    std::vector<double> amps_;
    double raw_norm_sq_;
};

/// 4x4 covariance matrix in standard block form: A = a_diag * I,
/// B = b_diag * I, C = diag(c_diag, -c_diag). Vacuum variance 1/2.
struct TwoModeCM {
    double a_diag = 0.5;
    double b_diag = 0.5;
    double c_diag = 0.0;
};

/// Squared normalization constant of the subtracted state. Swap symmetric;
/// equals 1 for m = n = 0.
double normalization(const SubtractionSpec& spec);

/// Truncated, normalized Fock expansion. Truncation K is chosen so the
/// discarded squared-amplitude tail is below tail_eps; throws
/// truncation_error if K would exceed hard_cap.
FockState fock_coefficients(const SubtractionSpec& spec, double tail_eps = 1e-14,
                            int hard_cap = 4096);

/// As fock_coefficients but with an explicit truncation index (used by
/// convergence checks).
FockState fock_coefficients_with_truncation(const SubtractionSpec& spec, int trunc);

/// Closed-form covariance matrix of the subtracted state.
TwoModeCM covariance_matrix(const SubtractionSpec& spec);

}  // namespace cvtele

#endif
