#ifndef CVTELE_GAUSSIAN_CALCULUS_HPP
#define CVTELE_GAUSSIAN_CALCULUS_HPP

#include <complex>
#include <cstdint>
#include <map>

#include "cvtele/resource_state.hpp"

namespace cvtele {

/// Polynomial in (alpha, alpha*, beta, beta*) times a Gaussian kernel
/// exp(u|alpha|^2 + v|beta|^2 + w(alpha beta + alpha* beta*)).
/// Closed under differentiation in any of the four variables; this is the
/// representation the derivative-operator machinery works in.
///
/// Real is the coefficient scalar. Repeated differentiation at strong
/// squeezing piles up alternating terms of size ~(1/(1-lam^2))^{m+n} that
/// cancel almost completely in the fidelity moment sum, so the fidelity
/// path runs this machinery in extended precision; double is enough for
/// pointwise characteristic-function evaluation.
template <typename Real>
class BasicGaussianPolynomial {
public:
    struct Kernel {
        Real u = 0.0;
        Real v = 0.0;
        Real w = 0.0;
    };

    // Exponent 4-tuple (p, q, s, t) over (alpha, alpha*, beta, beta*),
    // packed 8 bits each.
    using Key = std::uint32_t;
    using TermMap = std::map<Key, Real>;

    enum Var { kAlpha = 0, kAlphaStar = 1, kBeta = 2, kBetaStar = 3 };

    static Key pack(int p, int q, int s, int t);
    static void unpack(Key key, int& p, int& q, int& s, int& t);

    BasicGaussianPolynomial(Kernel kernel, TermMap terms);
    static BasicGaussianPolynomial constant(Real c, Kernel kernel);

    const Kernel& kernel() const { return kernel_; }
    const TermMap& terms() const { return terms_; }
    int degree() const;

    /// d/d(var) of this * exp(kernel), returned in the same representation.
    BasicGaussianPolynomial differentiated(Var var) const;

    /// Adds delta to both diagonal kernel coefficients u and v (folding an
    /// exp(delta(|alpha|^2+|beta|^2)) factor into the representation).
    BasicGaussianPolynomial diagonal_shifted(Real delta) const;

    BasicGaussianPolynomial scaled(Real factor) const;

    std::complex<double> evaluate(std::complex<double> alpha, std::complex<double> beta) const;

    /// Merges duplicate exponent tuples and drops coefficients below
    /// 1e-30 relative to the largest magnitude.
    void canonicalize();

private:
    Kernel kernel_;
    TermMap terms_;
};

using GaussianPolynomial = BasicGaussianPolynomial<double>;

extern template class BasicGaussianPolynomial<double>;

/// Characteristic function of the TMSV itself: polynomial part 1,
/// u = v = -(1+lam^2)/(2(1-lam^2)), w = lam/(1-lam^2).
GaussianPolynomial tmsv_kernel(double lam);

/// Applies the photon-subtraction derivative operators of order (m, n):
/// (-d/da)^m (d/da*)^m and (-d/db)^n (d/db*)^n acting on g with the
/// regularizing exp(+-(|a|^2+|b|^2)/2) factors folded in on both sides.
/// Division by the normalization constant is the caller's job.
GaussianPolynomial apply_lambda_ops(const GaussianPolynomial& g, int m, int n);

/// Two-mode characteristic function of the subtracted state at one point.
std::complex<double> chi12(const SubtractionSpec& spec, std::complex<double> alpha,
                           std::complex<double> beta);

/// Ideal-protocol coherent-state teleportation fidelity, valid for any
/// (m, n). The coherent-amplitude phases cancel between the input
/// characteristic functions, leaving F = (1/pi) Int e^{-|a|^2}
/// chi12(a*, a) d^2a, which is evaluated in closed Gaussian-moment form.
double fidelity_general(const SubtractionSpec& spec);

}  // namespace cvtele

#endif
