#include "cvtele/gaussian_calculus.hpp"

#include <cmath>
#include <stdexcept>

#include "cvtele/errors.hpp"
#include "cvtele/special_functions.hpp"

namespace cvtele {

namespace {

template <typename Real>
Real mag(Real x) {
    return x < Real(0) ? -x : x;
}

}  // namespace

template <typename Real>
typename BasicGaussianPolynomial<Real>::Key BasicGaussianPolynomial<Real>::pack(int p, int q,
                                                                                int s, int t) {
    return (static_cast<Key>(p) << 24) | (static_cast<Key>(q) << 16) |
           (static_cast<Key>(s) << 8) | static_cast<Key>(t);
}

template <typename Real>
void BasicGaussianPolynomial<Real>::unpack(Key key, int& p, int& q, int& s, int& t) {
    p = (key >> 24) & 0xff;
    q = (key >> 16) & 0xff;
    s = (key >> 8) & 0xff;
    t = key & 0xff;
}

template <typename Real>
BasicGaussianPolynomial<Real>::BasicGaussianPolynomial(Kernel kernel, TermMap terms)
    : kernel_(kernel), terms_(std::move(terms)) {}

template <typename Real>
BasicGaussianPolynomial<Real> BasicGaussianPolynomial<Real>::constant(Real c, Kernel kernel) {
    return BasicGaussianPolynomial(kernel, {{pack(0, 0, 0, 0), c}});
}

template <typename Real>
int BasicGaussianPolynomial<Real>::degree() const {
    int deg = 0;
    for (const auto& [key, coeff] : terms_) {
        int p, q, s, t;
        unpack(key, p, q, s, t);
        deg = std::max(deg, p + q + s + t);
    }
    return deg;
}

template <typename Real>
BasicGaussianPolynomial<Real> BasicGaussianPolynomial<Real>::differentiated(Var var) const {
    // d/d(var) [P e^K] = (dP/d(var) + P dK/d(var)) e^K, with
    //   dK/da  = u a* + w b      dK/da* = u a + w b*
    //   dK/db  = v b* + w a      dK/db* = v b + w a*
    TermMap out;
    auto add = [&out](Key key, Real c) {
        auto [it, inserted] = out.try_emplace(key, c);
        if (!inserted) it->second += c;
    };
    for (const auto& [key, c] : terms_) {
        int e[4];
        unpack(key, e[0], e[1], e[2], e[3]);
        if (e[var] > 0) {
            int d[4] = {e[0], e[1], e[2], e[3]};
            --d[var];
            add(pack(d[0], d[1], d[2], d[3]), c * Real(e[var]));
        }
        int k1[4] = {e[0], e[1], e[2], e[3]};
        int k2[4] = {e[0], e[1], e[2], e[3]};
        Real c1 = 0.0, c2 = 0.0;
        switch (var) {
            case kAlpha:      ++k1[kAlphaStar]; c1 = kernel_.u; ++k2[kBeta];      c2 = kernel_.w; break;
            case kAlphaStar:  ++k1[kAlpha];     c1 = kernel_.u; ++k2[kBetaStar];  c2 = kernel_.w; break;
            case kBeta:       ++k1[kBetaStar];  c1 = kernel_.v; ++k2[kAlpha];     c2 = kernel_.w; break;
            case kBetaStar:   ++k1[kBeta];      c1 = kernel_.v; ++k2[kAlphaStar]; c2 = kernel_.w; break;
        }
        add(pack(k1[0], k1[1], k1[2], k1[3]), c * c1);
        add(pack(k2[0], k2[1], k2[2], k2[3]), c * c2);
    }
    BasicGaussianPolynomial result(kernel_, std::move(out));
    result.canonicalize();
    return result;
}

template <typename Real>
BasicGaussianPolynomial<Real> BasicGaussianPolynomial<Real>::diagonal_shifted(Real delta) const {
    Kernel k = kernel_;
    k.u += delta;
    k.v += delta;
    return BasicGaussianPolynomial(k, terms_);
}

template <typename Real>
BasicGaussianPolynomial<Real> BasicGaussianPolynomial<Real>::scaled(Real factor) const {
    TermMap out = terms_;
    for (auto& [key, c] : out) c *= factor;
    return BasicGaussianPolynomial(kernel_, std::move(out));
}

template <typename Real>
std::complex<double> BasicGaussianPolynomial<Real>::evaluate(std::complex<double> alpha,
                                                             std::complex<double> beta) const {
    const std::complex<double> as = std::conj(alpha);
    const std::complex<double> bs = std::conj(beta);
    std::complex<double> poly = 0.0;
    for (const auto& [key, c] : terms_) {
        int p, q, s, t;
        unpack(key, p, q, s, t);
        std::complex<double> term(static_cast<double>(c), 0.0);
        for (int i = 0; i < p; ++i) term *= alpha;
        for (int i = 0; i < q; ++i) term *= as;
        for (int i = 0; i < s; ++i) term *= beta;
        for (int i = 0; i < t; ++i) term *= bs;
        poly += term;
    }
    const double expo = static_cast<double>(kernel_.u) * std::norm(alpha) +
                        static_cast<double>(kernel_.v) * std::norm(beta);
    const std::complex<double> cross = alpha * beta + as * bs;
    return poly * std::exp(std::complex<double>(expo, 0.0) +
                           static_cast<double>(kernel_.w) * cross);
}

template <typename Real>
void BasicGaussianPolynomial<Real>::canonicalize() {
    Real max_mag = 0.0;
    for (const auto& [key, c] : terms_) max_mag = std::max(max_mag, mag(c));
    const Real cutoff = max_mag * Real(1e-30);
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (mag(it->second) <= cutoff) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

template class BasicGaussianPolynomial<double>;
template class BasicGaussianPolynomial<__float128>;

namespace {

template <typename Real>
BasicGaussianPolynomial<Real> tmsv_kernel_t(double lam) {
    if (!(lam >= 0.0) || lam >= 1.0) throw std::domain_error("tmsv_kernel: lam must lie in [0,1)");
    const Real l = lam;
    const Real denom = Real(1) - l * l;
    typename BasicGaussianPolynomial<Real>::Kernel k;
    k.u = k.v = -(Real(1) + l * l) / (Real(2) * denom);
    k.w = l / denom;
    return BasicGaussianPolynomial<Real>::constant(Real(1), k);
}

template <typename Real>
BasicGaussianPolynomial<Real> apply_lambda_ops_t(const BasicGaussianPolynomial<Real>& g, int m,
                                                 int n) {
    if (m < 0 || n < 0) throw std::domain_error("apply_lambda_ops: negative order");
    using Poly = BasicGaussianPolynomial<Real>;
    // Fold the regularizing e^{+(|a|^2+|b|^2)/2} into the kernel, apply
    // (-d/da)^m (d/da*)^m (-d/db)^n (d/db*)^n, then fold the outer
    // e^{-(|a|^2+|b|^2)/2} back out.
    Poly work = g.diagonal_shifted(Real(0.5));
    for (int i = 0; i < m; ++i) work = work.differentiated(Poly::kAlphaStar);
    for (int i = 0; i < m; ++i) work = work.differentiated(Poly::kAlpha);
    for (int i = 0; i < n; ++i) work = work.differentiated(Poly::kBetaStar);
    for (int i = 0; i < n; ++i) work = work.differentiated(Poly::kBeta);
    const Real sign = ((m + n) % 2 == 0) ? Real(1) : Real(-1);
    return work.diagonal_shifted(Real(-0.5)).scaled(sign);
}

}  // namespace

GaussianPolynomial tmsv_kernel(double lam) { return tmsv_kernel_t<double>(lam); }

GaussianPolynomial apply_lambda_ops(const GaussianPolynomial& g, int m, int n) {
    return apply_lambda_ops_t<double>(g, m, n);
}

std::complex<double> chi12(const SubtractionSpec& spec, std::complex<double> alpha,
                           std::complex<double> beta) {
    spec.validate();
    const GaussianPolynomial rep = apply_lambda_ops(tmsv_kernel(spec.lam), spec.m, spec.n);
    return rep.evaluate(alpha, beta) / normalization(spec);
}

double fidelity_general(const SubtractionSpec& spec) {
    spec.validate();
    using Quad = __float128;
    const auto rep = apply_lambda_ops_t<Quad>(tmsv_kernel_t<Quad>(spec.lam), spec.m, spec.n);
    // Identify beta -> alpha with the first slot conjugated, i.e. the
    // integrand chi12(alpha*, alpha): a term a^p a*^q b^s b*^t becomes
    // alpha^{q+s} alpha*^{p+t}, and the kernel collapses to a single
    // radial rate. With the e^{-|alpha|^2} input factor:
    //   (1/pi) Int alpha^j alpha*^j e^{-s_eff |alpha|^2} d^2 alpha = j!/s_eff^{j+1}
    // and all unbalanced (j != k) moments vanish.
    const auto& kern = rep.kernel();
    const Quad s_eff = Quad(1) - kern.u - kern.v - Quad(2) * kern.w;
    if (!(s_eff > Quad(0))) {
        throw std::runtime_error("fidelity_general: non-positive-definite effective quadratic form");
    }
    Quad sum = 0;
    for (const auto& [key, c] : rep.terms()) {
        int p, q, s, t;
        BasicGaussianPolynomial<Quad>::unpack(key, p, q, s, t);
        const int j = q + s;
        if (j != p + t) continue;
        Quad term = c;
        for (int i = 2; i <= j; ++i) term *= Quad(i);
        for (int i = 0; i <= j; ++i) term /= s_eff;
        sum += term;
    }
    return static_cast<double>(sum) / normalization(spec);
}

}  // namespace cvtele
