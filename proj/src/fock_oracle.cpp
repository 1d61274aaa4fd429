#include "cvtele/fock_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cvtele/errors.hpp"
#include "cvtele/special_functions.hpp"

namespace cvtele::oracle {

namespace {

// Below this log-magnitude an element cannot move sums at the tolerances
// used anywhere in this project; skip the exp.
constexpr double kLogCutoff = -120.0;

// log|L_q^{(d)}(x)| and sign for all q <= max_q, d <= max_d, at fixed x.
// Rows are filled by the three-term recurrence in q with rescaling.
class LaguerreTable {
public:
    LaguerreTable(int max_q, int max_d, double x)
        : max_q_(max_q), log_(static_cast<size_t>(max_q + 1) * (max_d + 1)),
          sign_(log_.size()) {
        for (int d = 0; d <= max_d; ++d) {
            double scale = 0.0;
            double lm1 = 1.0;
            double l = 1.0 + d - x;
            set(0, d, 1.0, 0.0);
            if (max_q >= 1) set(1, d, l, 0.0);
            for (int q = 2; q <= max_q; ++q) {
                const double next = ((2.0 * (q - 1) + 1.0 + d - x) * l - (q - 1 + d) * lm1) / q;
                lm1 = l;
                l = next;
                if (std::abs(l) > 1e250 || std::abs(lm1) > 1e250) {
                    l *= 1e-250;
                    lm1 *= 1e-250;
                    scale += 250.0 * std::numbers::ln10;
                }
                set(q, d, l, scale);
            }
        }
    }

    double log_abs(int q, int d) const { return log_[idx(q, d)]; }
    double sign(int q, int d) const { return sign_[idx(q, d)]; }

private:
    size_t idx(int q, int d) const { return static_cast<size_t>(d) * (max_q_ + 1) + q; }
    void set(int q, int d, double value, double scale) {
        if (value == 0.0) {
            log_[idx(q, d)] = -1e300;
            sign_[idx(q, d)] = 0.0;
        } else {
            log_[idx(q, d)] = std::log(std::abs(value)) + scale;
            sign_[idx(q, d)] = value > 0.0 ? 1.0 : -1.0;
        }
    }

    int max_q_;
    std::vector<double> log_;
    std::vector<double> sign_;
};

// Radial part of <j'|D(z)|j>, i.e. the element divided by the unit phase
// of zeta^{|j'-j|} where zeta = z (j' >= j) or -z* (j' < j):
//   sqrt(min! / max!) |z|^{|j'-j|} e^{-t/2} L_min^{(|j'-j|)}(t),  t = |z|^2.
// Keeping the |z|^d magnitude here (instead of in the band evaluation)
// stops wide-support states at large |z| from pairing an underflowed band
// sum with an overflowed power.
double radial_element(int jp, int j, double t, const LaguerreTable& table) {
    const int lo = std::min(jp, j);
    const int d = std::abs(jp - j);
    if (d > 0 && t == 0.0) return 0.0;
    const double lg = 0.5 * (sf::log_factorial(lo) - sf::log_factorial(lo + d)) - 0.5 * t +
                      (d > 0 ? 0.5 * d * std::log(t) : 0.0) + table.log_abs(lo, d);
    if (lg < kLogCutoff) return 0.0;
    return table.sign(lo, d) * std::exp(lg);
}

// Diagonal-distance sums: chi12(a, b) = sum_delta H[delta] * phase^delta
// with phase the unit complex direction of ab (delta >= 0) or a* b*
// (delta < 0); the |ab|^delta magnitude is already inside H. Both modes
// step by the same delta along the state's shifted diagonal, so the
// double sum collapses to this banded form.
struct BandSums {
    std::vector<double> pos;  // delta = 0..S-1
    std::vector<double> neg;  // delta = -1..-(S-1), index |delta|-1
};

BandSums band_sums(const FockState& state, double t1, double t2) {
    const int S = state.support_size();
    const int kmin = state.kmin();
    const int m = state.m(), n = state.n();
    const int max_q = kmin + S - 1 - std::min(m, n);
    LaguerreTable table1(max_q, S - 1, t1);
    const LaguerreTable* table2 = &table1;
    LaguerreTable table2_store(0, 0, 0.0);
    if (t2 != t1) {
        table2_store = LaguerreTable(max_q, S - 1, t2);
        table2 = &table2_store;
    }
    BandSums sums;
    sums.pos.assign(S, 0.0);
    sums.neg.assign(S > 1 ? S - 1 : 0, 0.0);
    for (int delta = 0; delta < S; ++delta) {
        double up = 0.0, down = 0.0;
        for (int i = 0; i + delta < S; ++i) {
            const int k_lo = kmin + i;
            const int k_hi = k_lo + delta;
            const double cc = state.diag(i + delta) * state.diag(i);
            if (cc == 0.0) continue;
            const double r1 = radial_element(k_hi - m, k_lo - m, t1, table1);
            const double r2 = radial_element(k_hi - n, k_lo - n, t2, *table2);
            const double w = cc * r1 * r2;
            up += w;    // bra index above ket: <k_hi| ... |k_lo>
            down += w;  // transpose pair; amplitudes are real so weights match
        }
        sums.pos[delta] = up;
        if (delta > 0) sums.neg[delta - 1] = down;
    }
    return sums;
}

std::complex<double> chi12_from_bands(const BandSums& sums, std::complex<double> a,
                                      std::complex<double> b) {
    auto unit = [](std::complex<double> z) {
        return z == std::complex<double>(0.0) ? z : z / std::abs(z);
    };
    const std::complex<double> zp = unit(a) * unit(b);
    const std::complex<double> zm = std::conj(zp);
    std::complex<double> total = sums.pos[0];
    std::complex<double> pp = 1.0, pm = 1.0;
    for (size_t d = 1; d < sums.pos.size(); ++d) {
        pp *= zp;
        pm *= zm;
        total += sums.pos[d] * pp;
        total += sums.neg[d - 1] * pm;
    }
    return total;
}

std::complex<double> coherent_chi(std::complex<double> alpha, std::complex<double> mu) {
    const double im = std::imag(alpha * std::conj(mu));
    return std::exp(std::complex<double>(-0.5 * std::norm(alpha), 2.0 * im));
}

double fidelity_pass(const FockState& state, std::complex<double> mu, int radial, int angular) {
    const auto [nodes, weights] = gauss_laguerre(radial);
    const double dtheta = 2.0 * std::numbers::pi / angular;
    double acc_re = 0.0, acc_im = 0.0;
    for (int i = 0; i < radial; ++i) {
        const double t = nodes[i];
        const BandSums sums = band_sums(state, t, t);
        const double rad = std::sqrt(t);
        double ring_re = 0.0, ring_im = 0.0;
        for (int j = 0; j < angular; ++j) {
            const double theta = j * dtheta;
            const std::complex<double> alpha = rad * std::exp(std::complex<double>(0.0, theta));
            // chi_in(alpha) chi_in(-alpha) carries the e^{-t} quadrature
            // weight; the mu phases are kept explicit and multiplied out.
            const std::complex<double> phases =
                coherent_chi(alpha, mu) * coherent_chi(-alpha, mu) * std::exp(t);
            const std::complex<double> chi =
                chi12_from_bands(sums, -std::conj(alpha), -alpha);
            const std::complex<double> value = phases * chi;
            ring_re += value.real();
            ring_im += value.imag();
        }
        acc_re += weights[i] * ring_re;
        acc_im += weights[i] * ring_im;
    }
    const double result_im = acc_im / angular;
    if (std::abs(result_im) > 1e-10) {
        throw quadrature_error("fidelity_numeric: imaginary residue above tolerance");
    }
    return acc_re / angular;
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_laguerre(int order) {
    if (order < 1) throw std::domain_error("gauss_laguerre: order must be positive");
    std::vector<double> x(order), w(order);
    double z = 0.0;
    for (int i = 0; i < order; ++i) {
        // standard initial guesses, then Newton on the recurrence
        if (i == 0) {
            z = 3.0 / (1.0 + 2.4 * order);
        } else if (i == 1) {
            z += 15.0 / (1.0 + 2.5 * order);
        } else {
            const double ai = i - 1;
            z += (1.0 + 2.55 * ai) / (1.9 * ai) * (z - x[i - 2]);
        }
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0 - z) * p2 - j * p3) / (j + 1.0);
            }
            pp = order * (p1 - p2) / z;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-14 * std::abs(z)) break;
        }
        x[i] = z;
        double p2 = 0.0, p1 = 1.0;
        for (int j = 0; j < order; ++j) {
            const double p3 = p2;
            p2 = p1;
            p1 = ((2.0 * j + 1.0 - z) * p2 - j * p3) / (j + 1.0);
        }
        pp = order * (p1 - p2) / z;
        w[i] = -1.0 / (pp * order * p2);
    }
    return {x, w};
}

std::complex<double> displacement_element(int j, int k, std::complex<double> alpha) {
    if (j < 0 || k < 0) throw std::domain_error("displacement_element: negative index");
    if (alpha == std::complex<double>(0.0, 0.0)) return j == k ? 1.0 : 0.0;
    const double t = std::norm(alpha);
    const int lo = std::min(j, k);
    const int d = std::abs(j - k);
    const auto lag = sf::laguerre_assoc_scaled(lo, d, t);
    if (lag.value == 0.0) return 0.0;
    const double lg = 0.5 * (sf::log_factorial(lo) - sf::log_factorial(lo + d)) - 0.5 * t +
                      d * 0.5 * std::log(t) + lag.log_scale_hint.value_or(0.0) +
                      std::log(std::abs(lag.value));
    const std::complex<double> zeta = (j >= k) ? alpha : -std::conj(alpha);
    std::complex<double> phase = 1.0;
    const std::complex<double> unit = zeta / std::abs(zeta);
    for (int i = 0; i < d; ++i) phase *= unit;
    return phase * (lag.value > 0.0 ? 1.0 : -1.0) * std::exp(lg);
}

std::complex<double> chi12_numeric(const FockState& state, std::complex<double> alpha,
                                   std::complex<double> beta) {
    const BandSums sums = band_sums(state, std::norm(alpha), std::norm(beta));
    return chi12_from_bands(sums, alpha, beta);
}

double fidelity_numeric(const FockState& state, std::complex<double> mu,
                        QuadratureScheme scheme) {
    if (scheme.radial_nodes < 2) throw std::domain_error("fidelity_numeric: radial_nodes < 2");
    const int min_angular = 4 * (state.m() + state.n()) + 8;
    int angular = scheme.angular_nodes > 0 ? scheme.angular_nodes : min_angular;
    if (angular < min_angular) {
        throw std::domain_error("fidelity_numeric: angular_nodes below trigonometric-degree bound");
    }
    const double coarse = fidelity_pass(state, mu, scheme.radial_nodes, angular);
    const double fine = fidelity_pass(state, mu, 2 * scheme.radial_nodes, angular);
    if (!(std::abs(fine - coarse) <= 1e-8) || !std::isfinite(fine)) {
        throw quadrature_error("fidelity_numeric: doubling radial order moved result by " +
                               std::to_string(std::abs(fine - coarse)));
    }
    return fine;
}

TwoModeCM cm_numeric(const FockState& state) {
    const int S = state.support_size();
    const int kmin = state.kmin();
    const int m = state.m(), n = state.n();
    double na = 0.0, nb = 0.0, ab = 0.0;
    double a1 = 0.0, b1 = 0.0, a2 = 0.0, b2 = 0.0;  // <a>, <b>, <a^2>, <b^2>
    for (int i = 0; i < S; ++i) {
        const int k = kmin + i;
        const int j1 = k - m, j2 = k - n;
        const double c = state.diag(i);
        na += c * c * j1;
        nb += c * c * j2;
        if (i + 1 < S) {
            const double cn = state.diag(i + 1);
            ab += c * cn * std::sqrt(static_cast<double>(j1 + 1) * (j2 + 1));
        }
        // structural zeros: every single-ladder or same-mode-double partner
        // leaves the shifted diagonal
        a1 += c * state.amplitude(j1 - 1, j2) * std::sqrt(static_cast<double>(j1));
        b1 += c * state.amplitude(j1, j2 - 1) * std::sqrt(static_cast<double>(j2));
        a2 += c * state.amplitude(j1 - 2, j2) *
              std::sqrt(static_cast<double>(j1) * std::max(j1 - 1, 0));
        b2 += c * state.amplitude(j1, j2 - 2) *
              std::sqrt(static_cast<double>(j2) * std::max(j2 - 1, 0));
    }
    if (std::abs(a1) + std::abs(b1) + std::abs(a2) + std::abs(b2) > 1e-12) {
        throw std::logic_error("cm_numeric: first moments or squeezing moments unexpectedly nonzero");
    }
    return {0.5 + na, 0.5 + nb, ab};
}

}  // namespace cvtele::oracle
