#include "zeroflip/exp_moment.hpp"

#include <cmath>
#include <stdexcept>

namespace zeroflip {

namespace {

// Series evaluation around the midpoint: with u = t - mid,
//   integral = e^{iw mid} * sum_k (iw)^k / k! * m_k,   m_k = int_{-h}^{h} u^k q(u) du.
// The m_k are exact polynomial moments; the sum converges like (|w|h)^k / k!.
Complex series_moment(const Poly& q, double h, Complex w, Complex phase) {
    const Complex iw(-w.imag(), w.real());
    const double bound = q.magnitude_bound(h);
    Complex acc(0.0);
    Complex coef(1.0);  // (iw)^k / k!
    const int max_terms = 80;
    for (int k = 0; k < max_terms; ++k) {
        // m_k = sum_j q_j * int u^{k+j} du over [-h, h]
        Complex mk(0.0);
        double hpow = std::pow(h, k + 1);
        for (int j = 0; j <= q.degree(); ++j) {
            if ((k + j) % 2 == 0) mk += q.coeff(j) * (2.0 * hpow / double(k + j + 1));
            hpow *= h;
        }
        acc += coef * mk;
        const double tail = std::abs(coef) * bound * 2.0 * std::pow(h, k + 2) / double(k + 2);
        if (k >= 4 && tail < 1e-20 * (std::abs(acc) + 1e-300)) break;
        coef *= iw / double(k + 1);
    }
    return phase * acc;
}

// Integration by parts: the antiderivative of e^{iwt} q(t) is e^{iwt} Q(t) with
// Q found by descending-degree recursion. Stable once |w| h exceeds the degree.
Complex ibp_moment(const Poly& q, double h, Complex w, Complex phase) {
    const Complex iw(-w.imag(), w.real());
    const int d = q.degree();
    std::vector<Complex> Q(d + 1);
    Q[d] = q.coeff(d) / iw;
    for (int k = d - 1; k >= 0; --k) Q[k] = (q.coeff(k) - double(k + 1) * Q[k + 1]) / iw;
    Poly anti(std::move(Q));
    const Complex ep = std::exp(iw * h), em = std::exp(-iw * h);
    return phase * (ep * anti(Complex(h, 0.0)) - em * anti(Complex(-h, 0.0)));
}

}  // namespace

Complex exp_moment(const Poly& p, double lo, double hi, Complex w) {
    if (!(hi >= lo)) throw std::invalid_argument("exp_moment: hi < lo");
    if (hi == lo || p.is_zero()) return Complex(0.0);
    const double mid = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    const Poly q = p.shifted(mid);
    const Complex phase = std::exp(Complex(-w.imag() * mid, w.real() * mid));  // e^{iw mid}
    const double z = std::abs(w) * (hi - lo);
    // Below the switch the by-parts form cancels catastrophically; the series
    // needs only O(z + deg) terms there.
    const double z_switch = 2.0 * std::max(4, q.degree() + 1);
    if (z < z_switch) return series_moment(q, h, w, phase);
    return ibp_moment(q, h, w, phase);
}

Complex exp_halfline_moment(const Poly& p, Complex sigma) {
    if (!(sigma.real() > 0.0))
        throw std::domain_error("exp_halfline_moment: divergent, Re sigma <= 0");
    // int_{-inf}^{0} v^n e^{sigma v} dv = (-1)^n n! / sigma^{n+1}
    Complex acc(0.0);
    Complex factor = 1.0 / sigma;  // (-1)^n n! / sigma^{n+1}
    for (int n = 0; n <= p.degree(); ++n) {
        acc += p.coeff(n) * factor;
        factor *= -double(n + 1) / sigma;
    }
    return acc;
}

}  // namespace zeroflip
