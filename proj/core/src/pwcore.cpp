#include "zeroflip/pwcore.hpp"

#include <cmath>
#include <stdexcept>

#include "zeroflip/exp_moment.hpp"

namespace zeroflip {

FlipPoint::FlipPoint(double re_, double im_) : re(re_), im(im_) {
    if (!(im > 0.0)) throw std::invalid_argument("FlipPoint: Im a must be > 0");
    beta = 2.0 * im / (re * re + im * im);
}

void ZeroProductSpec::validate() const {
    if (!(c > 0.0)) throw std::invalid_argument("ZeroProductSpec: factor scale c must be > 0");
    if (m < 1) throw std::invalid_argument("ZeroProductSpec: order m must be >= 1");
    if (!zeros.empty() && m < static_cast<int>(zeros.size()) + 2)
        throw std::invalid_argument("ZeroProductSpec: need m >= #zeros + 2");
}

Complex sinc(Complex w) {
    if (std::abs(w) < 1e-4) {
        const Complex w2 = w * w;
        return 1.0 - w2 / 6.0 + w2 * w2 / 120.0;
    }
    return std::sin(w) / w;
}

PWFunction PWFunction::build(const ZeroProductSpec& spec) {
    spec.validate();
    const double c = spec.c;
    const int m = spec.m;
    const double A = std::sqrt(M_PI / 2.0) / c;  // transform height of a single sinc factor
    const double inv_root_2pi = 1.0 / std::sqrt(2.0 * M_PI);

    // Spectrum of sinc(cx)^m: m-fold self-convolution of the indicator,
    // carrying one 1/sqrt(2 pi) per product in the time domain.
    PiecewisePolySpectrum F = PiecewisePolySpectrum::indicator(-c, c, A);
    for (int k = 1; k < m; ++k)
        F = F.convolve_indicator(c).scaled(A * inv_root_2pi);

    // Each zero factor (x - z_k) acts on the spectrum as i d/dxi - z_k.
    for (Complex zk : spec.zeros)
        F = F.derivative().scaled(Complex(0.0, 1.0)) - F.scaled(zk);

    ZeroProductSpec resolved = spec;
    if (spec.amplitude) {
        F = F.scaled(*spec.amplitude);
    } else {
        const double raw_norm = F.norm();
        if (!(raw_norm > 0.0)) throw std::invalid_argument("ZeroProductSpec: degenerate spectrum");
        resolved.amplitude = Complex(1.0 / raw_norm, 0.0);
        F = F.scaled(*resolved.amplitude);
    }

    PWFunction f;
    f.spectrum_ = std::move(F);
    f.bandlimit_ = spec.bandlimit();
    f.decay_order_ = m - static_cast<int>(spec.zeros.size());
    f.norm_ = f.spectrum_.norm();
    f.spec_ = std::move(resolved);
    return f;
}

PWFunction PWFunction::from_spectrum(PiecewisePolySpectrum spectrum, int decay_order) {
    if (spectrum.empty()) throw std::invalid_argument("PWFunction: empty spectrum");
    PWFunction f;
    f.bandlimit_ = std::max(std::abs(spectrum.support_lo()), std::abs(spectrum.support_hi()));
    f.spectrum_ = std::move(spectrum);
    f.decay_order_ = std::max(1, decay_order);
    f.norm_ = f.spectrum_.norm();
    return f;
}

Complex PWFunction::eval_time(Complex z) const {
    const auto& bp = spectrum_.breakpoints();
    Complex acc(0.0);
    for (std::size_t i = 0; i < spectrum_.pieces().size(); ++i) {
        const Poly& p = spectrum_.pieces()[i];
        if (p.is_zero()) continue;
        // int_{bp_i}^{bp_{i+1}} e^{i z xi} P(xi - bp_i) dxi
        const Complex phase = std::exp(Complex(0.0, 1.0) * z * bp[i]);
        acc += phase * exp_moment(p, 0.0, bp[i + 1] - bp[i], z);
    }
    return acc / std::sqrt(2.0 * M_PI);
}

Complex PWFunction::eval_product(Complex z) const {
    if (!spec_) throw std::logic_error("eval_product: no generating spec");
    Complex acc = *spec_->amplitude;
    for (Complex zk : spec_->zeros) acc *= (z - zk);
    const Complex s = sinc(spec_->c * z);
    Complex spow(1.0);
    for (int k = 0; k < spec_->m; ++k) spow *= s;
    return acc * spow;
}

double PWFunction::tail_radius(double eps_sq, double y) const {
    if (!(eps_sq > 0.0)) throw std::invalid_argument("tail_radius: eps_sq must be > 0");
    const double ay = std::abs(y);
    double C, x0;
    int d;
    if (spec_) {
        const int p = static_cast<int>(spec_->zeros.size());
        d = spec_->m - p;
        double max_zero = 0.0;
        for (Complex zk : spec_->zeros) max_zero = std::max(max_zero, std::abs(zk));
        x0 = std::max(1.0, 2.0 * (max_zero + ay));
        C = std::abs(*spec_->amplitude) * std::pow(1.5, p) / std::pow(spec_->c, spec_->m) *
            std::exp(bandlimit_ * ay);
    } else {
        // One integration by parts: |f(x+iy)| <= C / |x| with C built from the
        // spectrum's jumps and total variation.
        d = 1;
        x0 = std::max(1.0, 2.0 * ay);
        double jumps = 0.0, tv = 0.0;
        const auto& bp = spectrum_.breakpoints();
        const auto& pieces = spectrum_.pieces();
        for (std::size_t i = 0; i + 1 <= pieces.size(); ++i) {
            const double w = bp[i + 1] - bp[i];
            const Complex left = (i == 0) ? Complex(0.0) : pieces[i - 1](bp[i] - bp[i - 1]);
            jumps += std::abs(pieces[i](0.0) - left);
            tv += pieces[i].derivative().magnitude_bound(w) * w;
        }
        jumps += std::abs(pieces.back()(bp.back() - bp[bp.size() - 2]));
        C = (jumps + tv) / std::sqrt(2.0 * M_PI) * std::exp(bandlimit_ * ay);
    }
    const double q = 2.0 * d - 1.0;
    const double X = std::pow(2.0 * C * C / (q * eps_sq), 1.0 / q);
    return std::max({x0, X, bandlimit_ > 0.0 ? 4.0 / bandlimit_ : 1.0});
}

double PWFunction::feature_radius(double y) const {
    double max_zero = 0.0;
    if (spec_)
        for (Complex zk : spec_->zeros) max_zero = std::max(max_zero, std::abs(zk));
    const double band = bandlimit_ > 0.0 ? 4.0 / bandlimit_ : 1.0;
    return std::max({1.0, 2.0 * (max_zero + std::abs(y)), band});
}

}  // namespace zeroflip
