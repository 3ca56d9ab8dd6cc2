#include "zeroflip/stability.hpp"

#include <cmath>

#include "zeroflip/quadrature.hpp"

namespace zeroflip {

namespace {

const Complex kI(0.0, 1.0);

StabilityReport make_report(double norm_sq, Complex inner) {
    StabilityReport r;
    r.inner_value = inner;
    const double mag = std::abs(inner);
    r.distance_sq = std::max(0.0, 2.0 * (norm_sq - mag));
    if (mag > 1e-15 * norm_sq) {
        r.optimal_phase = inner / mag;
        r.phase_defined = true;
    } else {
        r.optimal_phase = Complex(1.0);
        r.phase_defined = false;
        r.distance_sq = 2.0 * norm_sq;
    }
    return r;
}

}  // namespace

Complex self_inner(const PWFunction& f, const FlipPoint& a) {
    const Complex av = a.value();
    const auto& F = f.spectrum();
    const Complex autocorr = inner_product(F.translated(a.beta), F);
    const Complex smooth = inner_product(gamma_convolution(f, a), F);
    return (av / std::conj(av)) * (autocorr - 2.0 * kI * a.im * smooth);
}

StabilityReport self_distance(const PWFunction& f, const FlipPoint& a) {
    const double nsq = f.l2_norm() * f.l2_norm();
    return make_report(nsq, self_inner(f, a));
}

PairInnerResult pair_inner(const PWFunction& f, const FlipPoint& a, const FlipPoint& b) {
    const auto& F = f.spectrum();
    const auto ta = ExpPolySpectrum::from_piecewise(F.translated(a.beta));
    const auto tb = ExpPolySpectrum::from_piecewise(F.translated(b.beta));
    const ExpPolySpectrum Ka = gamma_convolution(f, a);
    const ExpPolySpectrum Kb = gamma_convolution(f, b);

    const Complex b_ab = 2.0 * kI * b.im * inner_product(ta, Kb);
    const Complex c_ab = -2.0 * kI * a.im * inner_product(Ka, tb);
    const Complex d_ab = 4.0 * a.im * b.im * inner_product(Ka, Kb);
    const Complex b_bb = 2.0 * kI * b.im * inner_product(tb, Kb);
    const Complex c_bb = -2.0 * kI * b.im * inner_product(Kb, tb);
    const Complex d_bb = 4.0 * b.im * b.im * inner_product(Kb, Kb);

    PairInnerResult r;
    r.a_term = inner_product(F.translated(a.beta), F.translated(b.beta));
    r.b_diff = b_ab - b_bb;
    r.c_diff = c_ab - c_bb;
    r.d_diff = d_ab - d_bb;
    r.total = r.a_term + r.b_diff + r.c_diff + r.d_diff;
    r.identity_residual = std::abs(b_bb + c_bb + d_bb);
    r.direct = inner_product(flip_spectrum(f, a), flip_spectrum(f, b));
    return r;
}

StabilityReport pair_distance(const PWFunction& f, const FlipPoint& a, const FlipPoint& b) {
    const double nsq = f.l2_norm() * f.l2_norm();
    const PairInnerResult pi = pair_inner(f, a, b);
    // Undo the phase normalization so inner_value is the plain inner product.
    const Complex av = a.value(), bv = b.value();
    const Complex phase = (av * std::conj(bv)) / (std::conj(av) * bv);
    StabilityReport r = make_report(nsq, phase * pi.total);
    r.decomposition = {{pi.a_term, pi.b_diff, pi.c_diff, pi.d_diff}};
    return r;
}

Complex time_oracle_inner(const PWFunction& f, const FlipPoint& a, const FlipPoint& b,
                          double rel_tol) {
    const double nsq = f.l2_norm() * f.l2_norm();
    const double abs_tol = rel_tol * nsq;
    // |u_a conj(u_b)| = 1 on the line, so the truncation budget is carried by
    // |f|^2 alone.
    const double X = f.tail_radius(0.5 * abs_tol);
    const double panel =
        1.0 / std::max({1.0, std::abs(a.value()), std::abs(b.value()), f.bandlimit()});
    const double core = std::max({f.feature_radius(), std::abs(a.re) + 1.0,
                                  std::abs(b.re) + 1.0, 4.0});
    auto integrand = [&](double x) {
        const Complex fx = f(Complex(x, 0.0));
        return multiplier(a, x) * std::conj(multiplier(b, x)) * std::norm(fx);
    };
    return integrate_decaying_line(integrand, core, X, 0.5 * abs_tol, panel);
}

}  // namespace zeroflip
