#include "zeroflip/flip.hpp"

#include <cmath>
#include <stdexcept>

#include "zeroflip/exp_moment.hpp"
#include "zeroflip/quadrature.hpp"

namespace zeroflip {

namespace {

const Complex kI(0.0, 1.0);

Complex eval_time_derivative(const PWFunction& f, Complex z) {
    // f'(z) = (1/sqrt(2 pi)) int F(xi) (i xi) e^{i z xi} dxi
    const auto& F = f.spectrum();
    const auto& bp = F.breakpoints();
    Complex acc(0.0);
    for (std::size_t i = 0; i < F.pieces().size(); ++i) {
        if (F.pieces()[i].is_zero()) continue;
        const Poly weighted = Poly({Complex(bp[i]), Complex(1.0)}) * F.pieces()[i];
        const Complex phase = std::exp(kI * z * bp[i]);
        acc += phase * exp_moment(weighted.scaled(kI), 0.0, bp[i + 1] - bp[i], z);
    }
    return acc / std::sqrt(2.0 * M_PI);
}

}  // namespace

Complex multiplier(const FlipPoint& a, double x) { return multiplier_ext(a, Complex(x, 0.0)); }

Complex multiplier_ext(const FlipPoint& a, Complex z) {
    const Complex av = a.value();
    return (av / std::conj(av)) * (z - std::conj(av)) / (z - av) *
           std::exp(kI * a.beta * z);
}

double zero_detection_tol(const PWFunction& f, const FlipPoint& a) {
    return 1e-10 * f.l2_norm() * std::max(1.0, std::abs(a.value()));
}

Complex flip_time(const PWFunction& f, const FlipPoint& a, Complex z) {
    const Complex av = a.value();
    const double near = 1e-12 * std::max(1.0, std::abs(av));
    if (std::abs(z - av) < near) {
        const Complex fa = f(av);
        if (std::abs(fa) >= zero_detection_tol(f, a))
            throw std::domain_error("flip_time: pole at z = a (f(a) != 0)");
        // Removable singularity: u_a f -> (a/conj a)(2i Im a) e^{i beta a} f'(a).
        return (av / std::conj(av)) * (2.0 * kI * a.im) * std::exp(kI * a.beta * av) *
               eval_time_derivative(f, av);
    }
    return multiplier_ext(a, z) * f(z);
}

GammaKernel gamma_kernel(const FlipPoint& a) {
    return {std::sqrt(2.0 * M_PI) / a.im, a.value()};
}

ExpPolySpectrum gamma_convolution(const PWFunction& f, const FlipPoint& a) {
    const Complex av = a.value();
    const Complex ia = kI * av;
    const auto& F = f.spectrum();
    const auto& bp = F.breakpoints();
    const auto& pieces = F.pieces();
    const std::size_t n = pieces.size();

    // Right-to-left accumulation of R_k = e^{-ia b_k} I(b_k) with
    // I(u) = int_u^{b_n} e^{iat} F(t) dt. Every factor in the recursion has
    // magnitude <= 1 or piece-width scale, so the walk never amplifies.
    std::vector<Complex> R(n + 1, Complex(0.0));
    for (std::size_t k = n; k-- > 0;) {
        const double w = bp[k + 1] - bp[k];
        const Complex decay = std::exp(ia * w);  // |.| = e^{-Im a w} <= 1
        R[k] = decay * R[k + 1] + exp_moment(pieces[k], 0.0, w, av);
    }

    ExpPolySpectrum out;
    for (std::size_t k = 0; k < n; ++k) {
        const double w = bp[k + 1] - bp[k];
        if (w <= PiecewisePolySpectrum::kMergeTol) continue;
        const Poly& P = pieces[k];
        const int deg = P.degree();
        const double z = std::abs(av) * w;
        const double z_switch = 2.0 * std::max(4, deg + 1);

        if (!P.is_zero() && z >= z_switch) {
            // Exponential split: K(u) = -i [C e^{-ia(u - b_k)} - Q(u - b_k)].
            std::vector<Complex> q(deg + 1);
            q[deg] = P.coeff(deg) / ia;
            for (int j = deg - 1; j >= 0; --j) q[j] = (P.coeff(j) - double(j + 1) * q[j + 1]) / ia;
            Poly Q(std::move(q));
            const Complex C = std::exp(ia * w) * (R[k + 1] + Q(Complex(w, 0.0)));
            out.add_atom({bp[k], bp[k + 1], -ia, Poly::constant(-kI * C)});
            out.add_atom({bp[k], bp[k + 1], Complex(0.0), Q.scaled(kI)});
        } else {
            // Taylor route: K' = -ia K + i F, expanded about the midpoint.
            const double mid = 0.5 * (bp[k] + bp[k + 1]), h = 0.5 * w;
            const Poly local = P.shifted(mid - bp[k]);  // F Taylor coefficients at mid
            Complex base = std::exp(ia * (bp[k + 1] - mid)) * R[k + 1];
            if (!P.is_zero())
                base += std::exp(-ia * (mid - bp[k])) * exp_moment(P, mid - bp[k], w, av);
            std::vector<Complex> tau;
            tau.push_back(-kI * base);
            const double scale =
                std::max({std::abs(tau[0]), local.magnitude_bound(h), 1e-300});
            const int max_terms = deg + 40;
            for (int j = 0; j < max_terms; ++j) {
                const Complex next = (-ia * tau[j] + kI * local.coeff(j)) / double(j + 1);
                tau.push_back(next);
                if (j > deg && std::abs(next) * std::pow(h, j + 1) < 1e-18 * scale) break;
            }
            out.add_atom({bp[k], bp[k + 1], Complex(0.0),
                          Poly(std::move(tau)).shifted(-(mid - bp[k]))});
        }
    }
    // Below the support I(u) is the full transform: a pure decaying exponential
    // whose amplitude -i R_0 is proportional to f(a).
    out.set_tail({bp.front(), -kI * R[0], -ia});
    return out.translated(a.beta);
}

ExpPolySpectrum flip_spectrum(const PWFunction& f, const FlipPoint& a) {
    const Complex av = a.value();
    const Complex pref = av / std::conj(av);
    ExpPolySpectrum out =
        ExpPolySpectrum::from_piecewise(f.spectrum().translated(a.beta)).scaled(pref);
    ExpPolySpectrum conv = gamma_convolution(f, a).scaled(pref * (-2.0 * kI * a.im));
    for (const auto& atom : conv.atoms()) out.add_atom(atom);
    if (conv.tail()) out.set_tail(*conv.tail());
    return out;
}

double strip_norm(const PWFunction& f, const FlipPoint& a, double lambda) {
    if (!(lambda > 0.0 && lambda < a.im))
        throw std::domain_error("strip_norm: need 0 < lambda < Im a");
    const double nf = f.l2_norm();
    const double abs_tol = 1e-9 * nf * nf * std::exp(2.0 * f.bandlimit() * lambda);
    const double panel = 1.0 / std::max({1.0, f.bandlimit(), std::abs(a.value())});

    auto slice_sq = [&](double y) {
        const double ufac = 1.0 + 2.0 * a.im / (a.im - std::abs(y));
        const double X = f.tail_radius(0.25 * abs_tol / (ufac * ufac), y);
        const double core = std::max({f.feature_radius(y), std::abs(a.re) + a.im + 1.0, 4.0});
        auto integrand = [&](double x) {
            const Complex z(x, y);
            return std::norm(multiplier_ext(a, z) * f(z));
        };
        return integrate_decaying_line_real(integrand, core, X, abs_tol, panel);
    };

    constexpr int kGrid = 33;
    double best = 0.0;
    int best_i = 0;
    for (int i = 0; i < kGrid; ++i) {
        const double y = -lambda + 2.0 * lambda * double(i) / double(kGrid - 1);
        const double v = slice_sq(y);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    double lo = -lambda + 2.0 * lambda * double(std::max(0, best_i - 1)) / double(kGrid - 1);
    double hi = -lambda + 2.0 * lambda * double(std::min(kGrid - 1, best_i + 1)) / double(kGrid - 1);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = slice_sq(x1), f2 = slice_sq(x2);
    while (hi - lo > 1e-4 * lambda) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = slice_sq(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = slice_sq(x1);
        }
        best = std::max({best, f1, f2});
    }
    return std::sqrt(best);
}

const ExpPolySpectrum& FlippedFunction::spectrum() const {
    std::call_once(cell_->flag,
                   [&] { cell_->value = flip_spectrum(base_, point_); });
    return *cell_->value;
}

}  // namespace zeroflip
