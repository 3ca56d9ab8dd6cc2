#include "zeroflip/exp_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zeroflip/exp_moment.hpp"

namespace zeroflip {

namespace {

constexpr double kTol = PiecewisePolySpectrum::kMergeTol;

// integral over [p, q] of e^{sigma u} R(u) du with R given in the same frame.
Complex exp_integral(const Poly& R, double p, double q, Complex sigma) {
    return exp_moment(R, p, q, Complex(sigma.imag(), -sigma.real()));
}

}  // namespace

ExpPolySpectrum ExpPolySpectrum::from_piecewise(const PiecewisePolySpectrum& F) {
    ExpPolySpectrum out;
    const auto& bp = F.breakpoints();
    for (std::size_t i = 0; i < F.pieces().size(); ++i) {
        if (F.pieces()[i].is_zero()) continue;
        out.add_atom({bp[i], bp[i + 1], Complex(0.0), F.pieces()[i]});
    }
    return out;
}

void ExpPolySpectrum::add_atom(ExpAtom atom) {
    if (atom.hi - atom.lo <= kTol || atom.poly.is_zero()) return;
    atoms_.push_back(std::move(atom));
}

void ExpPolySpectrum::set_tail(ExpTail tail) {
    if (!(tail.nu.real() > 0.0))
        throw std::invalid_argument("ExpPolySpectrum: tail must decay (Re nu > 0)");
    tail_ = std::move(tail);
}

Complex ExpPolySpectrum::operator()(double xi) const {
    Complex acc(0.0);
    for (const auto& a : atoms_)
        if (xi >= a.lo && xi < a.hi) acc += a(xi);
    if (tail_ && xi < tail_->cutoff) acc += (*tail_)(xi);
    return acc;
}

ExpPolySpectrum ExpPolySpectrum::translated(double alpha) const {
    ExpPolySpectrum out;
    out.atoms_ = atoms_;
    for (auto& a : out.atoms_) {
        a.lo += alpha;
        a.hi += alpha;
    }
    if (tail_) {
        ExpTail t = *tail_;
        t.cutoff += alpha;
        out.tail_ = t;
    }
    return out;
}

ExpPolySpectrum ExpPolySpectrum::scaled(Complex s) const {
    ExpPolySpectrum out;
    out.atoms_ = atoms_;
    for (auto& a : out.atoms_) a.poly = a.poly.scaled(s);
    if (tail_) {
        ExpTail t = *tail_;
        t.amp *= s;
        out.tail_ = t;
    }
    return out;
}

std::vector<double> ExpPolySpectrum::partition() const {
    std::vector<double> pts;
    for (const auto& a : atoms_) {
        pts.push_back(a.lo);
        pts.push_back(a.hi);
    }
    std::sort(pts.begin(), pts.end());
    std::vector<double> out;
    for (double v : pts)
        if (out.empty() || v - out.back() > kTol) out.push_back(v);
    return out;
}

int ExpPolySpectrum::segment_index(double xi) const {
    const auto pts = partition();
    if (pts.empty()) return (tail_ && xi < tail_->cutoff) ? -1 : -2;
    if (xi < pts.front()) return (tail_ && xi < tail_->cutoff) ? -1 : -2;
    if (xi >= pts.back()) return -2;
    auto it = std::upper_bound(pts.begin(), pts.end(), xi);
    return static_cast<int>(it - pts.begin()) - 1;
}

double ExpPolySpectrum::support_hi() const {
    double hi = tail_ ? tail_->cutoff : 0.0;
    for (const auto& a : atoms_) hi = std::max(hi, a.hi);
    return hi;
}

Complex inner_product(const ExpPolySpectrum& F, const ExpPolySpectrum& G) {
    Complex acc(0.0);

    // atom x atom
    for (const auto& a : F.atoms_) {
        for (const auto& b : G.atoms_) {
            const double p = std::max(a.lo, b.lo), q = std::min(a.hi, b.hi);
            if (q - p <= kTol) continue;
            const double mid = 0.5 * (p + q), h = 0.5 * (q - p);
            const Complex sigma = a.mu + std::conj(b.mu);
            const Complex pref =
                std::exp(a.mu * (mid - a.lo) + std::conj(b.mu) * (mid - b.lo));
            const Poly R = a.poly.shifted(mid - a.lo) * b.poly.shifted(mid - b.lo).conjugated();
            acc += pref * exp_integral(R, -h, h, sigma);
        }
    }

    // tail x atom and atom x tail
    auto tail_atom = [&](const ExpTail& t, const ExpAtom& b, bool tail_first) -> Complex {
        const double p = b.lo, q = std::min(b.hi, t.cutoff);
        if (q - p <= kTol) return Complex(0.0);
        const double mid = 0.5 * (p + q), h = 0.5 * (q - p);
        const Complex nu = tail_first ? t.nu : std::conj(t.nu);
        const Complex mu = tail_first ? std::conj(b.mu) : b.mu;
        const Complex amp = tail_first ? t.amp : std::conj(t.amp);
        const Complex pref = amp * std::exp(nu * (mid - t.cutoff) + mu * (mid - b.lo));
        const Poly R = tail_first ? b.poly.shifted(mid - b.lo).conjugated()
                                  : b.poly.shifted(mid - b.lo);
        return pref * exp_integral(R, -h, h, nu + mu);
    };
    if (F.tail_)
        for (const auto& b : G.atoms_) acc += tail_atom(*F.tail_, b, true);
    if (G.tail_)
        for (const auto& a : F.atoms_) acc += tail_atom(*G.tail_, a, false);

    // tail x tail
    if (F.tail_ && G.tail_) {
        const auto& s = *F.tail_;
        const auto& t = *G.tail_;
        const double m = std::min(s.cutoff, t.cutoff);
        const Complex sigma = s.nu + std::conj(t.nu);
        const Complex vm =
            s.amp * std::exp(s.nu * (m - s.cutoff)) * std::conj(t.amp * std::exp(t.nu * (m - t.cutoff)));
        acc += vm / sigma;
    }

    return acc;
}

double ExpPolySpectrum::norm_sq() const { return std::max(0.0, inner_product(*this, *this).real()); }

double ExpPolySpectrum::norm() const { return std::sqrt(norm_sq()); }

double ExpPolySpectrum::weighted_norm(double lambda) const {
    if (lambda < 0.0) throw std::domain_error("weighted_norm: lambda must be >= 0");
    if (tail_ && lambda >= tail_->nu.real())
        throw std::domain_error("weighted_norm: weight outruns the tail decay");

    // integral over [p, q] of pref e^{sigma (xi - mid)} R(xi - mid) e^{2 lambda |xi|} dxi,
    // split at zero so the weight is a single exponential on each side.
    auto weighted_piece = [&](const Poly& R, double p, double q, Complex sigma,
                              Complex pref, double mid) -> Complex {
        Complex out(0.0);
        auto part = [&](double lo, double hi, double sgn) {
            if (hi - lo <= kTol) return;
            const double extra = std::exp(2.0 * lambda * sgn * mid);
            out += pref * extra * exp_integral(R, lo - mid, hi - mid, sigma + 2.0 * lambda * sgn);
        };
        part(p, std::min(q, 0.0), -1.0);
        part(std::max(p, 0.0), q, +1.0);
        return out;
    };

    double acc = 0.0;
    for (const auto& a : atoms_) {
        for (const auto& b : atoms_) {
            const double p = std::max(a.lo, b.lo), q = std::min(a.hi, b.hi);
            if (q - p <= kTol) continue;
            const double mid = 0.5 * (p + q);
            const Complex sigma = a.mu + std::conj(b.mu);
            const Complex pref =
                std::exp(a.mu * (mid - a.lo) + std::conj(b.mu) * (mid - b.lo));
            const Poly R = a.poly.shifted(mid - a.lo) * b.poly.shifted(mid - b.lo).conjugated();
            acc += weighted_piece(R, p, q, sigma, pref, mid).real();
        }
    }
    if (tail_) {
        const auto& t = *tail_;
        for (const auto& b : atoms_) {
            const double p = b.lo, q = std::min(b.hi, t.cutoff);
            if (q - p <= kTol) continue;
            const double mid = 0.5 * (p + q);
            const Complex sigma = t.nu + std::conj(b.mu);
            const Complex pref =
                t.amp * std::exp(t.nu * (mid - t.cutoff) + std::conj(b.mu) * (mid - b.lo));
            const Poly R = b.poly.shifted(mid - b.lo).conjugated();
            // twice the real part covers atom x tail as well
            acc += 2.0 * weighted_piece(R, p, q, sigma, pref, mid).real();
        }
        // tail x tail over (-inf, cutoff], split at zero when the cutoff is positive
        const double two_re_nu = 2.0 * t.nu.real();
        const double m = t.cutoff;
        const double m0 = std::min(m, 0.0);
        const double v0_sq = std::norm(t.amp) * std::exp(two_re_nu * (m0 - m));
        acc += v0_sq * std::exp(-2.0 * lambda * m0) / (two_re_nu - 2.0 * lambda);
        if (m > 0.0)
            acc += std::norm(t.amp) * std::exp(-two_re_nu * m) *
                   std::expm1((two_re_nu + 2.0 * lambda) * m) / (two_re_nu + 2.0 * lambda);
    }
    return std::sqrt(std::max(0.0, acc));
}

}  // namespace zeroflip
