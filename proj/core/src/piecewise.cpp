#include "zeroflip/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zeroflip/exp_moment.hpp"

namespace zeroflip {

namespace {

void append_merged(std::vector<double>& pts, double v) {
    if (pts.empty() || v - pts.back() > PiecewisePolySpectrum::kMergeTol) pts.push_back(v);
}

}  // namespace

PiecewisePolySpectrum::PiecewisePolySpectrum(std::vector<double> breakpoints,
                                             std::vector<Poly> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (pieces_.empty()) {
        breakpoints_.clear();
        return;
    }
    if (breakpoints_.size() != pieces_.size() + 1)
        throw std::invalid_argument("piecewise: breakpoints must be pieces+1");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] < breakpoints_[i + 1]))
            throw std::invalid_argument("piecewise: breakpoints must increase");
}

PiecewisePolySpectrum PiecewisePolySpectrum::indicator(double lo, double hi, Complex height) {
    if (!(lo < hi)) throw std::invalid_argument("indicator: lo must be < hi");
    return PiecewisePolySpectrum({lo, hi}, {Poly::constant(height)});
}

int PiecewisePolySpectrum::max_degree() const {
    int d = 0;
    for (const auto& p : pieces_) d = std::max(d, p.degree());
    return d;
}

int PiecewisePolySpectrum::piece_index(double xi) const {
    if (empty() || xi < breakpoints_.front() || xi > breakpoints_.back()) return -1;
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), xi);
    int idx = static_cast<int>(it - breakpoints_.begin()) - 1;
    if (idx >= static_cast<int>(pieces_.size())) idx = static_cast<int>(pieces_.size()) - 1;
    if (idx < 0) idx = 0;
    return idx;
}

Complex PiecewisePolySpectrum::operator()(double xi) const {
    const int i = piece_index(xi);
    if (i < 0) return Complex(0.0);
    return pieces_[i](xi - breakpoints_[i]);
}

PiecewisePolySpectrum PiecewisePolySpectrum::translated(double alpha) const {
    std::vector<double> bp = breakpoints_;
    for (auto& b : bp) b += alpha;
    return PiecewisePolySpectrum(std::move(bp), pieces_);
}

PiecewisePolySpectrum PiecewisePolySpectrum::reflected() const {
    if (empty()) return {};
    const std::size_t n = pieces_.size();
    std::vector<double> bp(breakpoints_.size());
    std::vector<Poly> ps(n);
    for (std::size_t i = 0; i < breakpoints_.size(); ++i)
        bp[i] = -breakpoints_[breakpoints_.size() - 1 - i];
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = n - 1 - i;
        const double width = breakpoints_[j + 1] - breakpoints_[j];
        // On the mirrored interval, u -> width - u in the old local frame.
        ps[i] = pieces_[j].shifted(width).reflected();
    }
    return PiecewisePolySpectrum(std::move(bp), std::move(ps));
}

PiecewisePolySpectrum PiecewisePolySpectrum::conjugated() const {
    std::vector<Poly> ps;
    ps.reserve(pieces_.size());
    for (const auto& p : pieces_) ps.push_back(p.conjugated());
    return PiecewisePolySpectrum(breakpoints_, std::move(ps));
}

PiecewisePolySpectrum PiecewisePolySpectrum::derivative() const {
    std::vector<Poly> ps;
    ps.reserve(pieces_.size());
    for (const auto& p : pieces_) ps.push_back(p.derivative());
    return PiecewisePolySpectrum(breakpoints_, std::move(ps));
}

PiecewisePolySpectrum PiecewisePolySpectrum::scaled(Complex s) const {
    std::vector<Poly> ps;
    ps.reserve(pieces_.size());
    for (const auto& p : pieces_) ps.push_back(p.scaled(s));
    return PiecewisePolySpectrum(breakpoints_, std::move(ps));
}

std::vector<double> merged_partition(const std::vector<double>& a, const std::vector<double>& b,
                                     double lo, double hi) {
    std::vector<double> all;
    all.reserve(a.size() + b.size() + 2);
    all.push_back(lo);
    for (double v : a)
        if (v > lo + PiecewisePolySpectrum::kMergeTol && v < hi - PiecewisePolySpectrum::kMergeTol)
            all.push_back(v);
    for (double v : b)
        if (v > lo + PiecewisePolySpectrum::kMergeTol && v < hi - PiecewisePolySpectrum::kMergeTol)
            all.push_back(v);
    all.push_back(hi);
    std::sort(all.begin(), all.end());
    std::vector<double> out;
    out.reserve(all.size());
    for (double v : all) append_merged(out, v);
    if (out.size() < 2) out = {lo, hi};
    return out;
}

PiecewisePolySpectrum PiecewisePolySpectrum::operator+(const PiecewisePolySpectrum& o) const {
    if (empty()) return o;
    if (o.empty()) return *this;
    const double lo = std::min(support_lo(), o.support_lo());
    const double hi = std::max(support_hi(), o.support_hi());
    std::vector<double> bp = merged_partition(breakpoints_, o.breakpoints_, lo, hi);
    std::vector<Poly> ps(bp.size() - 1);
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
        const double mid = 0.5 * (bp[k] + bp[k + 1]);
        Poly acc;
        const int i = piece_index(mid);
        if (i >= 0) acc = acc + pieces_[i].shifted(bp[k] - breakpoints_[i]);
        const int j = o.piece_index(mid);
        if (j >= 0) acc = acc + o.pieces_[j].shifted(bp[k] - o.breakpoints_[j]);
        ps[k] = std::move(acc);
    }
    return PiecewisePolySpectrum(std::move(bp), std::move(ps));
}

PiecewisePolySpectrum PiecewisePolySpectrum::operator-(const PiecewisePolySpectrum& o) const {
    return *this + o.scaled(Complex(-1.0));
}

PiecewisePolySpectrum PiecewisePolySpectrum::operator*(const PiecewisePolySpectrum& o) const {
    if (empty() || o.empty()) return {};
    const double lo = std::max(support_lo(), o.support_lo());
    const double hi = std::min(support_hi(), o.support_hi());
    if (!(lo < hi - kMergeTol)) return {};
    std::vector<double> bp = merged_partition(breakpoints_, o.breakpoints_, lo, hi);
    std::vector<Poly> ps(bp.size() - 1);
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
        const double mid = 0.5 * (bp[k] + bp[k + 1]);
        const int i = piece_index(mid), j = o.piece_index(mid);
        if (i >= 0 && j >= 0)
            ps[k] = pieces_[i].shifted(bp[k] - breakpoints_[i]) *
                    o.pieces_[j].shifted(bp[k] - o.breakpoints_[j]);
    }
    return PiecewisePolySpectrum(std::move(bp), std::move(ps));
}

PiecewisePolySpectrum PiecewisePolySpectrum::convolve_indicator(double c) const {
    if (!(c > 0.0)) throw std::invalid_argument("convolve_indicator: c must be > 0");
    if (empty()) return {};
    // Cumulative primitive H with H(support_lo) = 0.
    std::vector<Poly> anti(pieces_.size());
    std::vector<Complex> cum(pieces_.size() + 1, Complex(0.0));
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        anti[i] = pieces_[i].antiderivative();
        cum[i + 1] = cum[i] + anti[i](breakpoints_[i + 1] - breakpoints_[i]);
    }
    const Complex total = cum.back();

    // H evaluated "symbolically" on [lo, hi] at argument (u + lo + off).
    auto h_piece = [&](double lo, double hi, double off) -> std::pair<Poly, Complex> {
        const double mid = 0.5 * (lo + hi) + off;
        if (mid <= breakpoints_.front()) return {Poly(), Complex(0.0)};
        if (mid >= breakpoints_.back()) return {Poly(), total};
        const int i = piece_index(mid);
        return {anti[i].shifted(lo + off - breakpoints_[i]), cum[i]};
    };

    std::vector<double> shifted_lo, shifted_hi;
    for (double b : breakpoints_) {
        shifted_lo.push_back(b - c);
        shifted_hi.push_back(b + c);
    }
    const double lo = breakpoints_.front() - c, hi = breakpoints_.back() + c;
    std::vector<double> bp = merged_partition(shifted_lo, shifted_hi, lo, hi);
    std::vector<Poly> ps(bp.size() - 1);
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
        auto [p_plus, c_plus] = h_piece(bp[k], bp[k + 1], c);
        auto [p_minus, c_minus] = h_piece(bp[k], bp[k + 1], -c);
        ps[k] = (p_plus - p_minus) + Poly::constant(c_plus - c_minus);
    }
    return PiecewisePolySpectrum(std::move(bp), std::move(ps));
}

Complex PiecewisePolySpectrum::integrate() const {
    Complex acc(0.0);
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        acc += pieces_[i].integrate(0.0, breakpoints_[i + 1] - breakpoints_[i]);
    return acc;
}

double PiecewisePolySpectrum::norm_sq() const {
    return std::max(0.0, inner_product(*this, *this).real());
}

double PiecewisePolySpectrum::norm() const { return std::sqrt(norm_sq()); }

Complex inner_product(const PiecewisePolySpectrum& F, const PiecewisePolySpectrum& G) {
    if (F.empty() || G.empty()) return Complex(0.0);
    const double lo = std::max(F.support_lo(), G.support_lo());
    const double hi = std::min(F.support_hi(), G.support_hi());
    if (!(lo < hi - PiecewisePolySpectrum::kMergeTol)) return Complex(0.0);
    std::vector<double> bp = merged_partition(F.breakpoints_, G.breakpoints_, lo, hi);
    Complex acc(0.0);
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
        const double mid = 0.5 * (bp[k] + bp[k + 1]);
        const double h = 0.5 * (bp[k + 1] - bp[k]);
        const int i = F.piece_index(mid), j = G.piece_index(mid);
        if (i < 0 || j < 0) continue;
        const Poly pf = F.pieces_[i].shifted(mid - F.breakpoints_[i]);
        const Poly pg = G.pieces_[j].shifted(mid - G.breakpoints_[j]).conjugated();
        acc += (pf * pg).integrate_sym(h);
    }
    return acc;
}

double weighted_norm(const PiecewisePolySpectrum& F, double lambda) {
    if (lambda < 0.0) throw std::domain_error("weighted_norm: lambda must be >= 0");
    if (F.empty()) return 0.0;
    std::vector<double> zero = {0.0};
    std::vector<double> bp =
        merged_partition(F.breakpoints(), zero, F.support_lo(), F.support_hi());
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
        const double mid = 0.5 * (bp[k] + bp[k + 1]);
        const double h = 0.5 * (bp[k + 1] - bp[k]);
        const auto& pieces = F.pieces();
        const auto& b = F.breakpoints();
        auto it = std::upper_bound(b.begin(), b.end(), mid);
        int i = static_cast<int>(it - b.begin()) - 1;
        i = std::clamp(i, 0, static_cast<int>(pieces.size()) - 1);
        const Poly p = pieces[i].shifted(mid - b[i]);
        const Poly mod2 = p * p.conjugated();
        // weight e^{2 lambda |xi|}: on xi >= 0 this is e^{iwt} with w = -2i lambda
        const Complex w = (mid >= 0.0) ? Complex(0.0, -2.0 * lambda) : Complex(0.0, 2.0 * lambda);
        const Complex scale =
            std::exp(Complex(2.0 * lambda * std::abs(mid), 0.0));  // absorbed midpoint weight
        acc += (scale * exp_moment(mod2, -h, h, w)).real();
    }
    return std::sqrt(std::max(0.0, acc));
}

namespace {

// || tau_eta F - F ||^2 = 2 ||F||^2 - 2 Re <tau_eta F, F>, exact per eta.
double shift_dist_sq(const PiecewisePolySpectrum& F, double norm_sq, double eta) {
    const Complex corr = inner_product(F.translated(eta), F);
    return std::max(0.0, 2.0 * norm_sq - 2.0 * corr.real());
}

}  // namespace

double omega2(const PiecewisePolySpectrum& F, double h) {
    if (h < 0.0) throw std::domain_error("omega2: h must be >= 0");
    if (h == 0.0 || F.empty()) return 0.0;
    const double nsq = F.norm_sq();
    auto g = [&](double eta) { return shift_dist_sq(F, nsq, eta); };

    constexpr int kGrid = 64;
    double best = 0.0;
    int best_i = 0;
    std::vector<double> vals(kGrid);
    for (int i = 0; i < kGrid; ++i) {
        const double eta = h * double(i) / double(kGrid - 1);
        vals[i] = g(eta);
        if (vals[i] > best) {
            best = vals[i];
            best_i = i;
        }
    }
    // Golden-section sharpening inside the bracketing grid cells.
    double lo = h * double(std::max(0, best_i - 1)) / double(kGrid - 1);
    double hi = h * double(std::min(kGrid - 1, best_i + 1)) / double(kGrid - 1);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = g(x1), f2 = g(x2);
    while (hi - lo > 1e-8 * h) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = g(x1);
        }
        best = std::max({best, f1, f2});
    }
    return std::sqrt(best);
}

}  // namespace zeroflip
