#include "zeroflip/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "zeroflip/quadrature.hpp"

namespace zeroflip {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
const double kRoot2Pi = std::sqrt(2.0 * M_PI);

void check_admissible(const FlipPoint& a, const FlipPoint& b) {
    if (std::abs(a.value() - b.value()) > 0.5 * std::abs(b.value()) * (1.0 + 1e-12))
        throw std::domain_error("pair bound: need |a - b| <= |b| / 2");
}

// 1 - (1 - e^{-y})/y * e^{-z} for y, z >= 0, safe against cancellation.
double one_minus_phi_exp(double y, double z) {
    if (std::max(y, z) < 1e-4) {
        return z + y / 2.0 - z * z / 2.0 - y * z / 2.0 - y * y / 6.0 + z * z * z / 6.0 +
               y * z * z / 4.0 + y * y * z / 6.0 + y * y * y / 24.0;
    }
    const double phi = (y == 0.0) ? 1.0 : -std::expm1(-y) / y;
    return 1.0 - phi * std::exp(-z);
}

}  // namespace

const char* region_name(Region r) {
    switch (r) {
        case Region::stable: return "stable";
        case Region::unstable: return "unstable";
        default: return "boundary";
    }
}

RegionInfo region_classify(const FlipPoint& a, double L) {
    if (!(L > 0.0)) throw std::invalid_argument("region_classify: L must be > 0");
    const double band = 1e-12 * std::max(a.beta, 2.0 * L);
    Region r;
    if (std::abs(a.beta - 2.0 * L) <= band)
        r = Region::boundary;
    else
        r = (a.beta > 2.0 * L) ? Region::unstable : Region::stable;
    return {r, a.beta, 1.0 / (2.0 * L), 1.0 / (2.0 * L)};
}

BoundReport::BoundReport()
    : re_a(kNaN), im_a(kNaN), re_b(kNaN), im_b(kNaN), L(kNaN), lambda(kNaN) {}

double stable_regime_constant(const FlipPoint& a, double L) {
    const double s = a.im;
    const double delta = std::max(0.0, 2.0 * L - a.beta);
    const double term1 = std::sqrt(2.0 * L) * std::sqrt(-std::expm1(-2.0 * a.beta * s));
    const double r2 = delta * one_minus_phi_exp(2.0 * delta * s, 2.0 * a.beta * s);
    return std::sqrt(2.0 * s) * (term1 + std::sqrt(std::max(0.0, r2)));
}

SelfFlipBounds self_flip_bound(const PWFunction& f, const FlipPoint& a) {
    const double L = f.bandlimit();
    const double n = f.l2_norm();
    const double nsq = n * n;
    const double s = a.im;
    const RegionInfo info = region_classify(a, L);
    const StabilityReport d = self_distance(f, a);

    SelfFlipBounds out;
    out.region = info.region;
    BoundReport base;
    base.re_a = a.re;
    base.im_a = s;
    base.L = L;
    base.regime = region_name(info.region);

    // The boundary beta = 2L belongs to the "<=" case.
    if (info.region == Region::unstable) {
        base.lhs = std::abs(d.distance_sq - 2.0 * nsq);
        out.coarse = base;
        out.coarse.name = "self_flip_coarse";
        out.coarse.rhs = 30.0 * L * s * nsq;
        out.sharp = base;
        out.sharp.name = "self_flip_sharp";
        out.sharp.rhs = 2.0 * (2.0 * std::sqrt(2.0 * L * s * std::sinh(2.0 * L * s)) *
                               std::exp(L * s) * std::exp(-a.beta * s)) *
                        nsq;
    } else {
        const double w2 = omega2(f.spectrum(), a.beta);
        base.lhs = d.distance_sq;
        out.coarse = base;
        out.coarse.name = "self_flip_coarse";
        out.coarse.rhs = 2.0 * w2 * n + 8.0 * std::sqrt(L * s) * nsq;
        out.sharp = base;
        out.sharp.name = "self_flip_sharp";
        out.sharp.rhs = 2.0 * w2 * n + 2.0 * stable_regime_constant(a, L) * nsq;
    }
    out.coarse.margin = out.coarse.rhs - out.coarse.lhs;
    out.sharp.margin = out.sharp.rhs - out.sharp.lhs;
    return out;
}

BoundReport strip_growth_bound(const PWFunction& f, const FlipPoint& a, double lambda) {
    if (!(lambda > 0.0 && lambda < a.im))
        throw std::domain_error("strip_growth_bound: need 0 < lambda < Im a");
    const double n = f.l2_norm();
    BoundReport r;
    r.name = "strip_growth";
    r.regime = region_name(region_classify(a, f.bandlimit()).region);
    r.re_a = a.re;
    r.im_a = a.im;
    r.L = f.bandlimit();
    r.lambda = lambda;
    r.lhs = strip_norm(f, a, lambda);
    const double asq = a.re * a.re + a.im * a.im;
    r.rhs = (1.0 + 2.0 * a.im / (a.im - lambda)) * std::exp(2.0 * a.im * a.im / asq) *
            std::exp(f.bandlimit() * lambda) * n;
    r.margin = r.rhs - r.lhs;
    return r;
}

KernelDiffConstant kernel_diff_constant(const FlipPoint& a, const FlipPoint& b) {
    check_admissible(a, b);
    const double d_im = std::abs(a.im - b.im);
    const double d_re = std::abs(a.re - b.re);
    const double exact =
        kRoot2Pi * d_im / b.im +
        1.5 * kRoot2Pi * b.im * (d_re / (b.im * b.im) + std::abs(1.0 / a.im - 1.0 / b.im));
    const double coarse = 14.0 * std::abs(a.value() - b.value()) / b.im;
    return {exact, coarse};
}

BoundReport kernel_diff_bound(const PWFunction& f, const FlipPoint& a, const FlipPoint& b) {
    const KernelDiffConstant cab = kernel_diff_constant(a, b);
    const double n = f.l2_norm();
    const ExpPolySpectrum Ka = gamma_convolution(f, a);
    const ExpPolySpectrum Kb = gamma_convolution(f, b);
    const double lhs_sq = a.im * a.im * Ka.norm_sq() + b.im * b.im * Kb.norm_sq() -
                          2.0 * a.im * b.im * inner_product(Ka, Kb).real();

    BoundReport r;
    r.name = "kernel_diff";
    r.re_a = a.re;
    r.im_a = a.im;
    r.re_b = b.re;
    r.im_b = b.im;
    r.L = f.bandlimit();
    r.lhs = std::sqrt(std::max(0.0, lhs_sq));
    r.rhs = cab.exact * n + kRoot2Pi * omega2(f.spectrum(), std::abs(a.beta - b.beta));
    r.margin = r.rhs - r.lhs;
    return r;
}

double tail_kernel_constant(const FlipPoint& b, double L) {
    const double s = b.im;
    const double bracket = 2.0 * L + 1.0 + std::expm1(-4.0 * L * s) / (2.0 * s);
    return std::sqrt(std::max(0.0, bracket) / (2.0 * s));
}

BoundReport tail_kernel_bound(const PWFunction& f, const FlipPoint& b, double rel_tol) {
    const double s = b.im;
    const auto& F = f.spectrum();
    const double lo = F.support_lo(), hi = F.support_hi();
    const double n = f.l2_norm();

    // Outer nodes per spectral piece, dense enough that the strip-wise
    // accumulation of phi(u) = int_u^hi e^{-s y} |F(y)| dy stays exact to
    // quadrature precision; validated by one refinement doubling.
    auto evaluate = [&](int subdivide) -> double {
        const auto& rule = gauss_legendre_32();
        std::vector<double> nodes, weights;
        const auto& bp = F.breakpoints();
        for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
            const int parts =
                subdivide * std::max(2, static_cast<int>(std::ceil((bp[i + 1] - bp[i]) * (2.0 + s))));
            const double w = (bp[i + 1] - bp[i]) / parts;
            for (int p = 0; p < parts; ++p) {
                const double plo = bp[i] + p * w;
                for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
                    nodes.push_back(plo + 0.5 * w * (1.0 + rule.nodes[k]));
                    weights.push_back(0.5 * w * rule.weights[k]);
                }
            }
        }
        auto decay_abs = [&](double y) { return std::exp(-s * y) * std::abs(F(y)); };
        // phi at the nodes, accumulated right to left with one GL pass per strip.
        std::vector<double> phi(nodes.size());
        auto strip = [&](double p, double q) {
            double acc = 0.0;
            for (std::size_t k = 0; k < rule.nodes.size(); ++k)
                acc += rule.weights[k] * decay_abs(0.5 * (p + q) + 0.5 * (q - p) * rule.nodes[k]);
            return 0.5 * (q - p) * acc;
        };
        double running = 0.0, prev = hi;
        for (std::size_t i = nodes.size(); i-- > 0;) {
            running += strip(nodes[i], prev);
            prev = nodes[i];
            phi[i] = running;
        }
        const double phi_full = running + strip(lo, prev);
        double outer = phi_full * phi_full * std::exp(2.0 * s * lo) / (2.0 * s);
        for (std::size_t i = 0; i < nodes.size(); ++i)
            outer += weights[i] * std::exp(2.0 * s * nodes[i]) * phi[i] * phi[i];
        return outer;
    };

    double coarse = evaluate(1), fine = evaluate(2);
    if (std::abs(fine - coarse) > rel_tol * std::max(1e-300, std::abs(fine))) {
        coarse = fine;
        fine = evaluate(4);
        if (std::abs(fine - coarse) > rel_tol * std::max(1e-300, std::abs(fine)))
            throw ToleranceError("tail_kernel_bound: outer quadrature stalled", Complex(fine),
                                 std::abs(fine - coarse));
    }

    BoundReport r;
    r.name = "tail_kernel";
    r.re_b = b.re;
    r.im_b = b.im;
    r.L = f.bandlimit();
    r.lhs = std::sqrt(std::max(0.0, fine));
    r.rhs = n * tail_kernel_constant(b, f.bandlimit());
    r.margin = r.rhs - r.lhs;
    return r;
}

PairConstants pair_constants(const FlipPoint& a, const FlipPoint& b, double L) {
    const double cb = tail_kernel_constant(b, L);
    const double cab = kernel_diff_constant(a, b).exact;
    PairConstants out;
    out.c1 = 2.0 + 2.0 * kRoot2Pi + (2.0 + 4.0 * kRoot2Pi) * b.im * cb;
    out.c2 = 2.0 * cab + 4.0 * b.im * cb * cab;
    return out;
}

BoundReport pair_flip_bound(const PWFunction& f, const FlipPoint& a, const FlipPoint& b) {
    const PairConstants k = pair_constants(a, b, f.bandlimit());
    const double n = f.l2_norm();
    BoundReport r;
    r.name = "pair_flip";
    r.re_a = a.re;
    r.im_a = a.im;
    r.re_b = b.re;
    r.im_b = b.im;
    r.L = f.bandlimit();
    r.lhs = pair_distance(f, a, b).distance_sq;
    r.rhs = k.c1 * omega2(f.spectrum(), std::abs(b.beta - a.beta)) * n + k.c2 * n * n;
    r.margin = r.rhs - r.lhs;
    return r;
}

}  // namespace zeroflip
