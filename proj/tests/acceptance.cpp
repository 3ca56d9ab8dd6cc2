// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "zeroflip/bounds.hpp"
#include "zeroflip/harness.hpp"
#include "zeroflip/quadrature.hpp"

using namespace zeroflip;

namespace {

int g_failures = 0;

void report(int idx, const char* label, bool pass, const std::string& detail, double seconds) {
    std::printf("%s  %d. %s (%s) [%.1f s]\n", pass ? "PASS" : "FAIL", idx, label, detail.c_str(),
                seconds);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double elapsed(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

// --- 1. unimodularity & norm preservation ------------------------------------

void criterion_norm_preservation() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(derive_seed(0xACCE5501, "norms"));
    double worst_spec = 0.0, worst_time = 0.0;
    bool ok = true;
    for (int i = 0; i < 200; ++i) {
        const PWFunction f = draw_function(rng);
        const FlipPoint a = draw_flip_point(rng);
        const double n = f.l2_norm();
        worst_spec = std::max(worst_spec, std::abs(flip_spectrum(f, a).norm() - n) / n);
        const double tn = std::sqrt(std::max(0.0, time_oracle_inner(f, a, a, 1e-8).real()));
        worst_time = std::max(worst_time, std::abs(tn - n) / n);
    }
    const double secs = elapsed(start);
    ok = worst_spec < 1e-8 && worst_time < 1e-6 && secs < 60.0;
    report(1, "unimodularity and norm preservation under flipping", ok,
           fmt("200 draws, spectral dev %.2e < 1e-8, time-quadrature dev %.2e < 1e-6", worst_spec,
               worst_time),
           secs);
}

// --- 2. oracle equivalence ----------------------------------------------------

void criterion_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(derive_seed(0xACCE5502, "parseval"));
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const PWFunction f = draw_function(rng);
        const FlipPoint a = draw_flip_point(rng, 0.15, 1.1);
        const FlipPoint b = draw_flip_point(rng, 0.15, 1.1);
        const PairInnerResult pi = pair_inner(f, a, b);
        const Complex av = a.value(), bv = b.value();
        const Complex corrected = pi.total * (av * std::conj(bv)) / (std::conj(av) * bv);
        const Complex oracle = time_oracle_inner(f, a, b, 1e-8);
        const double nsq = f.l2_norm() * f.l2_norm();
        worst = std::max(worst, std::abs(corrected - oracle) / std::max(nsq, std::abs(oracle)));
    }
    const double secs = elapsed(start);
    report(2, "spectral pair inner products match the time-domain oracle", worst < 1e-6 && secs < 120.0,
           fmt("100 draws, worst relative gap %.2e < 1e-6", worst), secs);
}

// --- 3. bandlimit preservation at genuine zeros --------------------------------

void criterion_bandlimit() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(derive_seed(0xACCE5503, "bandlimit"));
    double worst_window = 0.0;   // sup outside [-L - 1e-6, L + 1e-6], tiny-shift zeros
    double worst_shifted = 0.0;  // sup outside the shifted band, generic zeros
    for (int i = 0; i < 50; ++i) {
        // Genuine zeros far from the origin keep the spectral shift beta_a
        // below the window slack, so the band window applies verbatim.
        const double sign = rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
        const FlipPoint a(sign * rng.uniform(900.0, 1400.0), rng.uniform(0.05, 0.3));
        ZeroProductSpec s;
        s.zeros = {a.value()};
        s.m = 3 + (i % 2);
        s.c = rng.uniform(0.7, 1.4) / s.m;
        const PWFunction f = PWFunction::build(s);
        const double L = f.bandlimit();
        const ExpPolySpectrum g = flip_spectrum(f, a);
        double sup = 0.0;
        for (int k = 0; k <= 400; ++k) {
            const double t = double(k) / 400.0;
            sup = std::max(sup, std::abs(g(-L - 1e-6 - 3.0 * t)));
            sup = std::max(sup, std::abs(g(L + 1e-6 + 3.0 * t)));
        }
        worst_window = std::max(worst_window, sup / f.l2_norm());

        // Generic planted zero: the same statement in the beta-shifted frame.
        const FlipPoint b(rng.uniform(-1.2, 1.2), rng.uniform(0.3, 1.0));
        ZeroProductSpec s2;
        s2.zeros = {b.value()};
        s2.m = 3;
        s2.c = rng.uniform(0.7, 1.4) / 3.0;
        const PWFunction f2 = PWFunction::build(s2);
        const double L2 = f2.bandlimit();
        const ExpPolySpectrum g2 = flip_spectrum(f2, b);
        double sup2 = std::abs(g2.tail() ? g2.tail()->amp : Complex(0.0));
        for (int k = 0; k <= 400; ++k) {
            const double t = double(k) / 400.0;
            sup2 = std::max(sup2, std::abs(g2(b.beta - L2 - 1e-6 - 3.0 * t)));
            sup2 = std::max(sup2, std::abs(g2(b.beta + L2 + 1e-6 + 3.0 * t)));
        }
        worst_shifted = std::max(worst_shifted, sup2 / f2.l2_norm());
    }
    report(3, "flips at genuine zeros stay bandlimited", worst_window < 1e-8 && worst_shifted < 1e-8,
           fmt("50 draws, sup outside the band %.2e < 1e-8; shifted-frame sup %.2e < 1e-8",
               worst_window, worst_shifted),
           elapsed(start));
}

// --- 4. self-flip bounds in both regimes ---------------------------------------

void criterion_self_flip() {
    const auto start = std::chrono::steady_clock::now();
    // antipodal regime: unit sinc, a = 1e-3 i, beta = 2000
    const PWFunction sinc_f = realize({"sinc", std::nullopt});
    const FlipPoint deep(0.0, 1e-3);
    const double d = self_distance(sinc_f, deep).distance_sq;
    const SelfFlipBounds deep_bounds = self_flip_bound(sinc_f, deep);
    bool ok = d >= 2.0 - 0.03 && d <= 2.0 + 0.03 && deep_bounds.sharp.margin >= 0.0;

    Rng rng(derive_seed(0xACCE5504, "self"));
    double worst = 1e300;
    for (int i = 0; i < 100; ++i) {
        const PWFunction f = draw_function(rng);
        const FlipPoint a = draw_stable_point(rng, f.bandlimit());
        const SelfFlipBounds b = self_flip_bound(f, a);
        const double nsq = f.l2_norm() * f.l2_norm();
        worst = std::min({worst, b.coarse.margin / nsq, b.sharp.margin / nsq});
    }
    ok = ok && worst >= -1e-9;
    report(4, "self-flip distance bounds hold in both regimes", ok,
           fmt("antipodal distance %.4f in [1.97, 2.03]; 100 draws, worst margin %.2e >= -1e-9", d,
               worst),
           elapsed(start));
}

// --- 5. strip growth ------------------------------------------------------------

void criterion_strip_growth() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(derive_seed(0xACCE5505, "strip"));
    double worst = 1e300;
    for (int i = 0; i < 50; ++i) {
        const PWFunction f = draw_function(rng, 1);
        const FlipPoint a = draw_flip_point(rng, 0.3, 1.2);
        for (double frac : {0.25, 0.5, 0.75}) {
            const BoundReport r = strip_growth_bound(f, a, frac * a.im);
            worst = std::min(worst, r.margin / r.rhs);
        }
    }
    report(5, "strip norms stay below the growth bound", worst >= -1e-6,
           fmt("50 draws x 3 widths, worst relative margin %.2e >= -1e-6", worst), elapsed(start));
}

// --- 6. kernel-difference and tail-kernel estimates -----------------------------

void criterion_kernel_estimates() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(derive_seed(0xACCE5506, "kernels"));
    double worst_diff = 1e300, worst_tail = 1e300, worst_const = 1e300;
    for (int i = 0; i < 100; ++i) {
        const PWFunction f = draw_function(rng);
        auto [a, b] = draw_admissible_pair(rng);
        const BoundReport kd = kernel_diff_bound(f, a, b);
        worst_diff = std::min(worst_diff, kd.margin / std::max(kd.rhs, f.l2_norm()));
        const BoundReport tk = tail_kernel_bound(f, b);
        worst_tail = std::min(worst_tail, tk.margin / tk.rhs);
        const KernelDiffConstant c = kernel_diff_constant(a, b);
        worst_const = std::min(worst_const, (c.coarse - c.exact) / std::max(c.coarse, 1e-300));
    }
    const bool ok = worst_diff >= -1e-9 && worst_tail >= -1e-9 && worst_const >= 0.0;
    report(6, "kernel-difference and tail-kernel estimates hold", ok,
           fmt("100 draws, margins %.2e / %.2e >= -1e-9, constant slack %.2e >= 0", worst_diff,
               worst_tail, worst_const),
           elapsed(start));
}

// --- 7. pair bound convergence along a ray ---------------------------------------

void criterion_pair_convergence() {
    const auto start = std::chrono::steady_clock::now();
    const Complex zero(0.5, 0.8);
    ZeroProductSpec s;
    s.zeros = {zero};
    s.m = 3;
    s.c = 1.0 / 3.0;
    const PWFunction f = PWFunction::build(s);
    const Complex a_start = zero + 0.25 * std::abs(zero) * Complex(0.6, 0.8);
    const auto rows = convergence_study(f, FlipPoint(zero), a_start, 10);
    bool per_row = true;
    for (const auto& r : rows) per_row = per_row && r.distance_sq <= r.rhs;
    const double ratio = rows[10].rhs / rows[1].rhs;
    const bool decreasing = rows[10].distance_sq < rows[1].distance_sq;
    report(7, "pair distance collapses as the flip point reaches the zero",
           per_row && ratio < 0.01 && decreasing,
           fmt("bound holds on all 11 rows, rhs decay %.2e < 0.01, distance %.2e -> %.2e", ratio,
               rows[1].distance_sq, rows[10].distance_sq),
           elapsed(start));
}

// --- 8. shift-modulus closed form --------------------------------------------------

void criterion_omega2_closed_form() {
    const auto start = std::chrono::steady_clock::now();
    const double L = 1.0;
    const auto ind = PiecewisePolySpectrum::indicator(-L, L, 1.0);
    double worst = 0.0;
    for (int k = 1; k <= 20; ++k) {
        const double h = 2.0 * L * double(k) / 20.0;
        const double got = omega2(ind, h);
        worst = std::max(worst, std::abs(got - std::sqrt(2.0 * h)) / std::sqrt(2.0 * h));
    }
    report(8, "shift modulus of the indicator matches sqrt(2h)", worst < 1e-6,
           fmt("20 widths, worst relative error %.2e < 1e-6", worst), elapsed(start));
}

// --- 9. region dichotomy -------------------------------------------------------------

void criterion_region_dichotomy() {
    const auto start = std::chrono::steady_clock::now();
    const double L = 1.0;
    const auto rows = region_map(L, 64, 64);
    bool ok = rows.size() == 64 * 64;
    const double c = 1.0 / (2.0 * L);
    for (const auto& r : rows) {
        const Region direct = region_classify(FlipPoint(r.re_a, r.im_a), L).region;
        ok = ok && direct == r.region;
        const double d2 = r.re_a * r.re_a + (r.im_a - c) * (r.im_a - c);
        const double band = 1e-12 * std::max(1.0, c * c);
        if (std::abs(d2 - c * c) <= band)
            ok = ok && r.region == Region::boundary;
        else if (d2 < c * c)
            ok = ok && r.region == Region::unstable;
        else
            ok = ok && r.region == Region::stable;
    }
    report(9, "the dividing circle separates the sweep classes exactly", ok,
           fmt("64x64 grid, %g rows consistent with the circle test", double(rows.size())),
           elapsed(start));
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    criterion_norm_preservation();
    criterion_oracle_equivalence();
    criterion_bandlimit();
    criterion_self_flip();
    criterion_strip_growth();
    criterion_kernel_estimates();
    criterion_pair_convergence();
    criterion_omega2_closed_form();
    criterion_region_dichotomy();
    std::printf("%s: %d of 9 criteria passed [total %.1f s]\n",
                g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", 9 - g_failures,
                elapsed(start));
    return g_failures == 0 ? 0 : 1;
}
