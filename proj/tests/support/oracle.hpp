#pragma once

// Test-only brute-force integration, deliberately independent of the
// closed-form kernels and Gauss-Legendre panels it is used to check:
// plain adaptive Simpson with interval bisection.

#include <cmath>
#include <complex>
#include <algorithm>
#include <vector>
#include <functional>

namespace oracle {

using Complex = std::complex<double>;

namespace detail {

inline Complex simpson(double a, double b, Complex fa, Complex fm, Complex fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
Complex adapt(const F& f, double a, double b, Complex fa, Complex fm, Complex fb,
              Complex whole, double eps, int depth) {
    const double lm = 0.5 * (a + 0.5 * (a + b));
    const double rm = 0.5 * (0.5 * (a + b) + b);
    const Complex flm = f(lm), frm = f(rm);
    const double m = 0.5 * (a + b);
    const Complex left = simpson(a, m, fa, flm, fm);
    const Complex right = simpson(m, b, fm, frm, fb);
    // The width floor stops roundoff-limited panels from splitting forever.
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps ||
        b - a < 1e-13 * (1.0 + std::abs(a) + std::abs(b)))
        return left + right + (left + right - whole) / 15.0;
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson over [a, b] with absolute tolerance eps.
template <typename F>
Complex integrate(const F& f, double a, double b, double eps = 1e-11, int depth = 20) {
    if (!(b > a)) return Complex(0.0);
    // Split into a few base panels so narrow features are not missed.
    const int base = 16;
    Complex acc(0.0);
    for (int i = 0; i < base; ++i) {
        const double lo = a + (b - a) * i / double(base);
        const double hi = a + (b - a) * (i + 1) / double(base);
        const Complex fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
        acc += detail::adapt(f, lo, hi, fa, fm, fb, detail::simpson(lo, hi, fa, fm, fb),
                             eps / base, depth);
    }
    return acc;
}

template <typename F>
double integrate_real(const F& f, double a, double b, double eps = 1e-11, int depth = 20) {
    return integrate([&](double x) { return Complex(f(x), 0.0); }, a, b, eps, depth).real();
}

/// Integrate with explicit splits at the integrand's kink or jump locations.
/// Segments are inset by a sliver so boundary samples never land on the
/// wrong side of a discontinuity.
template <typename F>
Complex integrate_split(const F& f, double a, double b, std::vector<double> knots,
                        double eps = 1e-11) {
    knots.push_back(a);
    knots.push_back(b);
    std::sort(knots.begin(), knots.end());
    Complex acc(0.0);
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        double lo = std::max(a, knots[i]), hi = std::min(b, knots[i + 1]);
        const double inset = 1e-12 * (1.0 + std::abs(lo) + std::abs(hi));
        lo += inset;
        hi -= inset;
        if (hi > lo) acc += integrate(f, lo, hi, eps / double(knots.size()));
    }
    return acc;
}

}  // namespace oracle
