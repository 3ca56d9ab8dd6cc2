#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "zeroflip/exp_poly.hpp"
#include "zeroflip/pwcore.hpp"

namespace zeroflip {

/// Unimodular multiplier of the flip at a, evaluated at real x:
///
///     u_a(x) = (a / conj a) * (x - conj a) / (x - a) * e^{i beta_a x}
///
/// |u_a(x)| = 1 on the real line, so flipping preserves |f| pointwise.
Complex multiplier(const FlipPoint& a, double x);

/// Meromorphic extension of the multiplier; has a pole at z = a.
Complex multiplier_ext(const FlipPoint& a, Complex z);

/// The flipped function at z. Throws std::domain_error when z hits the pole
/// at a while f(a) != 0; when a is a genuine zero of f the singularity is
/// removable and the limit value is returned.
Complex flip_time(const PWFunction& f, const FlipPoint& a, Complex z);

/// |f(a)| below this counts as a genuine zero (the exact dichotomy
/// f(a) = 0 / f(a) != 0 needs a tolerance in floating point).
double zero_detection_tol(const PWFunction& f, const FlipPoint& a);

/// One-sided exponential kernel whose transform produces the flip's integral
/// term: L1 mass sqrt(2 pi)/Im a and transform w -> 1/(a - w).
struct GammaKernel {
    double l1_norm;
    Complex pole;
    Complex transform(Complex w) const { return 1.0 / (pole - w); }
};

GammaKernel gamma_kernel(const FlipPoint& a);

/// The smoothed shifted spectrum (R gamma_a * tau_{beta_a} F) as an exact
/// exp-poly object: on each spectral piece the result splits into a
/// polynomial plus a multiple of e^{-ia x}, with a pure exponential tail of
/// amplitude proportional to f(a) below the support. Pieces short relative to
/// 1/|a| are represented by a machine-precision Taylor polynomial instead of
/// the cancelling exponential split.
ExpPolySpectrum gamma_convolution(const PWFunction& f, const FlipPoint& a);

/// Spectrum of the flipped function:
///   (a/conj a) [ tau_{beta_a} F - 2i Im a (R gamma_a * tau_{beta_a} F) ].
/// Supported on [beta_a - L, beta_a + L] plus the decaying left tail; the
/// tail amplitude vanishes exactly when a is a genuine zero of f.
ExpPolySpectrum flip_spectrum(const PWFunction& f, const FlipPoint& a);

/// Hardy-space norm of the flipped function on the strip |Im z| < lambda:
/// sup over a refining y-grid of the horizontal slice L2 norms, each slice by
/// truncated adaptive quadrature. Requires 0 < lambda < Im a.
double strip_norm(const PWFunction& f, const FlipPoint& a, double lambda);

/// A flip applied to a function, with the wide-band spectrum computed on
/// first use and shared between copies (single-assignment memoization).
class FlippedFunction {
  public:
    FlippedFunction(PWFunction base, FlipPoint point)
        : base_(std::move(base)), point_(point), cell_(std::make_shared<Cell>()) {}

    Complex operator()(Complex z) const { return flip_time(base_, point_, z); }
    const ExpPolySpectrum& spectrum() const;
    /// Flipping is unimodular on the line, so the norm is the base norm.
    double norm() const { return base_.l2_norm(); }

    const PWFunction& base() const { return base_; }
    const FlipPoint& point() const { return point_; }

  private:
    struct Cell {
        std::once_flag flag;
        std::optional<ExpPolySpectrum> value;
    };
    PWFunction base_;
    FlipPoint point_;
    std::shared_ptr<Cell> cell_;
};

}  // namespace zeroflip
