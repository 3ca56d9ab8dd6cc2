#pragma once

#include <optional>
#include <vector>

#include "zeroflip/piecewise.hpp"

namespace zeroflip {

/// A point of the open upper half-plane at which a zero is flipped across the
/// real axis. beta is the spectral shift 2 Im a / |a|^2 produced by the
/// flip's modulation factor.
struct FlipPoint {
    FlipPoint(double re_, double im_);
    explicit FlipPoint(Complex a) : FlipPoint(a.real(), a.imag()) {}

    double re;
    double im;    // > 0, enforced at construction
    double beta;  // 2 im / (re^2 + im^2)

    Complex value() const { return {re, im}; }
    Complex conj_value() const { return {re, -im}; }
};

/// Recipe for a bandlimited test function with prescribed zeros:
///
///     f(z) = amplitude * prod_k (z - zeros[k]) * (sin(c z) / (c z))^m
///
/// The total bandwidth is L = m * c. When zeros are present, m must exceed
/// their count by at least 2: that keeps |f| = O(|x|^-2) on the line and the
/// spectrum smooth enough for the zero factors to act as derivative operators.
/// An absent amplitude means "normalize to unit L2 norm".
struct ZeroProductSpec {
    std::vector<Complex> zeros;
    int m = 1;
    double c = 1.0;
    std::optional<Complex> amplitude;

    double bandlimit() const { return m * c; }
    /// Throws std::invalid_argument when the constraints fail.
    void validate() const;
};

/// A Paley-Wiener function represented by its exact piecewise polynomial
/// spectrum on [-L, L]. Immutable after construction; all evaluation is pure.
class PWFunction {
  public:
    /// Realizes a ZeroProductSpec. The sinc power contributes the m-fold
    /// indicator self-convolution (a B-spline) and each zero factor acts on
    /// the spectrum as i d/dxi - z_k, so the spectrum stays exactly piecewise
    /// polynomial with breakpoints at -mc + 2cj.
    static PWFunction build(const ZeroProductSpec& spec);

    /// Wraps a raw spectrum; decay_order describes the time-domain falloff
    /// O(|x|^-decay_order) and is only used to pick quadrature truncations.
    static PWFunction from_spectrum(PiecewisePolySpectrum spectrum, int decay_order = 1);

    const PiecewisePolySpectrum& spectrum() const { return spectrum_; }
    double bandlimit() const { return bandlimit_; }
    int decay_order() const { return decay_order_; }
    const std::optional<ZeroProductSpec>& generating_spec() const { return spec_; }

    /// Closed-form inverse transform (1/sqrt(2 pi)) int F(xi) e^{i z xi} dxi,
    /// valid for every complex z (the entire extension).
    Complex eval_time(Complex z) const;

    /// Direct evaluation of the generating product form; requires a spec.
    Complex eval_product(Complex z) const;
    bool has_product_form() const { return spec_.has_value(); }

    /// Point evaluation through the cheapest exact route available.
    Complex operator()(Complex z) const {
        return spec_ ? eval_product(z) : eval_time(z);
    }

    /// Exact spectral L2 norm (Parseval).
    double l2_norm() const { return norm_; }

    /// Truncation radius X with int_{|x|>X} |f(x+iy)|^2 dx <= eps_sq,
    /// derived from the product form's decay (or a total-variation bound
    /// for raw spectra).
    double tail_radius(double eps_sq, double y = 0.0) const;

    /// Beyond this radius the signal is in its smooth power-law tail.
    double feature_radius(double y = 0.0) const;

  private:
    PWFunction() = default;

    PiecewisePolySpectrum spectrum_;
    double bandlimit_ = 0.0;
    int decay_order_ = 1;
    double norm_ = 0.0;
    std::optional<ZeroProductSpec> spec_;
};

inline PWFunction build_from_zeros(const ZeroProductSpec& spec) { return PWFunction::build(spec); }
inline Complex eval_time(const PWFunction& f, Complex z) { return f.eval_time(z); }
inline double l2_norm(const PWFunction& f) { return f.l2_norm(); }

/// sin(w)/w with the removable singularity filled in.
Complex sinc(Complex w);

}  // namespace zeroflip
