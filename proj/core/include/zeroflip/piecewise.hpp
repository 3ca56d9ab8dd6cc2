#pragma once

#include <vector>

#include "zeroflip/poly.hpp"

namespace zeroflip {

/// Compactly supported piecewise polynomial spectrum.
///
/// The function is zero outside [breakpoints.front(), breakpoints.back()] and
/// equals pieces[i](xi - breakpoints[i]) on the i-th interval. Keeping each
/// piece in its own left-anchored frame makes translation exact and keeps the
/// monomial basis conditioned even when the support sits far from the origin.
class PiecewisePolySpectrum {
  public:
    PiecewisePolySpectrum() = default;
    /// breakpoints must be strictly increasing with pieces.size() + 1 entries.
    PiecewisePolySpectrum(std::vector<double> breakpoints, std::vector<Poly> pieces);

    static PiecewisePolySpectrum indicator(double lo, double hi, Complex height = 1.0);

    bool empty() const { return pieces_.empty(); }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<Poly>& pieces() const { return pieces_; }
    double support_lo() const { return empty() ? 0.0 : breakpoints_.front(); }
    double support_hi() const { return empty() ? 0.0 : breakpoints_.back(); }
    int max_degree() const;

    Complex operator()(double xi) const;

    PiecewisePolySpectrum translated(double alpha) const;
    PiecewisePolySpectrum reflected() const;
    PiecewisePolySpectrum conjugated() const;
    PiecewisePolySpectrum derivative() const;
    PiecewisePolySpectrum scaled(Complex s) const;
    PiecewisePolySpectrum operator+(const PiecewisePolySpectrum& o) const;
    PiecewisePolySpectrum operator-(const PiecewisePolySpectrum& o) const;
    PiecewisePolySpectrum operator*(const PiecewisePolySpectrum& o) const;

    /// Sliding integral against the indicator of [-c, c]:
    /// result(w) = integral of this over [w-c, w+c] (plain convolution).
    PiecewisePolySpectrum convolve_indicator(double c) const;

    Complex integrate() const;
    double norm() const;
    double norm_sq() const;

    /// Absolute tolerance for collapsing nearly equal breakpoints.
    static constexpr double kMergeTol = 1e-12;

  private:
    int piece_index(double xi) const;

    std::vector<double> breakpoints_;
    std::vector<Poly> pieces_;

    friend Complex inner_product(const PiecewisePolySpectrum&, const PiecewisePolySpectrum&);
};

/// <F, G> = integral of F * conj(G); linear in F, conjugate-linear in G.
Complex inner_product(const PiecewisePolySpectrum& F, const PiecewisePolySpectrum& G);

inline PiecewisePolySpectrum translate(const PiecewisePolySpectrum& F, double alpha) {
    return F.translated(alpha);
}
inline PiecewisePolySpectrum reflect(const PiecewisePolySpectrum& F) { return F.reflected(); }

/// Weighted norm (integral of |F|^2 e^{2 lambda |xi|})^{1/2}; finite for every
/// lambda >= 0 on compact support.
double weighted_norm(const PiecewisePolySpectrum& F, double lambda);

/// L^2 modulus of continuity: sup over |eta| <= h of || tau_eta F - F ||_2.
/// The sup is located on a 64-point grid and sharpened by golden-section
/// refinement (the shift-distance is piecewise smooth in eta).
double omega2(const PiecewisePolySpectrum& F, double h);

/// Union of both breakpoint lists restricted to [lo, hi], merged within
/// PiecewisePolySpectrum::kMergeTol. Exposed for the spectrum combinators.
std::vector<double> merged_partition(const std::vector<double>& a, const std::vector<double>& b,
                                     double lo, double hi);

}  // namespace zeroflip
