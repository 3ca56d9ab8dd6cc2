#pragma once

#include <array>
#include <optional>

#include "zeroflip/flip.hpp"

namespace zeroflip {

/// Result of an optimal-phase stability distance
///     inf over |c|=1 of || F_a f - c g ||_2^2 = 2 (||f||^2 - |<F_a f, g>|).
struct StabilityReport {
    double distance_sq = 0.0;
    Complex optimal_phase{1.0};  // the minimizing unimodular c
    bool phase_defined = true;   // false when the inner product vanishes
    Complex inner_value{0.0};    // <hat(F_a f), hat(F_b f)> (or hat f)
    /// Pair decomposition {A, dB, dC, dD} when computed.
    std::optional<std::array<Complex, 4>> decomposition;
};

/// <hat(F_a f), hat f>, assembled from the exact shift-autocorrelation term
/// plus the one-sided exponential smoothing term. Inner products are linear
/// in the first slot and conjugate-linear in the second throughout.
Complex self_inner(const PWFunction& f, const FlipPoint& a);

StabilityReport self_distance(const PWFunction& f, const FlipPoint& a);

/// The phase-normalized pair inner product and its four-term split. total is
/// (conj(a) b)/(a conj(b)) * <hat(F_a f), hat(F_b f)>; the a = b baseline
/// terms are subtracted from each piece so everything vanishes as a -> b.
struct PairInnerResult {
    Complex total{0.0};
    Complex a_term{0.0};  // shifted autocorrelation piece
    Complex b_diff{0.0};
    Complex c_diff{0.0};
    Complex d_diff{0.0};
    /// Independent evaluation through the assembled wide-band spectra.
    Complex direct{0.0};
    /// |sum of the a = b baseline terms| -- zero in exact arithmetic.
    double identity_residual = 0.0;
};

PairInnerResult pair_inner(const PWFunction& f, const FlipPoint& a, const FlipPoint& b);

StabilityReport pair_distance(const PWFunction& f, const FlipPoint& a, const FlipPoint& b);

/// Time-domain oracle for <F_a f, F_b f>: adaptive quadrature of
/// u_a(x) conj(u_b(x)) |f(x)|^2 with a truncation radius from the decay
/// order. Matches the spectral inner products by Parseval. Throws
/// ToleranceError when the quadrature cannot reach rel_tol.
Complex time_oracle_inner(const PWFunction& f, const FlipPoint& a, const FlipPoint& b,
                          double rel_tol = 1e-8);

}  // namespace zeroflip
