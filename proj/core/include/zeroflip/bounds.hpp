#pragma once

#include <string>

#include "zeroflip/stability.hpp"

namespace zeroflip {

/// Stability classification of a flip point: flips with beta_a <= 2L perturb
/// the function by a modulus-of-continuity amount, flips inside the disc of
/// center i/(2L) and radius 1/(2L) (equivalently beta_a > 2L) land near the
/// antipode 2||f||^2 instead.
enum class Region { stable, unstable, boundary };

const char* region_name(Region r);

struct RegionInfo {
    Region region;
    double beta;
    double circle_center_im;  // the dividing circle: center i/(2L) ...
    double circle_radius;     // ... radius 1/(2L), punctured at the origin
};

RegionInfo region_classify(const FlipPoint& a, double L);

/// One verified inequality: measured left side, substituted right side, and
/// margin = rhs - lhs (recorded even when negative). Unused inputs are NaN.
struct BoundReport {
    std::string name;
    std::string regime;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double re_a, im_a, re_b, im_b, L, lambda;

    BoundReport();
};

struct SelfFlipBounds {
    BoundReport coarse;
    BoundReport sharp;
    Region region;
};

/// Distance between f and its flip against the displayed constants. In the
/// unstable regime the measured side is |distance^2 - 2||f||^2| (coarse
/// constant 30 L Im a, sharp 2x the sinh form); in the stable regime it is
/// distance^2 itself (coarse 8 sqrt(L Im a), sharp the stable_regime_constant).
SelfFlipBounds self_flip_bound(const PWFunction& f, const FlipPoint& a);

/// The sharp stable-regime constant C(a); 0 < C(a) <= 4 sqrt(L Im a).
/// Exponential differences are evaluated expm1-style so near-cancelling
/// regimes keep full precision.
double stable_regime_constant(const FlipPoint& a, double L);

/// Strip growth: strip_norm(f, a, lambda) against
/// [1 + 2 Im a/(Im a - lambda)] e^{2 (Im a)^2/|a|^2} e^{L lambda} ||f||.
BoundReport strip_growth_bound(const PWFunction& f, const FlipPoint& a, double lambda);

/// Kernel-difference constant C(a, b) (exact form and the coarse bound
/// 14 |a-b| / Im b). Requires the admissibility |a - b| <= |b| / 2.
struct KernelDiffConstant {
    double exact;
    double coarse;
};
KernelDiffConstant kernel_diff_constant(const FlipPoint& a, const FlipPoint& b);

/// || Im a (R gamma_a * tau_a F) - Im b (R gamma_b * tau_b F) ||_2 against
/// C(a,b) ||f|| + sqrt(2 pi) omega2(F; |beta_a - beta_b|).
BoundReport kernel_diff_bound(const PWFunction& f, const FlipPoint& a, const FlipPoint& b);

/// The exponential tail-kernel constant C(b) of the double-integral bound.
double tail_kernel_constant(const FlipPoint& b, double L);

/// Measured tail-kernel double integral (quadrature; |F| has no closed form)
/// against ||f|| C(b).
BoundReport tail_kernel_bound(const PWFunction& f, const FlipPoint& b, double rel_tol = 1e-8);

struct PairConstants {
    double c1;  // multiplies omega2(F; |beta_b - beta_a|) ||f||
    double c2;  // multiplies ||f||^2; -> 0 as a -> b
};
PairConstants pair_constants(const FlipPoint& a, const FlipPoint& b, double L);

/// Pair stability: pair_distance(f, a, b).distance_sq against
/// C1(b) omega2 ||f|| + C2(a,b) ||f||^2.
BoundReport pair_flip_bound(const PWFunction& f, const FlipPoint& a, const FlipPoint& b);

}  // namespace zeroflip
