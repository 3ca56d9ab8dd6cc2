#pragma once

#include <optional>
#include <vector>

#include "zeroflip/piecewise.hpp"
#include "zeroflip/poly.hpp"

namespace zeroflip {

/// One additive term of a wide-band spectrum: e^{mu (xi - lo)} * poly(xi - lo)
/// on [lo, hi). Anchoring both the exponential and the polynomial at the left
/// endpoint keeps every stored number on the scale of the function values.
struct ExpAtom {
    double lo = 0.0;
    double hi = 0.0;
    Complex mu{0.0};
    Poly poly;

    Complex operator()(double xi) const {
        return std::exp(mu * (xi - lo)) * poly(Complex(xi - lo, 0.0));
    }
};

/// Semi-infinite decaying branch: amp * e^{nu (xi - cutoff)} on (-inf, cutoff),
/// with Re nu > 0 so the value dies out toward -inf.
struct ExpTail {
    double cutoff = 0.0;
    Complex amp{0.0};
    Complex nu{1.0};

    Complex operator()(double xi) const { return amp * std::exp(nu * (xi - cutoff)); }
};

/// Wide-band spectrum: a finite sum of exponential-polynomial atoms plus an
/// optional left tail. Atoms may overlap; the value at xi is the sum of every
/// covering term. All inner products and norms are evaluated in closed form.
class ExpPolySpectrum {
  public:
    ExpPolySpectrum() = default;

    static ExpPolySpectrum from_piecewise(const PiecewisePolySpectrum& F);

    void add_atom(ExpAtom atom);
    void set_tail(ExpTail tail);

    const std::vector<ExpAtom>& atoms() const { return atoms_; }
    const std::optional<ExpTail>& tail() const { return tail_; }

    Complex operator()(double xi) const;

    ExpPolySpectrum translated(double alpha) const;
    ExpPolySpectrum scaled(Complex s) const;

    /// Sorted endpoints of the finite atoms, merged within kMergeTol.
    std::vector<double> partition() const;
    /// Index of the partition segment containing xi; -1 in the tail region
    /// below every atom, -2 outside the support on the right.
    int segment_index(double xi) const;

    double support_hi() const;

    double norm_sq() const;
    double norm() const;

    /// (integral of |F|^2 e^{2 lambda |xi|})^{1/2}; throws std::domain_error
    /// when the weight outruns the tail decay (lambda >= Re nu).
    double weighted_norm(double lambda) const;

  private:
    std::vector<ExpAtom> atoms_;
    std::optional<ExpTail> tail_;

    friend Complex inner_product(const ExpPolySpectrum&, const ExpPolySpectrum&);
};

/// <F, G> = integral of F * conj(G); linear in F, conjugate-linear in G.
Complex inner_product(const ExpPolySpectrum& F, const ExpPolySpectrum& G);

inline Complex inner_product(const ExpPolySpectrum& F, const PiecewisePolySpectrum& G) {
    return inner_product(F, ExpPolySpectrum::from_piecewise(G));
}
inline Complex inner_product(const PiecewisePolySpectrum& F, const ExpPolySpectrum& G) {
    return inner_product(ExpPolySpectrum::from_piecewise(F), G);
}

}  // namespace zeroflip
