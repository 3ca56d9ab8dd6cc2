#pragma once

#include <complex>
#include <vector>

namespace zeroflip {

using Complex = std::complex<double>;

/// Dense polynomial with complex coefficients, lowest degree first
/// (c[k] multiplies u^k, so the highest-degree coefficient is last).
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(Complex v) { return Poly({v}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return c_; }
    Complex coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Complex(0.0);
    }

    Complex operator()(Complex u) const;
    Complex operator()(double u) const;

    Poly derivative() const;
    /// Antiderivative with zero constant term.
    Poly antiderivative() const;
    /// p(u + delta) as a polynomial in u (Taylor shift).
    Poly shifted(double delta) const;
    /// p(-u).
    Poly reflected() const;
    /// Coefficient-wise conjugate; equals conj(p(u)) for real u.
    Poly conjugated() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Complex s) const;

    /// Exact integral over the symmetric interval [-h, h].
    Complex integrate_sym(double h) const;
    /// Exact integral over [lo, hi] in the polynomial's own frame.
    Complex integrate(double lo, double hi) const;

    /// Sum of |c_k| * h^k, a cheap bound for |p| on [-h, h].
    double magnitude_bound(double h) const;

  private:
    void trim();
    std::vector<Complex> c_;
};

}  // namespace zeroflip
