#include "zeroflip/poly.hpp"

#include <algorithm>
#include <cmath>

namespace zeroflip {

Complex Poly::operator()(Complex u) const {
    Complex acc(0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
    return acc;
}

Complex Poly::operator()(double u) const { return (*this)(Complex(u, 0.0)); }

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Complex> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * double(k);
    return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
    if (c_.empty()) return Poly();
    std::vector<Complex> d(c_.size() + 1, Complex(0.0));
    for (std::size_t k = 0; k < c_.size(); ++k) d[k + 1] = c_[k] / double(k + 1);
    return Poly(std::move(d));
}

Poly Poly::shifted(double delta) const {
    if (c_.empty() || delta == 0.0) return *this;
    // Repeated synthetic division: rewrites p in powers of (u - (-delta)).
    std::vector<Complex> d = c_;
    const int n = static_cast<int>(d.size());
    for (int i = 0; i < n - 1; ++i)
        for (int k = n - 2; k >= i; --k) d[k] += delta * d[k + 1];
    return Poly(std::move(d));
}

Poly Poly::reflected() const {
    std::vector<Complex> d = c_;
    for (std::size_t k = 1; k < d.size(); k += 2) d[k] = -d[k];
    return Poly(std::move(d));
}

Poly Poly::conjugated() const {
    std::vector<Complex> d = c_;
    for (auto& v : d) v = std::conj(v);
    return Poly(std::move(d));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Complex> d(std::max(c_.size(), o.c_.size()), Complex(0.0));
    for (std::size_t k = 0; k < c_.size(); ++k) d[k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) d[k] += o.c_[k];
    return Poly(std::move(d));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Complex> d(std::max(c_.size(), o.c_.size()), Complex(0.0));
    for (std::size_t k = 0; k < c_.size(); ++k) d[k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) d[k] -= o.c_[k];
    return Poly(std::move(d));
}

Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<Complex> d(c_.size() + o.c_.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) d[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(d));
}

Poly Poly::scaled(Complex s) const {
    std::vector<Complex> d = c_;
    for (auto& v : d) v *= s;
    return Poly(std::move(d));
}

Complex Poly::integrate_sym(double h) const {
    Complex acc(0.0);
    double hpow = h;  // h^(k+1)
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (k % 2 == 0) acc += c_[k] * (2.0 * hpow / double(k + 1));
        hpow *= h;
    }
    return acc;
}

Complex Poly::integrate(double lo, double hi) const {
    // Shift to the midpoint so the monomial powers stay small.
    const double mid = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    return shifted(mid).integrate_sym(h);
}

double Poly::magnitude_bound(double h) const {
    double acc = 0.0, hpow = 1.0;
    for (const auto& v : c_) {
        acc += std::abs(v) * hpow;
        hpow *= h;
    }
    return acc;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == Complex(0.0)) c_.pop_back();
}

}  // namespace zeroflip
