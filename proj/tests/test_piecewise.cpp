#include <doctest.h>

#include <cmath>

#include "support/oracle.hpp"
#include "zeroflip/io.hpp"
#include "zeroflip/piecewise.hpp"

using namespace zeroflip;

namespace {

PiecewisePolySpectrum triangle() {
    // 1 - |xi| on [-1, 1]
    return PiecewisePolySpectrum({-1.0, 0.0, 1.0},
                                 {Poly({Complex(0.0), Complex(1.0)}),
                                  Poly({Complex(1.0), Complex(-1.0)})});
}

PiecewisePolySpectrum wiggle() {
    // an asymmetric complex spectrum over [-1.5, 2]
    return PiecewisePolySpectrum(
        {-1.5, -0.2, 0.8, 2.0},
        {Poly({Complex(0.5, 1.0), Complex(1.0, -0.3)}),
         Poly({Complex(1.8, 0.1), Complex(-2.0), Complex(0.7, 0.7)}),
         Poly({Complex(-0.4, 0.6), Complex(0.0), Complex(0.0), Complex(0.9)})});
}

}  // namespace

TEST_SUITE_BEGIN("spectra");

TEST_CASE("norms of the indicator and the triangle") {
    CHECK(PiecewisePolySpectrum::indicator(-1.0, 1.0).norm() == doctest::Approx(std::sqrt(2.0)));
    CHECK(triangle().norm() == doctest::Approx(std::sqrt(2.0 / 3.0)));
}

TEST_CASE("translate: zero shift, support shift, pointwise oracle") {
    const auto F = wiggle();
    const auto id = F.translated(0.0);
    const auto ind = PiecewisePolySpectrum::indicator(-1.0, 1.0).translated(2.0);
    CHECK(ind.support_lo() == doctest::Approx(1.0));
    CHECK(ind.support_hi() == doctest::Approx(3.0));
    CHECK(std::abs(ind(2.5) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(ind(0.5)) == 0.0);
    const double alpha = 0.683;
    const auto shifted = F.translated(alpha);
    for (int i = 0; i < 100; ++i) {
        const double xi = -2.0 + 5.0 * i / 99.0;
        CHECK(std::abs(id(xi) - F(xi)) == 0.0);
        CHECK(std::abs(shifted(xi + alpha) - F(xi)) < 1e-13);
    }
}

TEST_CASE("reflect: even spectra fixed, indicator mirrored, pointwise oracle") {
    const auto tri = triangle();
    const auto ind = PiecewisePolySpectrum::indicator(0.0, 1.0).reflected();
    CHECK(ind.support_lo() == doctest::Approx(-1.0));
    CHECK(ind.support_hi() == doctest::Approx(0.0));
    const auto F = wiggle();
    const auto R = F.reflected();
    for (int i = 0; i < 100; ++i) {
        const double xi = -2.2 + 4.6 * i / 99.0;
        CHECK(std::abs(tri.reflected()(xi) - tri(xi)) < 1e-13);
        CHECK(std::abs(R(xi) - F(-xi)) < 1e-13);
    }
}

TEST_CASE("translate-then-reflect equals reflect-then-translate-negated") {
    const auto F = wiggle();
    const double alpha = -0.421;
    const auto lhs = F.translated(alpha).reflected();
    const auto rhs = F.reflected().translated(-alpha);
    for (int i = 0; i < 50; ++i) {
        const double xi = -3.0 + 6.0 * i / 49.0;
        CHECK(std::abs(lhs(xi) - rhs(xi)) < 1e-13);
    }
}

TEST_CASE("inner product: positivity, indicator value, quadrature oracle, conjugate symmetry") {
    const auto F = wiggle();
    const auto G = triangle();
    const Complex self = inner_product(F, F);
    CHECK(self.imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(self.real() > 0.0);
    const auto ind = PiecewisePolySpectrum::indicator(-1.0, 1.0);
    CHECK(std::abs(inner_product(ind, ind) - Complex(2.0)) < 1e-14);

    const Complex got = inner_product(F, G);
    std::vector<double> knots = F.breakpoints();
    knots.insert(knots.end(), G.breakpoints().begin(), G.breakpoints().end());
    const Complex want = oracle::integrate_split(
        [&](double xi) { return F(xi) * std::conj(G(xi)); }, -2.0, 2.5, knots, 1e-12);
    CHECK(std::abs(got - want) < 1e-9 * (1.0 + std::abs(want)));
    CHECK(std::abs(inner_product(G, F) - std::conj(got)) < 1e-12);
}

TEST_CASE("product and sum evaluate pointwise") {
    const auto F = wiggle();
    const auto G = triangle();
    const auto P = F * G;
    const auto S = F + G;
    for (int i = 0; i < 80; ++i) {
        const double xi = -1.8 + 4.0 * i / 79.0;
        CHECK(std::abs(P(xi) - F(xi) * G(xi)) < 1e-12);
        CHECK(std::abs(S(xi) - (F(xi) + G(xi))) < 1e-12);
    }
}

TEST_CASE("indicator self-convolution builds the triangle") {
    const auto conv = PiecewisePolySpectrum::indicator(-0.5, 0.5).convolve_indicator(0.5);
    for (int i = 0; i < 60; ++i) {
        const double w = -1.2 + 2.4 * i / 59.0;
        const double expect = std::max(0.0, 1.0 - std::abs(w));
        CHECK(std::abs(conv(w) - Complex(expect)) < 1e-13);
    }
}

TEST_CASE("sliding integral against an off-center spectrum matches quadrature") {
    const auto F = wiggle();
    const double c = 0.37;
    const auto conv = F.convolve_indicator(c);
    for (double w : {-1.9, -0.4, 0.1, 0.9, 1.6, 2.3}) {
        const Complex want = oracle::integrate_split([&](double s) { return F(s); }, w - c, w + c,
                                                     F.breakpoints(), 1e-13);
        CHECK(std::abs(conv(w) - want) < 1e-10 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("weighted norm: lambda 0 is the plain norm, monotone, quadrature oracle") {
    const auto F = wiggle();
    CHECK(weighted_norm(F, 0.0) == doctest::Approx(F.norm()));
    double prev = 0.0;
    for (double lam : {0.0, 0.3, 0.7, 1.2}) {
        const double v = weighted_norm(F, lam);
        CHECK(v >= prev);
        prev = v;
    }
    const double lam = 0.55;
    const double want = std::sqrt(oracle::integrate_real(
        [&](double xi) { return std::norm(F(xi)) * std::exp(2.0 * lam * std::abs(xi)); }, -1.5,
        2.0, 1e-12));
    CHECK(weighted_norm(F, lam) == doctest::Approx(want).epsilon(1e-8));
}

TEST_CASE("omega2 of the indicator is sqrt(2h)") {
    const double L = 1.0;
    const auto ind = PiecewisePolySpectrum::indicator(-L, L);
    for (double h : {0.05, 0.3, 1.0, 1.7, 2.0})
        CHECK(omega2(ind, h) == doctest::Approx(std::sqrt(2.0 * h)).epsilon(1e-9));
    CHECK(omega2(ind, 0.0) == 0.0);
}

TEST_CASE("omega2 of the triangle matches a dense-grid maximization") {
    const auto tri = triangle();
    const double h = 0.5;
    double best = 0.0;
    const double nsq = tri.norm_sq();
    for (int i = 0; i <= 10000; ++i) {
        const double eta = h * i / 10000.0;
        const double v = 2.0 * nsq - 2.0 * inner_product(tri.translated(eta), tri).real();
        best = std::max(best, v);
    }
    CHECK(omega2(tri, h) == doctest::Approx(std::sqrt(best)).epsilon(1e-4));
}

TEST_CASE("spectra round-trip through JSON with explicit piece lists") {
    const auto F = wiggle();
    const auto back = io::piecewise_from_json(io::piecewise_to_json(F));
    REQUIRE(back.breakpoints() == F.breakpoints());
    for (int i = 0; i < 50; ++i) {
        const double xi = -1.6 + 3.8 * i / 49.0;
        CHECK(back(xi) == F(xi));
    }
    // sampling export carries header and both components
    const std::string csv = io::piecewise_samples_csv(F, -2.0, 2.5, 8);
    CHECK(csv.rfind("xi,re,im\n", 0) == 0);
}

TEST_CASE("omega2 is nondecreasing in h and bounded by twice the norm") {
    const auto F = wiggle();
    double prev = 0.0;
    for (double h : {0.1, 0.4, 0.9, 2.0, 5.0, 12.0}) {
        const double v = omega2(F, h);
        CHECK(v >= prev - 1e-9);
        CHECK(v <= 2.0 * F.norm() + 1e-9);
        prev = v;
    }
}

TEST_SUITE_END();
