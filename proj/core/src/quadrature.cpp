#include "zeroflip/quadrature.hpp"

#include <cmath>

namespace zeroflip {

GaussLegendre::GaussLegendre(int n) : nodes(n), weights(n) {
    // Newton iteration on P_n, seeded with the Chebyshev zero estimate.
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[n - 1 - i] = weights[i];
    }
}

const GaussLegendre& gauss_legendre_32() {
    static const GaussLegendre rule(32);
    return rule;
}

namespace {

Complex panel_gl32(const std::function<Complex(double)>& f, double a, double b) {
    const auto& rule = gauss_legendre_32();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    Complex acc(0.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * acc;
}

struct PanelResult {
    Complex value{0.0};
    double err = 0.0;
    bool converged = true;
};

PanelResult integrate_panel(const std::function<Complex(double)>& f, double a, double b,
                            double tol, int depth) {
    const Complex whole = panel_gl32(f, a, b);
    const double mid = 0.5 * (a + b);
    const Complex split = panel_gl32(f, a, mid) + panel_gl32(f, mid, b);
    const double err = std::abs(split - whole);
    if (err <= tol || b - a < 1e-14 * (1.0 + std::abs(mid))) return {split, err, true};
    if (depth <= 0) return {split, err, false};
    PanelResult left = integrate_panel(f, a, mid, 0.5 * tol, depth - 1);
    PanelResult right = integrate_panel(f, mid, b, 0.5 * tol, depth - 1);
    return {left.value + right.value, left.err + right.err,
            left.converged && right.converged};
}

}  // namespace

Complex adaptive_integrate(const std::function<Complex(double)>& f, double a, double b,
                           double abs_tol, double initial_panel, int max_depth) {
    if (!(b > a)) return Complex(0.0);
    double panel = initial_panel > 0.0 ? initial_panel : (b - a);
    panel = std::min(panel, b - a);
    const int n_panels = std::max(1, static_cast<int>(std::ceil((b - a) / panel)));
    const double width = (b - a) / n_panels;
    Complex acc(0.0);
    double err = 0.0;
    bool ok = true;
    for (int i = 0; i < n_panels; ++i) {
        const double lo = a + i * width;
        const double hi = (i + 1 == n_panels) ? b : lo + width;
        PanelResult r = integrate_panel(f, lo, hi, abs_tol * width / (b - a), max_depth);
        acc += r.value;
        err += r.err;
        ok = ok && r.converged;
    }
    if (!ok) throw ToleranceError("adaptive_integrate: tolerance not met", acc, err);
    return acc;
}

double adaptive_integrate_real(const std::function<double(double)>& f, double a, double b,
                               double abs_tol, double initial_panel, int max_depth) {
    return adaptive_integrate([&](double x) { return Complex(f(x), 0.0); }, a, b, abs_tol,
                              initial_panel, max_depth)
        .real();
}

Complex integrate_decaying_line(const std::function<Complex(double)>& f, double core, double X,
                                double abs_tol, double core_panel) {
    core = std::max(core, core_panel);
    if (X <= core) return adaptive_integrate(f, -X, X, abs_tol, core_panel);
    int shells = 0;
    for (double r = core; r < X; r *= 2.0) ++shells;
    const double shell_tol = 0.5 * abs_tol / double(2 * shells);
    Complex acc = adaptive_integrate(f, -core, core, 0.5 * abs_tol, core_panel);
    for (double r = core; r < X; r *= 2.0) {
        const double hi = std::min(2.0 * r, X);
        acc += adaptive_integrate(f, r, hi, shell_tol, hi - r);
        acc += adaptive_integrate(f, -hi, -r, shell_tol, hi - r);
    }
    return acc;
}

double integrate_decaying_line_real(const std::function<double(double)>& f, double core, double X,
                                    double abs_tol, double core_panel) {
    return integrate_decaying_line([&](double x) { return Complex(f(x), 0.0); }, core, X, abs_tol,
                                   core_panel)
        .real();
}

}  // namespace zeroflip
