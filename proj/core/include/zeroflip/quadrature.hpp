#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "zeroflip/poly.hpp"

namespace zeroflip {

/// Raised when a quadrature cannot meet the requested tolerance; carries the
/// best value and error estimate reached so the caller can still inspect them.
class ToleranceError : public std::runtime_error {
  public:
    ToleranceError(const std::string& what, Complex achieved_value, double achieved_error)
        : std::runtime_error(what), value(achieved_value), error(achieved_error) {}
    Complex value;
    double error;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
/// computed once by Newton iteration on the Legendre recurrence.
struct GaussLegendre {
    explicit GaussLegendre(int n);
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussLegendre& gauss_legendre_32();

/// Integral of f over [a, b] by adaptive bisection of 32-node panels seeded at
/// width initial_panel. A panel is accepted when whole-panel and split-panel
/// values agree within its share of the tolerance budget; otherwise it is
/// bisected. Throws ToleranceError when the depth limit is hit first.
Complex adaptive_integrate(const std::function<Complex(double)>& f, double a, double b,
                           double abs_tol, double initial_panel = 0.0, int max_depth = 28);

double adaptive_integrate_real(const std::function<double(double)>& f, double a, double b,
                               double abs_tol, double initial_panel = 0.0, int max_depth = 28);

/// Whole-line integral of a decaying integrand truncated at [-X, X]: a core
/// region [-core, core] at panel width core_panel plus dyadically widening
/// shells, so far-field panels grow with distance instead of staying uniform.
Complex integrate_decaying_line(const std::function<Complex(double)>& f, double core, double X,
                                double abs_tol, double core_panel);

double integrate_decaying_line_real(const std::function<double(double)>& f, double core, double X,
                                    double abs_tol, double core_panel);

}  // namespace zeroflip
