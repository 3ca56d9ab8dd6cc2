#pragma once

#include "zeroflip/poly.hpp"

namespace zeroflip {

/// Closed form of the oscillatory moment
///
///     exp_moment(p, lo, hi, w) = integral over [lo, hi] of e^{iwt} p(t) dt
///
/// for complex frequency w. Large |w|*(hi-lo) uses the integration-by-parts
/// antiderivative e^{iwt} q(t); small products switch to a Taylor expansion
/// around the interval midpoint so the near-cancelling endpoint terms never
/// appear. Degenerate intervals (lo == hi) return 0.
Complex exp_moment(const Poly& p, double lo, double hi, Complex w);

/// integral over (-inf, 0] of e^{sigma v} p(v) dv, requires Re sigma > 0.
Complex exp_halfline_moment(const Poly& p, Complex sigma);

}  // namespace zeroflip
