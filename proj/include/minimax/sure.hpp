#pragma once

#include <vector>

#include "minimax/interval.hpp"
#include "minimax/prior.hpp"

namespace minimax {

// Rigorous evaluation of the unbiased risk estimate at one point.
struct SureValue {
  double w = 0.0;            // ||y||^2 / 2
  Interval delta;            // Delta(w; a, b)
  Interval risk;             // R_hat(||y||^2)
  Interval shrink_weight;    // posterior mean of kappa
};

// Delta(w) = p/2 - a - 2 + 2(q+1) M(b-1,b+q+1,w)/M(b,b+q+1,w)
//          - q M(b-1,b+q,w)/M(b,b+q,w), q = p/2 + a. Requires q > 0.
// Delta(0) = p exactly; the enclosure at w = 0 is a few ulp wide.
Interval delta_sure(double w, const PriorConfig& cfg);

// R_hat = p - 2 E[kappa|y] Delta(w) with w = y_norm_sq/2 and
// E[kappa|y] = (q/(q+b)) M(b,b+q+1,w)/M(b,b+q,w), all as enclosures.
SureValue risk_estimate(double y_norm_sq, const PriorConfig& cfg);

// 1 - E[kappa|y], intersected with [0,1].
Interval shrink_factor(double y_norm_sq, const PriorConfig& cfg);

// Scales y by the midpoint of shrink_factor: a point estimator for
// statistical use; certification consumers read the enclosures instead.
std::vector<double> bayes_estimate(const std::vector<double>& y, const PriorConfig& cfg);

// m(y) = (2 pi)^{-p/2} e^{-w} B(q,b) M(b,b+q,w) at w = y_norm_sq/2.
// The Beta factor comes from lgamma with generous ulp padding; this path
// backs cross-checks and display, not certificates.
Interval marginal_density(double y_norm_sq, const PriorConfig& cfg);

}  // namespace minimax
