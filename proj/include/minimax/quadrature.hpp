#pragma once

#include "minimax/prior.hpp"

namespace minimax {

// Adaptive-quadrature cross-check value. value +/- abs_error is an error
// band for testing, not a verified enclosure.
struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
};

// I_s(w) = int_0^1 kappa^s (1-kappa)^{b-1} e^{-w kappa} dkappa for s > -1,
// b > 0, w >= 0. Integrated after the substitution 1-kappa = t^{1/b}, which
// removes the kappa = 1 endpoint singularity exactly; the residual kappa = 0
// singularity for s < 0 is left to the tanh-sinh rule.
QuadResult kappa_integral(double s, double b, double w);

// Delta(w) = p - 2w I_{q+1}/I_q + w I_q/I_{q-1} with q = p/2 + a.
QuadResult delta_quadrature_oracle(double w, const PriorConfig& cfg);

// Posterior mean of kappa: I_q(w)/I_{q-1}(w) at w = y_norm_sq/2.
QuadResult posterior_kappa_oracle(double y_norm_sq, const PriorConfig& cfg);

// R_hat(y_norm_sq) = p - 2 (I_q/I_{q-1}) Delta(w) at w = y_norm_sq/2.
QuadResult risk_quadrature_oracle(double y_norm_sq, const PriorConfig& cfg);

// m(y) = (2 pi)^{-p/2} I_{q-1}(y_norm_sq/2).
QuadResult marginal_quadrature_oracle(double y_norm_sq, const PriorConfig& cfg);

}  // namespace minimax
