#pragma once

#include <cmath>
#include <stdexcept>

#include "minimax/rational.hpp"

namespace minimax {

// Prior kappa^{a-1}(1-kappa)^{b-1} on the shrinkage weight kappa of a
// p-dimensional normal mean. Every downstream formula runs on q = p/2 + a.
struct PriorConfig {
  int p = 0;
  double a = 0.0;
  double b = 0.0;

  PriorConfig(int p_, double a_, double b_) : p(p_), a(a_), b(b_) {
    if (p < 1) {
      throw std::invalid_argument("PriorConfig: requires p >= 1");
    }
    if (!std::isfinite(a) || !std::isfinite(b)) {
      throw std::invalid_argument("PriorConfig: a and b must be finite");
    }
    if (!(b > 0.0)) {
      throw std::invalid_argument("PriorConfig: requires b > 0");
    }
    // q <= 0 is constructible on purpose: applicability checks inspect such
    // configurations and report a status instead of throwing. Operations
    // that need q > 0 enforce it themselves.
  }

  double q() const { return 0.5 * p + a; }
  Rational q_exact() const { return Rational(p) / 2 + rational_of(a); }
  bool has_positive_q() const { return q_exact() > 0; }
  bool is_half_cauchy() const { return a == 0.5 && b == 0.5; }
};

inline PriorConfig half_cauchy_config(int p) { return PriorConfig(p, 0.5, 0.5); }

}  // namespace minimax
