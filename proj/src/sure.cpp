#include "minimax/sure.hpp"

#include <cmath>
#include <stdexcept>

#include "minimax/errors.hpp"
#include "minimax/kummer.hpp"

namespace minimax {

namespace {

void require_positive_q(const PriorConfig& cfg, const char* who) {
  if (!cfg.has_positive_q()) {
    throw std::domain_error(std::string(who) + ": requires p/2 + a > 0");
  }
}

// Widened Beta function B(x,y) for display-grade paths. lgamma is accurate
// to a few ulp on glibc; 64 ulp of padding per term buries that plus the
// argument rounding.
Interval beta_via_lgamma(const Rational& x, const Rational& y) {
  const double xd = round_nearest(x);
  const double yd = round_nearest(y);
  const double sd = round_nearest(x + y);
  double log_beta = std::lgamma(xd) + std::lgamma(yd) - std::lgamma(sd);
  double lo = log_beta;
  double hi = log_beta;
  for (int i = 0; i < 64; ++i) {
    lo = step_down(lo);
    hi = step_up(hi);
  }
  return exp(Interval(lo, hi));
}

}  // namespace

Interval delta_sure(double w, const PriorConfig& cfg) {
  require_positive_q(cfg, "delta_sure");
  if (!(w >= 0.0) || !std::isfinite(w)) {
    throw std::invalid_argument("delta_sure: requires finite w >= 0");
  }
  const Rational b = rational_of(cfg.b);
  const Rational q = cfg.q_exact();
  const Interval biv = to_interval(b);
  const Interval r1 = ratio_enclosure(biv, to_interval(b + q + 1), w);
  const Interval r0 = ratio_enclosure(biv, to_interval(b + q), w);
  const Interval head = to_interval(Rational(cfg.p) / 2 - rational_of(cfg.a) - 2);
  return head + 2.0 * (to_interval(q + 1) * r1) - to_interval(q) * r0;
}

SureValue risk_estimate(double y_norm_sq, const PriorConfig& cfg) {
  require_positive_q(cfg, "risk_estimate");
  if (!(y_norm_sq >= 0.0) || !std::isfinite(y_norm_sq)) {
    throw std::invalid_argument("risk_estimate: requires finite y_norm_sq >= 0");
  }
  const double w = 0.5 * y_norm_sq;
  const Rational b = rational_of(cfg.b);
  const Rational q = cfg.q_exact();
  const Interval biv = to_interval(b);

  const Interval m_up = kummer_enclosure(biv, to_interval(b + q + 1), w);
  const Interval m_lo = kummer_enclosure(biv, to_interval(b + q), w);
  Interval weight = to_interval(q / (q + b)) * m_up / m_lo;
  weight = intersect(weight, Interval(0.0, 1.0));

  SureValue out;
  out.w = w;
  out.delta = delta_sure(w, cfg);
  out.shrink_weight = weight;
  out.risk = Interval(static_cast<double>(cfg.p)) - 2.0 * (weight * out.delta);
  return out;
}

Interval shrink_factor(double y_norm_sq, const PriorConfig& cfg) {
  const SureValue v = risk_estimate(y_norm_sq, cfg);
  return intersect(1.0 - v.shrink_weight, Interval(0.0, 1.0));
}

std::vector<double> bayes_estimate(const std::vector<double>& y, const PriorConfig& cfg) {
  if (static_cast<int>(y.size()) != cfg.p) {
    throw std::invalid_argument("bayes_estimate: y dimension must equal cfg.p");
  }
  double norm_sq = 0.0;
  for (double v : y) {
    norm_sq += v * v;
  }
  const double scale = shrink_factor(norm_sq, cfg).mid();
  std::vector<double> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    out[i] = scale * y[i];
  }
  return out;
}

Interval marginal_density(double y_norm_sq, const PriorConfig& cfg) {
  require_positive_q(cfg, "marginal_density");
  if (!(y_norm_sq >= 0.0) || !std::isfinite(y_norm_sq)) {
    throw std::invalid_argument("marginal_density: requires finite y_norm_sq >= 0");
  }
  const double w = 0.5 * y_norm_sq;
  const Rational b = rational_of(cfg.b);
  const Rational q = cfg.q_exact();

  const Interval m = kummer_enclosure(to_interval(b), to_interval(b + q), w);
  const Interval beta = beta_via_lgamma(q, b);
  const Interval two_pi = 2.0 * pi_interval();
  Interval norm = powi(two_pi, cfg.p / 2);
  if (cfg.p % 2 == 1) {
    norm = norm * sqrt(two_pi);
  }
  return reciprocal(norm) * exp(Interval(-w, -w)) * beta * m;
}

}  // namespace minimax
