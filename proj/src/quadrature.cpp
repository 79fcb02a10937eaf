#include "minimax/quadrature.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <stdexcept>

#include "minimax/errors.hpp"

namespace minimax {

namespace {

void require_positive_q(const PriorConfig& cfg, const char* who) {
  if (!cfg.has_positive_q()) {
    throw std::domain_error(std::string(who) + ": requires p/2 + a > 0");
  }
}

// First-order error propagation for a ratio u/v.
double ratio_error(double u, double eu, double v, double ev) {
  return (eu + std::fabs(u / v) * ev) / std::fabs(v);
}

}  // namespace

QuadResult kappa_integral(double s, double b, double w) {
  if (!(s > -1.0)) {
    throw std::invalid_argument("kappa_integral: requires s > -1");
  }
  if (!(b > 0.0)) {
    throw std::invalid_argument("kappa_integral: requires b > 0");
  }
  if (!(w >= 0.0) || !std::isfinite(w)) {
    throw std::invalid_argument("kappa_integral: requires finite w >= 0");
  }

  const double inv_b = 1.0 / b;
  // Two-argument form: tc is the distance to the nearest endpoint of [0,1].
  // Near t = 1 the node itself rounds to 1.0 long before the quadrature is
  // done refining, which silently truncates the kappa^s spike when s < 0;
  // rebuilding kappa from tc keeps it sampled down to the underflow floor.
  auto integrand = [=](double t, double tc) {
    double kappa;
    if (t > 0.5) {
      kappa = -std::expm1(std::log1p(-tc) * inv_b);
      if (kappa <= 0.0) {
        kappa = tc * inv_b;
      }
    } else {
      // kappa = 1 - t^{1/b}; the expm1/log form stays accurate where a
      // direct 1 - pow(t, 1/b) would cancel.
      kappa = t > 0.0 ? -std::expm1(std::log(t) * inv_b) : 1.0;
    }
    const double power = s == 0.0 ? 1.0 : std::pow(kappa, s);
    return inv_b * power * std::exp(-w * kappa);
  };

  boost::math::quadrature::tanh_sinh<double> rule;
  double error = 0.0;
  double l1 = 0.0;
  double value = 0.0;
  try {
    value = rule.integrate(integrand, 0.0, 1.0, 1e-12, &error, &l1);
  } catch (const std::exception& e) {
    throw QuadratureNonConvergence(std::string("kappa_integral: ") + e.what());
  }
  if (!std::isfinite(value) || !(error <= 1e-8 * std::max(l1, 1e-300))) {
    throw QuadratureNonConvergence("kappa_integral: error estimate did not converge");
  }
  return {value, error};
}

QuadResult delta_quadrature_oracle(double w, const PriorConfig& cfg) {
  require_positive_q(cfg, "delta_quadrature_oracle");
  const double q = cfg.q();
  const QuadResult top = kappa_integral(q + 1.0, cfg.b, w);
  const QuadResult mid = kappa_integral(q, cfg.b, w);
  const QuadResult bot = kappa_integral(q - 1.0, cfg.b, w);

  const double r1 = top.value / mid.value;
  const double r0 = mid.value / bot.value;
  const double e1 = ratio_error(top.value, top.abs_error, mid.value, mid.abs_error);
  const double e0 = ratio_error(mid.value, mid.abs_error, bot.value, bot.abs_error);
  return {cfg.p - 2.0 * w * r1 + w * r0, 2.0 * w * e1 + w * e0};
}

QuadResult posterior_kappa_oracle(double y_norm_sq, const PriorConfig& cfg) {
  require_positive_q(cfg, "posterior_kappa_oracle");
  const double w = 0.5 * y_norm_sq;
  const QuadResult mid = kappa_integral(cfg.q(), cfg.b, w);
  const QuadResult bot = kappa_integral(cfg.q() - 1.0, cfg.b, w);
  return {mid.value / bot.value,
          ratio_error(mid.value, mid.abs_error, bot.value, bot.abs_error)};
}

QuadResult risk_quadrature_oracle(double y_norm_sq, const PriorConfig& cfg) {
  const QuadResult factor = posterior_kappa_oracle(y_norm_sq, cfg);
  const QuadResult delta = delta_quadrature_oracle(0.5 * y_norm_sq, cfg);
  const double value = cfg.p - 2.0 * factor.value * delta.value;
  const double error =
      2.0 * (std::fabs(factor.value) * delta.abs_error + std::fabs(delta.value) * factor.abs_error);
  return {value, error};
}

QuadResult marginal_quadrature_oracle(double y_norm_sq, const PriorConfig& cfg) {
  require_positive_q(cfg, "marginal_quadrature_oracle");
  const QuadResult base = kappa_integral(cfg.q() - 1.0, cfg.b, 0.5 * y_norm_sq);
  const double scale = std::pow(2.0 * 3.14159265358979323846264338327950288, -0.5 * cfg.p);
  return {scale * base.value, scale * base.abs_error};
}

}  // namespace minimax
