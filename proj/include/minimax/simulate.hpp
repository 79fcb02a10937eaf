#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minimax/prior.hpp"
#include "minimax/sure.hpp"

namespace minimax {

enum class Estimator { HALF_CAUCHY_BAYES, BETA_PRIOR_BAYES, JAMES_STEIN, IDENTITY };

const char* estimator_name(Estimator est);

// Accepts the tag names above plus the short aliases bayes, james_stein,
// identity (case-insensitive).
Estimator estimator_from_name(const std::string& name);

struct RiskPoint {
  Estimator estimator = Estimator::IDENTITY;
  double beta_norm = 0.0;
  long long n_samples = 0;
  double empirical_risk = 0.0;  // mean of ||beta_hat - beta||^2
  double std_err = 0.0;
  double sure_mean = 0.0;       // mean of R_hat(||Y||^2)
  double sure_std_err = 0.0;
};

// (1 - (p-2)/||y||^2) y. Plain version, deliberately not positive-part.
// Throws ZeroVector at y = 0; requires p >= 3.
std::vector<double> james_stein(const std::vector<double>& y);

// Direct midpoint evaluation used by the cache below and its validation:
// rigorous series midpoints up to w = ||y||^2/2 = 400, quadrature beyond.
double shrink_mid_direct(double y_norm_sq, const PriorConfig& cfg);
double risk_mid_direct(double y_norm_sq, const PriorConfig& cfg);

// Midpoint tables of the shrink factor and R_hat over a log1p-spaced grid
// on ||y||^2 in [0, 4000], interpolated with a Catmull-Rom cubic. The grid
// is validated against direct evaluation at every cell midpoint and refined
// until the worst relative error is <= 1e-8; sampling noise dwarfs that.
// Lookups beyond the table fall back to direct evaluation.
class ShrinkCache {
 public:
  explicit ShrinkCache(const PriorConfig& cfg);

  double shrink_mid(double y_norm_sq) const;
  double risk_mid(double y_norm_sq) const;
  double checked_error() const { return checked_error_; }

 private:
  void build(int intervals);
  double interp(const std::vector<double>& v, double y_norm_sq) const;

  PriorConfig cfg_;
  double y_max_ = 4000.0;
  double step_ = 0.0;  // spacing in log1p(||y||^2)
  std::vector<double> shrink_;
  std::vector<double> risk_;
  double checked_error_ = 0.0;
};

// Empirical risk of the chosen estimator at beta under Y ~ N_p(beta, I),
// with the sample mean of R_hat alongside. Samples are drawn in fixed
// chunks of 2^16; chunk c is seeded by a mix of (seed, c) and the partial
// sums are reduced in ascending chunk order, so the result is bit-identical
// for any worker count. MINIMAX_CERT_THREADS caps the workers.
RiskPoint mc_risk(const PriorConfig& cfg, const std::vector<double>& beta,
                  long long n_samples, std::uint64_t seed,
                  Estimator estimator = Estimator::HALF_CAUCHY_BAYES);

// Delta and R_hat enclosures on an even w-grid over [0, w_max]; both
// endpoints are grid points. Requires steps >= 2.
std::vector<SureValue> sure_curve(const PriorConfig& cfg, double w_max, int steps);

}  // namespace minimax
