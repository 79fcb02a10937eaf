#include "minimax/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

#include "minimax/errors.hpp"
#include "minimax/quadrature.hpp"

namespace minimax {

const char* estimator_name(Estimator est) {
  switch (est) {
    case Estimator::HALF_CAUCHY_BAYES: return "HALF_CAUCHY_BAYES";
    case Estimator::BETA_PRIOR_BAYES: return "BETA_PRIOR_BAYES";
    case Estimator::JAMES_STEIN: return "JAMES_STEIN";
    case Estimator::IDENTITY: return "IDENTITY";
  }
  return "IDENTITY";
}

Estimator estimator_from_name(const std::string& name) {
  std::string s;
  s.reserve(name.size());
  for (char ch : name) {
    s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  if (s == "bayes" || s == "half_cauchy_bayes") return Estimator::HALF_CAUCHY_BAYES;
  if (s == "beta_prior_bayes") return Estimator::BETA_PRIOR_BAYES;
  if (s == "james_stein" || s == "js") return Estimator::JAMES_STEIN;
  if (s == "identity") return Estimator::IDENTITY;
  throw std::invalid_argument("unknown estimator: " + name);
}

std::vector<double> james_stein(const std::vector<double>& y) {
  if (y.size() < 3) {
    throw std::invalid_argument("james_stein: requires p >= 3");
  }
  double norm_sq = 0.0;
  for (double v : y) {
    norm_sq += v * v;
  }
  if (norm_sq == 0.0) {
    throw ZeroVector("james_stein: undefined at y = 0");
  }
  const double factor = 1.0 - (static_cast<double>(y.size()) - 2.0) / norm_sq;
  std::vector<double> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    out[i] = factor * y[i];
  }
  return out;
}

namespace {

// Rigorous series evaluation overflows past w ~ 700; switch to quadrature
// well before that.
constexpr double kSeriesWLimit = 400.0;

}  // namespace

double shrink_mid_direct(double y_norm_sq, const PriorConfig& cfg) {
  if (0.5 * y_norm_sq <= kSeriesWLimit) {
    return shrink_factor(y_norm_sq, cfg).mid();
  }
  return 1.0 - posterior_kappa_oracle(y_norm_sq, cfg).value;
}

double risk_mid_direct(double y_norm_sq, const PriorConfig& cfg) {
  if (0.5 * y_norm_sq <= kSeriesWLimit) {
    return risk_estimate(y_norm_sq, cfg).risk.mid();
  }
  return risk_quadrature_oracle(y_norm_sq, cfg).value;
}

ShrinkCache::ShrinkCache(const PriorConfig& cfg) : cfg_(cfg) {
  for (int intervals = 2048; intervals <= 32768; intervals *= 2) {
    build(intervals);
    double worst = 0.0;
    for (int k = 0; k < intervals; ++k) {
      const double u = (k + 0.5) * step_;
      const double y2 = std::expm1(u);
      const double s_err = std::fabs(interp(shrink_, y2) - shrink_mid_direct(y2, cfg_));
      const double r_direct = risk_mid_direct(y2, cfg_);
      const double r_err =
          std::fabs(interp(risk_, y2) - r_direct) / std::max(1.0, std::fabs(r_direct));
      worst = std::max(worst, std::max(s_err, r_err));
    }
    checked_error_ = worst;
    if (worst <= 1e-8) {
      return;
    }
  }
  throw TolExceeded("ShrinkCache: interpolation error stayed above 1e-8");
}

void ShrinkCache::build(int intervals) {
  const double u_max = std::log1p(y_max_);
  step_ = u_max / intervals;
  shrink_.assign(static_cast<std::size_t>(intervals) + 1, 0.0);
  risk_.assign(static_cast<std::size_t>(intervals) + 1, 0.0);
  for (int k = 0; k <= intervals; ++k) {
    const double y2 = std::expm1(k * step_);
    shrink_[static_cast<std::size_t>(k)] = shrink_mid_direct(y2, cfg_);
    risk_[static_cast<std::size_t>(k)] = risk_mid_direct(y2, cfg_);
  }
}

double ShrinkCache::interp(const std::vector<double>& v, double y_norm_sq) const {
  const int n = static_cast<int>(v.size()) - 1;
  const double t = std::log1p(y_norm_sq) / step_;
  int k = static_cast<int>(t);
  if (k < 0) k = 0;
  if (k > n - 1) k = n - 1;
  const double s = t - k;
  // Mirror extrapolation keeps the edge stencils second-order.
  auto at = [&](int i) {
    if (i < 0) return 2.0 * v[0] - v[1];
    if (i > n) return 2.0 * v[static_cast<std::size_t>(n)] - v[static_cast<std::size_t>(n - 1)];
    return v[static_cast<std::size_t>(i)];
  };
  const double v0 = at(k - 1);
  const double v1 = at(k);
  const double v2 = at(k + 1);
  const double v3 = at(k + 2);
  return 0.5 * (2.0 * v1 + s * (v2 - v0) + s * s * (2.0 * v0 - 5.0 * v1 + 4.0 * v2 - v3) +
                s * s * s * (3.0 * (v1 - v2) + v3 - v0));
}

double ShrinkCache::shrink_mid(double y_norm_sq) const {
  if (y_norm_sq >= y_max_) {
    return shrink_mid_direct(y_norm_sq, cfg_);
  }
  return interp(shrink_, y_norm_sq);
}

double ShrinkCache::risk_mid(double y_norm_sq) const {
  if (y_norm_sq >= y_max_) {
    return risk_mid_direct(y_norm_sq, cfg_);
  }
  return interp(risk_, y_norm_sq);
}

namespace {

constexpr long long kChunk = 1 << 16;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t chunk) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (chunk + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

struct ChunkSums {
  long double err = 0.0L;
  long double err_sq = 0.0L;
  long double sure = 0.0L;
  long double sure_sq = 0.0L;
};

int worker_count(long long n_chunks) {
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MINIMAX_CERT_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) {
      workers = parsed;
    }
  }
  workers = std::max(1, std::min(workers, 64));
  return static_cast<int>(std::min<long long>(workers, n_chunks));
}

}  // namespace

RiskPoint mc_risk(const PriorConfig& cfg, const std::vector<double>& beta,
                  long long n_samples, std::uint64_t seed, Estimator estimator) {
  if (static_cast<int>(beta.size()) != cfg.p) {
    throw std::invalid_argument("mc_risk: beta dimension must equal cfg.p");
  }
  if (n_samples < 1000) {
    throw std::invalid_argument("mc_risk: requires n_samples >= 1000");
  }
  const bool bayes = estimator == Estimator::HALF_CAUCHY_BAYES ||
                     estimator == Estimator::BETA_PRIOR_BAYES;
  if (bayes) {
    estimator = cfg.is_half_cauchy() ? Estimator::HALF_CAUCHY_BAYES
                                     : Estimator::BETA_PRIOR_BAYES;
  }
  if (estimator == Estimator::JAMES_STEIN && cfg.p < 3) {
    throw std::invalid_argument("mc_risk: James-Stein requires p >= 3");
  }

  std::optional<ShrinkCache> cache;
  if (bayes) {
    cache.emplace(cfg);
  }

  const int p = cfg.p;
  const long long n_chunks = (n_samples + kChunk - 1) / kChunk;
  std::vector<ChunkSums> sums(static_cast<std::size_t>(n_chunks));
  std::atomic<long long> next{0};

  auto run_chunk = [&](long long c) {
    const long long begin = c * kChunk;
    const long long count = std::min(kChunk, n_samples - begin);
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(c)));
    std::normal_distribution<double> normal(0.0, 1.0);
    ChunkSums local;
    std::vector<double> y(static_cast<std::size_t>(p));
    for (long long i = 0; i < count; ++i) {
      double y_norm_sq = 0.0;
      double z_norm_sq = 0.0;
      for (int j = 0; j < p; ++j) {
        const double z = normal(rng);
        z_norm_sq += z * z;
        const double yj = beta[static_cast<std::size_t>(j)] + z;
        y[static_cast<std::size_t>(j)] = yj;
        y_norm_sq += yj * yj;
      }
      double err = 0.0;
      double sure = 0.0;
      switch (estimator) {
        case Estimator::IDENTITY:
          err = z_norm_sq;
          sure = static_cast<double>(p);
          break;
        case Estimator::JAMES_STEIN: {
          // Zero vectors have probability zero; fall back to identity there.
          const double factor =
              y_norm_sq > 0.0 ? 1.0 - (p - 2.0) / y_norm_sq : 1.0;
          for (int j = 0; j < p; ++j) {
            const double d =
                factor * y[static_cast<std::size_t>(j)] - beta[static_cast<std::size_t>(j)];
            err += d * d;
          }
          sure = y_norm_sq > 0.0
                     ? p - (p - 2.0) * (p - 2.0) / y_norm_sq
                     : static_cast<double>(p);
          break;
        }
        default: {
          const double scale = cache->shrink_mid(y_norm_sq);
          for (int j = 0; j < p; ++j) {
            const double d =
                scale * y[static_cast<std::size_t>(j)] - beta[static_cast<std::size_t>(j)];
            err += d * d;
          }
          sure = cache->risk_mid(y_norm_sq);
          break;
        }
      }
      local.err += err;
      local.err_sq += static_cast<long double>(err) * err;
      local.sure += sure;
      local.sure_sq += static_cast<long double>(sure) * sure;
    }
    sums[static_cast<std::size_t>(c)] = local;
  };

  const int workers = worker_count(n_chunks);
  if (workers <= 1) {
    for (long long c = 0; c < n_chunks; ++c) {
      run_chunk(c);
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (long long c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) {
          run_chunk(c);
        }
      });
    }
    for (std::thread& th : pool) {
      th.join();
    }
  }

  ChunkSums total;
  for (const ChunkSums& s : sums) {  // fixed order: determinism
    total.err += s.err;
    total.err_sq += s.err_sq;
    total.sure += s.sure;
    total.sure_sq += s.sure_sq;
  }

  const long double n = static_cast<long double>(n_samples);
  const long double risk_mean = total.err / n;
  const long double risk_var = (total.err_sq - n * risk_mean * risk_mean) / (n - 1);
  const long double sure_mean = total.sure / n;
  const long double sure_var = (total.sure_sq - n * sure_mean * sure_mean) / (n - 1);

  double beta_norm_sq = 0.0;
  for (double v : beta) {
    beta_norm_sq += v * v;
  }

  RiskPoint out;
  out.estimator = estimator;
  out.beta_norm = std::sqrt(beta_norm_sq);
  out.n_samples = n_samples;
  out.empirical_risk = static_cast<double>(risk_mean);
  out.std_err = static_cast<double>(std::sqrt(std::max(risk_var, 0.0L) / n));
  out.sure_mean = static_cast<double>(sure_mean);
  out.sure_std_err = static_cast<double>(std::sqrt(std::max(sure_var, 0.0L) / n));
  return out;
}

std::vector<SureValue> sure_curve(const PriorConfig& cfg, double w_max, int steps) {
  if (!(w_max > 0.0) || !std::isfinite(w_max)) {
    throw std::invalid_argument("sure_curve: requires finite w_max > 0");
  }
  if (steps < 2) {
    throw std::invalid_argument("sure_curve: requires steps >= 2");
  }
  std::vector<SureValue> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double w =
        i == steps - 1 ? w_max : w_max * static_cast<double>(i) / (steps - 1);
    out.push_back(risk_estimate(2.0 * w, cfg));
  }
  return out;
}

}  // namespace minimax
