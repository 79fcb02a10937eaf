// Acceptance gate: one line per criterion, exit 0 only if all pass.
// Criteria 1 and 10 drive the installed CLI through MINIMAX_CLI; everything
// else uses the library directly.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "minimax/certificate_io.hpp"
#include "minimax/certify.hpp"
#include "minimax/errors.hpp"
#include "minimax/interval.hpp"
#include "minimax/kummer.hpp"
#include "minimax/newton.hpp"
#include "minimax/psi.hpp"
#include "minimax/quadrature.hpp"
#include "minimax/rational.hpp"
#include "minimax/simulate.hpp"
#include "minimax/sure.hpp"

namespace {

using minimax::Interval;
using minimax::PriorConfig;
using minimax::Rational;

int g_failures = 0;

void run_criterion(int index, const std::string& label,
                   const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const auto stop = std::chrono::steady_clock::now();
  const double secs =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count() / 1000.0;
  std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", index,
              label.c_str(), secs, detail.empty() ? "" : " - ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string cli_path() {
  const char* env = std::getenv("MINIMAX_CLI");
  return env ? env : "";
}

// Runs the CLI via the shell, returns the exit code or -1.
int run_cli(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  if (rc == -1 || !WIFEXITED(rc)) return -1;
  return WEXITSTATUS(rc);
}

int run_cli_to_file(const std::string& args, const std::string& out) {
  const std::string cmd = cli_path() + " " + args + " --out " + out + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  if (rc == -1 || !WIFEXITED(rc)) return -1;
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool criterion_certify_range(std::string& detail) {
  if (cli_path().empty()) {
    detail = "MINIMAX_CLI not set";
    return false;
  }
  for (int p = 7; p <= 30; ++p) {
    const int rc = run_cli("certify --p " + std::to_string(p));
    if (rc != 0) {
      detail = "p=" + std::to_string(p) + " exit " + std::to_string(rc);
      return false;
    }
    minimax::Certificate cert = minimax::certify_half_cauchy(p);
    if (cert.status != minimax::CertStatus::MINIMAX_CERTIFIED) {
      detail = "p=" + std::to_string(p) + " not certified";
      return false;
    }
  }
  for (int p = 3; p <= 6; ++p) {
    const int rc = run_cli("certify --p " + std::to_string(p));
    if (rc != 2) {
      detail = "p=" + std::to_string(p) + " exit " + std::to_string(rc);
      return false;
    }
    minimax::Certificate cert = minimax::certify_half_cauchy(p);
    if (cert.status != minimax::CertStatus::INCONCLUSIVE) {
      detail = "p=" + std::to_string(p) + " unexpected status";
      return false;
    }
  }
  return true;
}

const minimax::BranchMargin* find_margin(const minimax::Certificate& cert,
                                         const std::string& name) {
  for (const minimax::BranchMargin& m : cert.branch_margins) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

bool criterion_margins(std::string& detail) {
  minimax::Certificate c7 = minimax::certify_half_cauchy(7);
  const minimax::BranchMargin* window = find_margin(c7, "case7_q3_window");
  const minimax::BranchMargin* outside = find_margin(c7, "case7_q3_outside_window");
  if (window == nullptr || outside == nullptr) {
    detail = "p=7 margins missing";
    return false;
  }
  if (!(window->margin.contains(0.07) && window->margin.lo > 0.0 &&
        window->margin.width() <= 1e-6)) {
    detail = "p=7 window margin";
    return false;
  }
  if (!(outside->margin.contains(0.0) && outside->margin.width() <= 1e-6)) {
    detail = "p=7 complement margin";
    return false;
  }
  for (int p : {8, 9, 10}) {
    minimax::Certificate c = minimax::certify_half_cauchy(p);
    const minimax::BranchMargin* q3 = find_margin(c, "case8_10_q3");
    if (q3 == nullptr || !q3->margin.contains((3.0 * p - 23.0) / 8.0) ||
        q3->margin.width() > 1e-6) {
      detail = "p=" + std::to_string(p) + " q3 margin";
      return false;
    }
  }
  return true;
}

bool criterion_psi(std::string& detail) {
  Interval v = minimax::big_psi(Rational(1, 2), Rational(6));
  char buf[64];
  std::snprintf(buf, sizeof(buf), "lower bound %.6f", v.lo);
  detail = buf;
  return v.lo > 0.2;
}

bool criterion_f8(std::string& detail) {
  for (int p : {7, 8, 9, 10}) {
    const auto start = std::chrono::steady_clock::now();
    minimax::BoundPolynomial f = minimax::build_fN(
        Rational(1, 2), Rational(p) / 2 + Rational(1, 2), 8, Rational(1, 8));
    minimax::FnPositivity pos =
        minimax::verify_fN_positive(f, minimax::Region::half_line(0.0));
    const double secs = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count() /
                        1000.0;
    if (!pos.verified || secs >= 10.0) {
      detail = "p=" + std::to_string(p) + (pos.verified ? " too slow" : " not verified");
      return false;
    }
  }
  return true;
}

bool criterion_p7_pieces(std::string& detail) {
  minimax::BoundPolynomial f20 =
      minimax::build_fN(Rational(1, 2), Rational(4), 20, Rational(1, 10));
  minimax::FnPositivity split =
      minimax::verify_fN_positive(f20, minimax::Region::split(9.6, 12.1));
  if (!split.verified) {
    detail = "degree 20 piece not verified";
    return false;
  }
  minimax::IntervalPolynomial num = minimax::window_numerator_poly(7, 20);
  minimax::IntervalPolynomial den = minimax::window_denominator_poly(7, 20, 12.1);
  const Interval bound = minimax::to_interval(Rational(2, 25));
  minimax::PositivityCertificate gap = minimax::verify_positive_on(
      [&](const Interval& w) { return num.eval(w) - bound * den.eval(w); },
      Interval(9.6, 12.1));
  if (!gap.verified) {
    detail = "window ratio bound not verified";
    return false;
  }
  return true;
}

bool criterion_delta_oracle(std::string& detail) {
  std::mt19937_64 rng(314159);
  std::uniform_real_distribution<double> b_dist(0.05, 3.0);
  std::uniform_real_distribution<double> w_dist(0.0, 60.0);
  int done = 0;
  double worst = 0.0;
  while (done < 200) {
    const int p = 3 + static_cast<int>(rng() % 18);
    std::uniform_real_distribution<double> a_dist(-0.5 * p + 0.1, 3.0);
    PriorConfig cfg(p, a_dist(rng), b_dist(rng));
    if (!cfg.has_positive_q()) continue;
    const double w = w_dist(rng);
    Interval enclosure = minimax::delta_sure(w, cfg);
    minimax::QuadResult oracle = minimax::delta_quadrature_oracle(w, cfg);
    const double err = std::fabs(enclosure.mid() - oracle.value);
    if (err > enclosure.width() + 1e-6) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "p=%d a=%.3f b=%.3f w=%.3f err=%.3g", p, cfg.a,
                    cfg.b, w, err);
      detail = buf;
      return false;
    }
    worst = std::max(worst, err);
    Interval at0 = minimax::delta_sure(0.0, cfg);
    if (!(at0.contains(static_cast<double>(p)) && at0.width() <= 1e-10)) {
      detail = "origin value p=" + std::to_string(p);
      return false;
    }
    ++done;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "worst deviation %.3g", worst);
  detail = buf;
  return true;
}

bool criterion_cardano(std::string& detail) {
  std::mt19937_64 rng(271828);
  std::uniform_real_distribution<double> g2_dist(0.1, 3.0);
  std::uniform_real_distribution<double> g4_dist(0.05, 40.0);
  int done = 0;
  while (done < 100) {
    const double g2 = g2_dist(rng);
    const double g4 = g4_dist(rng);
    const Rational g2r = minimax::rational_of(g2);
    const Rational g4r = minimax::rational_of(g4);
    if (9 * g4r <= 8 * g2r * g2r * g2r) continue;
    minimax::CardanoProblem prob = minimax::cardano_min(g2r, g4r);

    // Unimodal, so a coarse pass plus a fine pass realizes a 1e-6 grid.
    const auto quartic = [g2, g4](double x) {
      return -x - g2 * x * x / 2.0 + g4 * x * x * x * x / 24.0;
    };
    double best = 0.0, best_x = 0.0;
    const double hi = 3.0 / g2 + 1.0;
    for (double x = 0.0; x <= hi; x += 1e-3) {
      const double v = quartic(x);
      if (v < best) {
        best = v;
        best_x = x;
      }
    }
    for (double x = best_x - 2e-3; x <= best_x + 2e-3; x += 1e-6) {
      const double v = quartic(x);
      if (v < best) {
        best = v;
        best_x = x;
      }
    }
    if (std::fabs(prob.f_min.mid() - best) > 1e-8 * std::fabs(best)) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "g2=%.4f g4=%.4f fmin=%.12g grid=%.12g", g2, g4,
                    prob.f_min.mid(), best);
      detail = buf;
      return false;
    }

    // F' root by interval Newton, bracketed beyond the inflection point.
    const auto fp = [g2, g4](const Interval& x) {
      return -1.0 - g2 * x + g4 * minimax::powi(x, 3) / 6.0;
    };
    const auto fpp = [g2, g4](const Interval& x) {
      return g4 * minimax::powi(x, 2) / 2.0 - g2;
    };
    const double inflect = std::sqrt(2.0 * g2 / g4) * 1.0001;
    Interval root = minimax::interval_newton(fp, fpp, Interval(inflect, hi + 1.0));
    if (root.lo > prob.x_star.hi || prob.x_star.lo > root.hi) {
      detail = "stationary point mismatch";
      return false;
    }
    ++done;
  }
  return true;
}

bool criterion_interval_soundness(std::string& detail) {
  // The two decimal enclosures sum to a bracket of [3.14, 3.16]: the real
  // endpoints must be enclosed, and the computed endpoints must sit within
  // an ulp-scale neighborhood of the decimal targets.
  Interval demo = Interval(1.41, 1.42) + Interval(1.73, 1.74);
  if (!(demo.lo <= 3.14 && demo.hi >= 3.16 && demo.lo > 3.14 - 1e-14 &&
        demo.hi < 3.16 + 1e-14)) {
    detail = "decimal demo sum";
    return false;
  }

  const auto f = [](const Interval& x) { return x * x - 2.0; };
  const auto df = [](const Interval& x) { return 2.0 * x; };
  int iterations = 0;
  Interval root = minimax::interval_newton(f, df, Interval(1.0, 2.0), 100,
                                           [&](int, const Interval&) { ++iterations; });
  if (!(root.contains(std::sqrt(2.0)) && root.width() < 1e-12 && iterations <= 100)) {
    detail = "sqrt2 enclosure";
    return false;
  }

  std::mt19937_64 rng(161803);
  std::uniform_real_distribution<double> val(-40.0, 40.0);
  std::uniform_real_distribution<double> pad(0.0, 1e-2);
  long long checks = 0;
  while (checks < 100000) {
    const double xa = val(rng), ya = val(rng);
    Interval x(xa - pad(rng), xa + pad(rng));
    Interval y(ya - pad(rng), ya + pad(rng));
    const long double xr = xa, yr = ya;
    const auto holds = [](const Interval& z, long double r) {
      return static_cast<long double>(z.lo) <= r && r <= static_cast<long double>(z.hi);
    };
    bool ok = holds(x + y, xr + yr) && holds(x - y, xr - yr) && holds(x * y, xr * yr) &&
              holds(minimax::powi(x, 2), xr * xr) && holds(minimax::powi(x, 3), xr * xr * xr);
    checks += 5;
    if (!y.contains(0.0)) {
      ok = ok && holds(x / y, xr / yr);
      ++checks;
    }
    if (x.lo > 0.0) {
      ok = ok && holds(minimax::sqrt(x), sqrtl(xr)) && holds(minimax::cbrt(x), cbrtl(xr));
      checks += 2;
    }
    if (x.hi < 700.0 && x.lo > -700.0) {
      ok = ok && holds(minimax::exp(x), expl(xr));
      ++checks;
    }
    if (!ok) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "containment failed near x=%.17g y=%.17g", xa, ya);
      detail = buf;
      return false;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%lld containment checks", checks);
  detail = buf;
  return checks >= 100000;
}

bool criterion_monte_carlo(std::string& detail) {
  const std::uint64_t seed = 20240817;
  for (int p : {7, 9, 12}) {
    const auto start = std::chrono::steady_clock::now();
    PriorConfig cfg = minimax::half_cauchy_config(p);
    for (double norm : {0.0, 1.0, 2.0, 5.0, 10.0, 20.0}) {
      std::vector<double> beta(static_cast<std::size_t>(p), 0.0);
      beta[0] = norm;
      minimax::RiskPoint pt = minimax::mc_risk(cfg, beta, 1000000, seed);
      const double combined = std::sqrt(pt.std_err * pt.std_err +
                                        pt.sure_std_err * pt.sure_std_err);
      if (std::fabs(pt.empirical_risk - pt.sure_mean) > 3.0 * combined) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "p=%d norm=%.0f sure gap %.4f > 3x%.4f", p, norm,
                      std::fabs(pt.empirical_risk - pt.sure_mean), combined);
        detail = buf;
        return false;
      }
      if (pt.empirical_risk > p + 3.0 * pt.std_err) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "p=%d norm=%.0f risk %.4f above p", p, norm,
                      pt.empirical_risk);
        detail = buf;
        return false;
      }
    }
    std::vector<double> origin(static_cast<std::size_t>(p), 0.0);
    minimax::RiskPoint js =
        minimax::mc_risk(cfg, origin, 1000000, seed, minimax::Estimator::JAMES_STEIN);
    if (std::fabs(js.empirical_risk - 2.0) > 3.0 * js.std_err) {
      detail = "james stein origin risk p=" + std::to_string(p);
      return false;
    }
    const double secs = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count() /
                        1000.0;
    if (secs >= 180.0) {
      detail = "p=" + std::to_string(p) + " too slow";
      return false;
    }
  }
  return true;
}

bool criterion_determinism(std::string& detail) {
  if (cli_path().empty()) {
    detail = "MINIMAX_CLI not set";
    return false;
  }
  char tmpl[] = "/tmp/minimax_accept_XXXXXX";
  const char* dir = mkdtemp(tmpl);
  if (dir == nullptr) {
    detail = "mkdtemp failed";
    return false;
  }
  const std::string d(dir);
  setenv("SOURCE_DATE_EPOCH", "0", 1);

  if (run_cli_to_file("certify --p 7", d + "/c1.json") != 0 ||
      run_cli_to_file("certify --p 7", d + "/c2.json") != 0) {
    detail = "certify run failed";
    return false;
  }
  if (slurp(d + "/c1.json") != slurp(d + "/c2.json") || slurp(d + "/c1.json").empty()) {
    detail = "certificates differ";
    return false;
  }

  const std::string sim_args = "simulate --p 7 --beta-norms 0,2 --samples 100000 --seed 7";
  setenv("MINIMAX_CERT_THREADS", "1", 1);
  const int s1 = run_cli_to_file(sim_args, d + "/s1.csv");
  setenv("MINIMAX_CERT_THREADS", "4", 1);
  const int s2 = run_cli_to_file(sim_args, d + "/s2.csv");
  unsetenv("MINIMAX_CERT_THREADS");
  if (s1 != 0 || s2 != 0) {
    detail = "simulate run failed";
    return false;
  }
  if (slurp(d + "/s1.csv") != slurp(d + "/s2.csv") || slurp(d + "/s1.csv").empty()) {
    detail = "simulation CSVs differ across worker counts";
    return false;
  }

  if (run_cli_to_file("sure-curve --p 7 --w-max 20 --steps 41", d + "/t1.csv") != 0 ||
      run_cli_to_file("sure-curve --p 7 --w-max 20 --steps 41", d + "/t2.csv") != 0) {
    detail = "sure-curve run failed";
    return false;
  }
  if (slurp(d + "/t1.csv") != slurp(d + "/t2.csv")) {
    detail = "curves differ";
    return false;
  }
  unsetenv("SOURCE_DATE_EPOCH");
  return true;
}

}  // namespace

int main() {
  run_criterion(1, "certification status for p in 3..30", criterion_certify_range);
  run_criterion(2, "margin enclosures hit their rational targets", criterion_margins);
  run_criterion(3, "psi functional lower bound at b=1/2, q=6", criterion_psi);
  run_criterion(4, "degree eight positivity on the half line", criterion_f8);
  run_criterion(5, "degree twenty split region and window ratio bound", criterion_p7_pieces);
  run_criterion(6, "delta enclosures against the quadrature oracle", criterion_delta_oracle);
  run_criterion(7, "closed form quartic minimum vs grid and newton", criterion_cardano);
  run_criterion(8, "interval operation containment sweep", criterion_interval_soundness);
  run_criterion(9, "monte carlo risk against sure at scale", criterion_monte_carlo);
  run_criterion(10, "byte identical outputs across runs and workers", criterion_determinism);

  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}
