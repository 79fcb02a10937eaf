#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minimax/certificate_io.hpp"
#include "minimax/certify.hpp"
#include "minimax/simulate.hpp"

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Writes to the path when given, stdout otherwise.
int write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return 1;
  }
  out << payload;
  return out.good() ? 0 : 1;
}

int run_certify(int p, double a, double b, const std::string& out_path) {
  const minimax::Certificate cert =
      (a == 0.5 && b == 0.5) ? minimax::certify_half_cauchy(p)
                             : minimax::certify_prior(minimax::PriorConfig(p, a, b));
  const int io = write_output(out_path, minimax::render_certificate(cert));
  if (io != 0) {
    return io;
  }
  return cert.status == minimax::CertStatus::MINIMAX_CERTIFIED ? 0 : 2;
}

int run_sure_curve(int p, double a, double b, double w_max, int steps,
                   const std::string& out_path) {
  const minimax::PriorConfig cfg(p, a, b);
  const std::vector<minimax::SureValue> rows = minimax::sure_curve(cfg, w_max, steps);
  std::ostringstream csv;
  csv << "w,delta_lo,delta_hi,risk_lo,risk_hi\n";
  for (const minimax::SureValue& row : rows) {
    csv << fmt17(row.w) << ',' << fmt17(row.delta.lo) << ',' << fmt17(row.delta.hi) << ','
        << fmt17(row.risk.lo) << ',' << fmt17(row.risk.hi) << '\n';
  }
  return write_output(out_path, csv.str());
}

int run_simulate(int p, double a, double b, const std::vector<double>& beta_norms,
                 long long samples, std::uint64_t seed,
                 const std::vector<std::string>& estimators, const std::string& out_path) {
  const minimax::PriorConfig cfg(p, a, b);
  std::ostringstream csv;
  csv << "estimator,beta_norm,n,risk,stderr,sure_mean\n";
  for (const std::string& name : estimators) {
    const minimax::Estimator est = minimax::estimator_from_name(name);
    for (double norm : beta_norms) {
      std::vector<double> beta(static_cast<std::size_t>(p), 0.0);
      beta[0] = norm;  // risk depends on beta only through its norm
      const minimax::RiskPoint point = minimax::mc_risk(cfg, beta, samples, seed, est);
      csv << minimax::estimator_name(point.estimator) << ',' << fmt17(point.beta_norm) << ','
          << point.n_samples << ',' << fmt17(point.empirical_risk) << ','
          << fmt17(point.std_err) << ',' << fmt17(point.sure_mean) << '\n';
    }
  }
  return write_output(out_path, csv.str());
}

void print_iteration(int i, const minimax::Interval& x) {
  std::printf("%4d  %-24.17g %-24.17g %.3e\n", i, x.lo, x.hi, x.width());
}

int run_newton(const std::string& demo) {
  using minimax::Interval;
  if (demo == "sqrt2") {
    const auto f = [](const Interval& x) { return x * x - 2.0; };
    const auto df = [](const Interval& x) { return 2.0 * x; };
    std::printf("%4s  %-24s %-24s %s\n", "i", "lo", "hi", "width");
    const Interval root =
        minimax::interval_newton(f, df, Interval(1.0, 2.0), 100, print_iteration);
    std::printf("enclosure [%.17g, %.17g], width %.3e\n", root.lo, root.hi, root.width());
    return 0;
  }
  if (demo == "cardano") {
    // F(x) = -x - x^2/2 + x^4/12: stationary point of the quartic used by
    // the closed-form minimization, gamma2 = 1, gamma4 = 2.
    const auto f = [](const Interval& x) {
      return -1.0 - x + x * x * x / 3.0;
    };
    const auto df = [](const Interval& x) { return x * x - 1.0; };
    std::printf("%4s  %-24s %-24s %s\n", "i", "lo", "hi", "width");
    const Interval root =
        minimax::interval_newton(f, df, Interval(1.5, 4.0), 100, print_iteration);
    const minimax::CardanoProblem closed = minimax::cardano_min(1.0, 2.0);
    std::printf("newton    [%.17g, %.17g]\n", root.lo, root.hi);
    std::printf("x_star    [%.17g, %.17g]\n", closed.x_star.lo, closed.x_star.hi);
    std::printf("f_min     [%.17g, %.17g]\n", closed.f_min.lo, closed.f_min.hi);
    return 0;
  }
  std::cerr << "error: unknown demo '" << demo << "' (expected sqrt2 or cardano)\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimaxity certificates and risk tooling for beta-type shrinkage priors"};
  app.require_subcommand(1);

  int p = 7;
  double a = 0.5;
  double b = 0.5;
  std::string out_path;

  CLI::App* certify = app.add_subcommand("certify", "Emit a minimaxity certificate");
  certify->add_option("--p", p, "Dimension")->required();
  certify->add_option("--a", a, "Prior exponent a")->capture_default_str();
  certify->add_option("--b", b, "Prior exponent b")->capture_default_str();
  certify->add_option("--out", out_path, "Output path (default stdout)");

  double w_max = 50.0;
  int steps = 101;
  CLI::App* curve = app.add_subcommand("sure-curve", "Tabulate Delta and R_hat enclosures");
  curve->add_option("--p", p, "Dimension")->required();
  curve->add_option("--a", a, "Prior exponent a")->capture_default_str();
  curve->add_option("--b", b, "Prior exponent b")->capture_default_str();
  curve->add_option("--w-max", w_max, "Grid upper end in w")->capture_default_str();
  curve->add_option("--steps", steps, "Grid points including both ends")->capture_default_str();
  curve->add_option("--out", out_path, "Output path (default stdout)");

  std::vector<double> beta_norms{0.0, 1.0, 2.0, 5.0, 10.0, 20.0};
  long long samples = 1000000;
  std::uint64_t seed = 1;
  std::vector<std::string> estimators{"bayes", "james_stein", "identity"};
  CLI::App* simulate = app.add_subcommand("simulate", "Monte-Carlo risk table");
  simulate->add_option("--p", p, "Dimension")->required();
  simulate->add_option("--a", a, "Prior exponent a")->capture_default_str();
  simulate->add_option("--b", b, "Prior exponent b")->capture_default_str();
  simulate->add_option("--beta-norms", beta_norms, "Comma list of ||beta|| values")
      ->delimiter(',')->capture_default_str();
  simulate->add_option("--samples", samples, "Samples per point")->capture_default_str();
  simulate->add_option("--seed", seed, "RNG seed")->capture_default_str();
  simulate->add_option("--estimators", estimators, "Comma list of estimators")
      ->delimiter(',')->capture_default_str();
  simulate->add_option("--out", out_path, "Output path (default stdout)");

  std::string demo;
  CLI::App* newton = app.add_subcommand("newton", "Interval Newton iteration demo");
  newton->add_option("--demo", demo, "One of: sqrt2, cardano")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (certify->parsed()) {
      return run_certify(p, a, b, out_path);
    }
    if (curve->parsed()) {
      return run_sure_curve(p, a, b, w_max, steps, out_path);
    }
    if (simulate->parsed()) {
      return run_simulate(p, a, b, beta_norms, samples, seed, estimators, out_path);
    }
    if (newton->parsed()) {
      return run_newton(demo);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
