#include "minimax/certify.hpp"

#include <algorithm>
#include <stdexcept>

#include "minimax/errors.hpp"

namespace minimax {

const char* branch_name(CertBranch branch) {
  switch (branch) {
    case CertBranch::NONE: return "NONE";
    case CertBranch::THEOREM2_GENERAL: return "THEOREM2_GENERAL";
    case CertBranch::CASE_P8_10: return "CASE_P8_10";
    case CertBranch::CASE_P7: return "CASE_P7";
  }
  return "NONE";
}

const char* status_name(CertStatus status) {
  switch (status) {
    case CertStatus::MINIMAX_CERTIFIED: return "MINIMAX_CERTIFIED";
    case CertStatus::NOT_APPLICABLE: return "NOT_APPLICABLE";
    case CertStatus::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Theorem2Check check_theorem2(const PriorConfig& cfg) {
  Theorem2Check out;
  if (cfg.p < 3) {
    out.reason = "p < 3";
    return out;
  }
  const Rational a = rational_of(cfg.a);
  const Rational b = rational_of(cfg.b);
  const Rational q = cfg.q_exact();
  if (!(q > 0)) {
    out.reason = "q = p/2 + a <= 0";
    return out;
  }
  if (!(b < 1)) {
    out.reason = "b >= 1";
    return out;
  }
  if (a <= Rational(-3, 2)) {
    // q > 0 already gives a > -p/2, and 0 < b < 1 holds by construction.
  } else if (a < Rational(cfg.p) / 2 - 2) {
    // Denominator 2a + 3p > 0 here since a > -3/2 and p >= 3.
    if (!(b >= (8 * a + 12) / (2 * a + 3 * cfg.p))) {
      out.reason = "b below (8a+12)/(2a+3p)";
      return out;
    }
  } else {
    out.reason = "a >= p/2 - 2";
    return out;
  }
  out.big_psi_value = big_psi(b, q);
  if (!(out.big_psi_value.lo >= 0.0)) {
    out.reason = "Psi(b, p/2+a) lower bound < 0";
    return out;
  }
  out.applicable = true;
  return out;
}

Interval q3_lower_bound(const PriorConfig& cfg, const Rational& delta) {
  const Rational a = rational_of(cfg.a);
  return to_interval(Rational(cfg.p) / 2 - a - 2 - (cfg.p + 2 * a + 2) * delta);
}

Interval q3_lower_bound(const PriorConfig& cfg, double delta) {
  return q3_lower_bound(cfg, rational_of(delta));
}

bool check_unique_min_shape(const BoundPolynomial& poly) {
  const std::vector<Interval>& c = poly.poly.coeffs;
  if (c.size() < 3) {
    return false;
  }
  bool first_nonzero_seen = false;
  bool in_positive_block = false;
  bool saw_negative = false;
  for (std::size_t i = 1; i < c.size(); ++i) {
    const Interval& ci = c[i];
    if (ci.lo == 0.0 && ci.hi == 0.0) {
      continue;  // exact zeros may sit anywhere
    }
    if (ci.hi < 0.0) {
      if (!first_nonzero_seen && i != 1) {
        return false;  // descent needs the degree-1 coefficient negative
      }
      if (in_positive_block) {
        return false;  // negative after the positive block
      }
      saw_negative = true;
    } else if (ci.lo > 0.0) {
      if (!saw_negative) {
        return false;  // ascent before any descent
      }
      in_positive_block = true;
    } else {
      return false;  // sign indeterminate
    }
    first_nonzero_seen = true;
  }
  // A trailing negative already bailed out, so the top nonzero coefficient
  // is positive exactly when the positive block is open.
  return saw_negative && in_positive_block;
}

namespace {

// f_N(W) > 0 and f_N'(W) > 0 at one point; under the shape hypothesis this
// pins the minimum left of W. Returns true and appends the two degenerate
// point artifacts on success.
bool anchor_tail(const BoundPolynomial& poly, double start, double& W_out,
                 std::vector<PositivityCertificate>& anchors) {
  const IntervalPolynomial deriv = poly.poly.derivative();
  double W = std::max(60.0, start);
  const double cap = 60.0 * 1048576.0;
  while (true) {
    const Interval pt(W, W);
    const Interval fW = poly.poly.eval(pt);
    const Interval dW = deriv.eval(pt);
    const bool ok = fW.lo > 0.0 && dW.lo > 0.0;
    if (ok || W > cap) {
      PositivityCertificate value_cert;
      value_cert.domain = pt;
      value_cert.verified = fW.lo > 0.0;
      value_cert.splits = 0;
      value_cert.min_enclosure = fW;
      PositivityCertificate slope_cert;
      slope_cert.domain = pt;
      slope_cert.verified = dW.lo > 0.0;
      slope_cert.splits = 0;
      slope_cert.min_enclosure = dW;
      anchors.push_back(value_cert);
      anchors.push_back(slope_cert);
      W_out = W;
      return ok;
    }
    W *= 2.0;
  }
}

}  // namespace

FnPositivity verify_fN_positive(const BoundPolynomial& poly, const Region& region,
                                int max_depth) {
  FnPositivity out;
  const bool unbounded = region.kind != Region::Kind::BOUNDED;
  if (unbounded) {
    if (!check_unique_min_shape(poly)) {
      throw ShapeHypothesisUnverified(
          "verify_fN_positive: coefficient sign pattern does not guarantee a "
          "single descent, cannot reduce the unbounded tail");
    }
    out.shape_checked = true;
  }

  std::vector<PositivityCertificate> anchors;
  bool anchored = true;
  double W = 0.0;
  if (unbounded) {
    const double tail_from = region.kind == Region::Kind::HALF_LINE ? region.w1 : region.w2;
    anchored = anchor_tail(poly, tail_from, W, anchors);
    out.tail_start = W;
  }

  const IntervalFn fn = [&poly](const Interval& x) { return poly.poly.eval(x); };
  switch (region.kind) {
    case Region::Kind::HALF_LINE:
      out.parts.push_back(verify_positive_on(fn, Interval(region.w1, W), max_depth));
      break;
    case Region::Kind::BOUNDED:
      out.parts.push_back(verify_positive_on(fn, Interval(region.w1, region.w2), max_depth));
      break;
    case Region::Kind::SPLIT:
      out.parts.push_back(verify_positive_on(fn, Interval(0.0, region.w1), max_depth));
      out.parts.push_back(verify_positive_on(fn, Interval(region.w2, W), max_depth));
      break;
  }

  out.verified = anchored;
  for (const PositivityCertificate& part : out.parts) {
    out.verified = out.verified && part.verified;
  }
  out.parts.insert(out.parts.end(), anchors.begin(), anchors.end());
  return out;
}

namespace {

Interval elementwise_min(const Interval& x, const Interval& y) {
  return Interval(std::min(x.lo, y.lo), std::min(x.hi, y.hi));
}

bool margins_nonnegative(const Certificate& cert) {
  for (const BranchMargin& m : cert.branch_margins) {
    if (!(m.margin.lo >= 0.0)) {
      return false;
    }
  }
  return true;
}

Certificate certify_case_p8_10(const PriorConfig& cfg) {
  Certificate cert;
  cert.p = cfg.p;
  cert.a = cfg.a;
  cert.b = cfg.b;
  cert.branch = CertBranch::CASE_P8_10;
  cert.q12_margin = to_interval(Rational(cfg.p - 5) / 2);

  const BoundPolynomial f8 = build_fN(Rational(1, 2), cfg.q_exact(), 8, Rational(1, 8));
  const FnPositivity pos = verify_fN_positive(f8, Region::half_line(0.0));
  cert.q3_margin = q3_lower_bound(cfg, Rational(1, 8));
  cert.artifacts = pos.parts;
  cert.branch_margins.push_back({"case8_10_q12", cert.q12_margin, false, 0.0, 0.0});
  cert.branch_margins.push_back({"case8_10_q3", cert.q3_margin, false, 0.0, 0.0});
  cert.status = pos.verified && margins_nonnegative(cert) ? CertStatus::MINIMAX_CERTIFIED
                                                          : CertStatus::INCONCLUSIVE;
  if (!pos.verified) {
    cert.note = "f_8 positivity not established";
  }
  return cert;
}

Certificate certify_case_p7(const PriorConfig& cfg) {
  Certificate cert;
  cert.p = cfg.p;
  cert.a = cfg.a;
  cert.b = cfg.b;
  cert.branch = CertBranch::CASE_P7;
  cert.q12_margin = to_interval(Rational(cfg.p - 5) / 2);

  const double window_lo = 9.6;
  const double window_hi = 12.1;
  const Rational q = cfg.q_exact();

  // Outside the window: delta = 1/10 through f_20.
  const BoundPolynomial f20 = build_fN(Rational(1, 2), q, 20, Rational(1, 10));
  const FnPositivity outside = verify_fN_positive(f20, Region::split(window_lo, window_hi));
  const Interval margin_outside = q3_lower_bound(cfg, Rational(1, 10));

  // Everywhere (the window included): delta = 1/8 through f_8.
  const BoundPolynomial f8 = build_fN(Rational(1, 2), q, 8, Rational(1, 8));
  const FnPositivity global8 = verify_fN_positive(f8, Region::half_line(0.0));

  // Inside the window the second ratio is bounded away from zero:
  // -M(-1/2,p/2+1,w)/M(1/2,p/2+1,w) >= 2/25, via one polynomial lower bound
  // of the numerator and one upper bound of the denominator.
  const IntervalPolynomial num = window_numerator_poly(cfg.p, 20);
  const IntervalPolynomial den = window_denominator_poly(cfg.p, 20, window_hi);
  const Interval ratio_bound = to_interval(Rational(2, 25));
  const IntervalFn gap = [&](const Interval& x) {
    return num.eval(x) - ratio_bound * den.eval(x);
  };
  const PositivityCertificate window_cert =
      verify_positive_on(gap, Interval(window_lo, window_hi));
  const Interval margin_window =
      to_interval(Rational(cfg.p - 5) / 2 - Rational(cfg.p + 3) / 8 + q * Rational(2, 25));

  cert.q3_margin = elementwise_min(margin_outside, margin_window);
  cert.has_window = true;
  cert.window_lo = window_lo;
  cert.window_hi = window_hi;
  cert.branch_margins.push_back({"case7_q12", cert.q12_margin, false, 0.0, 0.0});
  cert.branch_margins.push_back({"case7_q3_outside_window", margin_outside, false, 0.0, 0.0});
  cert.branch_margins.push_back(
      {"case7_q3_window", margin_window, true, window_lo, window_hi});

  cert.artifacts = outside.parts;
  cert.artifacts.insert(cert.artifacts.end(), global8.parts.begin(), global8.parts.end());
  cert.artifacts.push_back(window_cert);

  const bool all_verified = outside.verified && global8.verified && window_cert.verified;
  cert.status = all_verified && margins_nonnegative(cert) ? CertStatus::MINIMAX_CERTIFIED
                                                          : CertStatus::INCONCLUSIVE;
  if (!all_verified) {
    cert.note = "a positivity artifact failed";
  }
  return cert;
}

}  // namespace

Certificate certify_prior(const PriorConfig& cfg) {
  Certificate cert;
  cert.p = cfg.p;
  cert.a = cfg.a;
  cert.b = cfg.b;
  const Theorem2Check check = check_theorem2(cfg);
  if (!check.applicable) {
    cert.status = CertStatus::NOT_APPLICABLE;
    cert.note = check.reason;
    return cert;
  }
  cert.branch = CertBranch::THEOREM2_GENERAL;
  const Rational a = rational_of(cfg.a);
  const Rational b = rational_of(cfg.b);
  cert.q12_margin = to_interval(Rational(cfg.p) / 2 - a - 2);
  cert.q3_margin = q3_lower_bound(cfg, (1 - b) / (b + 2));
  cert.branch_margins.push_back({"theorem2_q12", cert.q12_margin, false, 0.0, 0.0});
  cert.branch_margins.push_back({"theorem2_q3", cert.q3_margin, false, 0.0, 0.0});
  cert.status = margins_nonnegative(cert) ? CertStatus::MINIMAX_CERTIFIED
                                          : CertStatus::INCONCLUSIVE;
  return cert;
}

Certificate certify_half_cauchy(int p) {
  if (p < 3) {
    throw std::invalid_argument("certify_half_cauchy: requires p >= 3");
  }
  const PriorConfig cfg = half_cauchy_config(p);
  if (p <= 6) {
    Certificate cert;
    cert.p = p;
    cert.a = cfg.a;
    cert.b = cfg.b;
    cert.status = CertStatus::INCONCLUSIVE;
    cert.note = "no certification path below p = 7";
    return cert;
  }
  if (p >= 11) {
    return certify_prior(cfg);
  }
  if (p >= 8) {
    return certify_case_p8_10(cfg);
  }
  return certify_case_p7(cfg);
}

}  // namespace minimax
