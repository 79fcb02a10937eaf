#pragma once

#include <string>
#include <vector>

#include "minimax/bound_poly.hpp"
#include "minimax/interval.hpp"
#include "minimax/newton.hpp"
#include "minimax/prior.hpp"
#include "minimax/psi.hpp"
#include "minimax/rational.hpp"

namespace minimax {

enum class CertBranch { NONE, THEOREM2_GENERAL, CASE_P8_10, CASE_P7 };
enum class CertStatus { MINIMAX_CERTIFIED, NOT_APPLICABLE, INCONCLUSIVE };

const char* branch_name(CertBranch branch);
const char* status_name(CertStatus status);

// One named lower bound on Delta over a piece of the w axis.
struct BranchMargin {
  std::string name;
  Interval margin;
  bool has_window = false;
  double window_lo = 0.0;
  double window_hi = 0.0;
};

// Machine-checkable record of one certification run. MINIMAX_CERTIFIED
// requires every margin to have a nonnegative lower endpoint and every
// attached positivity artifact to be verified; margins keep both interval
// endpoints so the record can be re-audited without re-running.
struct Certificate {
  int p = 0;
  double a = 0.0;
  double b = 0.0;
  CertBranch branch = CertBranch::NONE;
  CertStatus status = CertStatus::INCONCLUSIVE;
  Interval q12_margin{0.0, 0.0};  // lower bound of Delta on Q1 U Q2
  Interval q3_margin{0.0, 0.0};   // lower bound of Delta on Q3
  bool has_window = false;
  double window_lo = 0.0;
  double window_hi = 0.0;
  std::vector<BranchMargin> branch_margins;
  std::vector<PositivityCertificate> artifacts;
  std::string note;  // reason string for NOT_APPLICABLE / INCONCLUSIVE
};

// Applicability of the general minimaxity conditions: the (a,b) range
// (either -p/2 < a <= -3/2 with 0 < b < 1, or -3/2 < a < p/2-2 with
// (8a+12)/(2a+3p) <= b < 1) plus Psi(b, p/2+a) >= 0 by interval lower
// bound. Range comparisons run on exact rationals.
struct Theorem2Check {
  bool applicable = false;
  std::string reason;      // names the failing condition
  Interval big_psi_value;  // populated once the range and q > 0 checks pass
};

Theorem2Check check_theorem2(const PriorConfig& cfg);

// p/2 - a - 2 - (p+2a+2)*delta: the Delta lower bound over Q3 implied by a
// verified ratio bound M(b-1,b+q+1,w)/M(b,b+q+1,w) >= -delta there.
// Computed exactly, rounded outward once.
Interval q3_lower_bound(const PriorConfig& cfg, const Rational& delta);
Interval q3_lower_bound(const PriorConfig& cfg, double delta);

// Subsets of [0, inf) on which f_N positivity is discharged.
struct Region {
  enum class Kind { HALF_LINE, BOUNDED, SPLIT };
  Kind kind = Kind::HALF_LINE;
  double w1 = 0.0;
  double w2 = 0.0;

  static Region half_line(double from) { return {Kind::HALF_LINE, from, 0.0}; }
  static Region bounded(double lo, double hi) { return {Kind::BOUNDED, lo, hi}; }
  // Complement of the open window (lo, hi): [0, lo] U [hi, inf).
  static Region split(double lo, double hi) { return {Kind::SPLIT, lo, hi}; }
};

// Sign-pattern hypothesis for the decreasing-then-increasing argument: after
// dropping the constant term and any exactly-zero coefficients, the interval
// coefficients must read as a strictly negative block (starting at degree 1)
// followed by a strictly positive block. Indeterminate signs fail.
bool check_unique_min_shape(const BoundPolynomial& poly);

struct FnPositivity {
  bool verified = false;
  bool shape_checked = false;
  double tail_start = 0.0;  // anchor point W for unbounded regions
  std::vector<PositivityCertificate> parts;
};

// Positivity of f_N over the region. Bounded pieces go through adaptive
// subdivision. An unbounded tail [T, inf) is reduced to finitely many
// checks: the sign pattern above guarantees f_N decreases then increases,
// so f_N(W) > 0 and f_N'(W) > 0 at a single W >= T extend positivity to
// [W, inf); the remaining [T, W] is subdivided. W starts at max(60, T) and
// doubles until both point checks pass. Throws ShapeHypothesisUnverified
// when an unbounded region is requested without the sign pattern.
FnPositivity verify_fN_positive(const BoundPolynomial& poly, const Region& region,
                                int max_depth = 60);

// Certification via the general conditions, any admissible (p, a, b).
Certificate certify_prior(const PriorConfig& cfg);

// Per-dimension pipeline for a = b = 1/2: p >= 11 through certify_prior;
// p in {8,9,10} through f_8 with delta = 1/8; p = 7 by combining delta =
// 1/10 outside [9.6, 12.1], delta = 1/8 everywhere, and the polynomial
// ratio bound 2/25 inside the window; p in {3,..,6} INCONCLUSIVE.
Certificate certify_half_cauchy(int p);

}  // namespace minimax
