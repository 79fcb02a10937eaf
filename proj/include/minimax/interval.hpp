#ifndef MINIMAX_INTERVAL_HPP
#define MINIMAX_INTERVAL_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "minimax/errors.hpp"

namespace minimax {

// One binary64 ulp toward -inf / +inf. nextafter leaves +-inf fixed, so
// unbounded endpoints stay unbounded.
inline double step_down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double step_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

// Closed interval with binary64 endpoints; endpoints may be infinite.
// Invariant: lo <= hi and neither endpoint is NaN.
//
// Every arithmetic operation below computes endpoint candidates in
// round-to-nearest and then steps the result outward, so the returned interval
// encloses the exact real image of the operands. Rounding never switches FPU
// modes; outward safety comes purely from the nextafter steps.
struct Interval {
  double lo;
  double hi;

  Interval() : lo(0.0), hi(0.0) {}
  explicit Interval(double v) : Interval(v, v) {}
  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (std::isnan(lo) || std::isnan(hi)) {
      throw std::invalid_argument("Interval: NaN endpoint");
    }
    if (!(lo <= hi)) {
      throw std::invalid_argument("Interval: lo > hi");
    }
  }

  double width() const { return hi - lo; }
  // Finite midpoint clamped into the interval; intended for finite intervals.
  double mid() const {
    double m = 0.5 * lo + 0.5 * hi;
    if (!std::isfinite(m)) m = 0.0;
    return std::min(std::max(m, lo), hi);
  }
  double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }

  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool is_subset_of(const Interval& o) const { return o.contains(*this); }
  bool strictly_positive() const { return lo > 0.0; }

  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
  bool operator!=(const Interval& o) const { return !(*this == o); }
};

// Builds the interval [step_down(lo), step_up(hi)].
inline Interval outward(double lo, double hi) {
  return Interval(step_down(lo), step_up(hi));
}

inline Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

inline Interval intersect(const Interval& a, const Interval& b) {
  double lo = std::max(a.lo, b.lo);
  double hi = std::min(a.hi, b.hi);
  if (lo > hi) throw EmptyIntersection("intersect: disjoint intervals");
  return Interval(lo, hi);
}

inline Interval operator-(const Interval& x) { return Interval(-x.hi, -x.lo); }

inline Interval operator+(const Interval& x, const Interval& y) {
  return outward(x.lo + y.lo, x.hi + y.hi);
}

inline Interval operator-(const Interval& x, const Interval& y) {
  return outward(x.lo - y.hi, x.hi - y.lo);
}

namespace detail {
// Endpoint product with the 0 * inf -> 0 convention, which is the correct
// limit behaviour for interval endpoint candidates (never produces NaN).
inline double eprod(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}
}  // namespace detail

inline Interval operator*(const Interval& x, const Interval& y) {
  const double p1 = detail::eprod(x.lo, y.lo);
  const double p2 = detail::eprod(x.lo, y.hi);
  const double p3 = detail::eprod(x.hi, y.lo);
  const double p4 = detail::eprod(x.hi, y.hi);
  return outward(std::min(std::min(p1, p2), std::min(p3, p4)),
                 std::max(std::max(p1, p2), std::max(p3, p4)));
}

// [1/hi, 1/lo] for a sign-definite interval; the reciprocal of an unbounded
// endpoint is exactly 0.
inline Interval reciprocal(const Interval& y) {
  if (y.lo <= 0.0 && y.hi >= 0.0) {
    throw DivisorContainsZero("reciprocal: divisor encloses zero");
  }
  if (y.lo > 0.0) {
    double lo = std::isinf(y.hi) ? 0.0 : std::max(0.0, step_down(1.0 / y.hi));
    double hi = step_up(1.0 / y.lo);
    return Interval(lo, hi);
  }
  double lo = step_down(1.0 / y.hi);
  double hi = std::isinf(y.lo) ? 0.0 : std::min(0.0, step_up(1.0 / y.lo));
  return Interval(lo, hi);
}

inline Interval operator/(const Interval& x, const Interval& y) {
  return x * reciprocal(y);
}

// Mixed double overloads treat the scalar as an exact point interval.
inline Interval operator+(const Interval& x, double c) { return x + Interval(c); }
inline Interval operator+(double c, const Interval& x) { return Interval(c) + x; }
inline Interval operator-(const Interval& x, double c) { return x - Interval(c); }
inline Interval operator-(double c, const Interval& x) { return Interval(c) - x; }
inline Interval operator*(const Interval& x, double c) { return x * Interval(c); }
inline Interval operator*(double c, const Interval& x) { return Interval(c) * x; }
inline Interval operator/(const Interval& x, double c) { return x / Interval(c); }
inline Interval operator/(double c, const Interval& x) { return Interval(c) / x; }

// exp is faithfully rounded in glibc (< 1 ulp), so 1 ulp outward encloses.
inline Interval exp(const Interval& x) {
  double lo = std::max(0.0, step_down(std::exp(x.lo)));
  double hi = step_up(std::exp(x.hi));
  return Interval(lo, hi);
}

// sqrt is correctly rounded per IEEE 754; 1 ulp outward is generous.
inline Interval sqrt(const Interval& x) {
  if (x.lo < 0.0) throw NegativeSqrtDomain("sqrt: domain extends below zero");
  double lo = std::max(0.0, step_down(std::sqrt(x.lo)));
  double hi = step_up(std::sqrt(x.hi));
  return Interval(lo, hi);
}

// cbrt carries weaker accuracy guarantees than exp/sqrt; widen 2 ulp per side.
inline Interval cbrt(const Interval& x) {
  double lo = step_down(step_down(std::cbrt(x.lo)));
  double hi = step_up(step_up(std::cbrt(x.hi)));
  return Interval(lo, hi);
}

namespace detail {
// Directed bounds on v^n (n >= 1) by repeated multiplication with a 1-ulp step
// after every product. Exact powers of 0 and 1 are preserved.
inline double pow_up(double v, int n);
inline double pow_down(double v, int n) {
  if (v < 0.0) return -pow_up(-v, n);
  double acc = v;
  for (int i = 1; i < n; ++i) acc = std::max(0.0, step_down(acc * v));
  return acc;
}
inline double pow_up(double v, int n) {
  if (v < 0.0) return -pow_down(-v, n);
  double acc = v;
  for (int i = 1; i < n; ++i) acc = step_up(acc * v);
  return acc;
}
}  // namespace detail

// x^n for integer n. Even powers account for the dependency between the two
// occurrences of x (so powi([-1,2],2) = [0, 4+ulp], not [-2,4]). n = 0 yields
// [1,1] with the empty-product convention. Negative n requires 0 not in x.
inline Interval powi(const Interval& x, int n) {
  if (n == 0) return Interval(1.0);
  if (n < 0) return reciprocal(powi(x, -n));
  if (n == 1) return x;
  if (n % 2 == 0) {
    double mlo = (x.lo <= 0.0 && x.hi >= 0.0)
                     ? 0.0
                     : std::min(std::fabs(x.lo), std::fabs(x.hi));
    double mhi = x.mag();
    return Interval(detail::pow_down(mlo, n), detail::pow_up(mhi, n));
  }
  return Interval(detail::pow_down(x.lo, n), detail::pow_up(x.hi, n));
}

// Enclosure of pi.
inline Interval pi_interval() {
  return outward(3.14159265358979323846, 3.14159265358979323846);
}

}  // namespace minimax

#endif  // MINIMAX_INTERVAL_HPP
