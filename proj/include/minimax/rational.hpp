#ifndef MINIMAX_RATIONAL_HPP
#define MINIMAX_RATIONAL_HPP

#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "minimax/interval.hpp"

namespace minimax {

// Exact rational arithmetic for coefficient and margin computations. Values
// enter as binary64 (every finite double is a rational) or as integer pairs,
// are combined exactly, and leave as verified outward-rounded intervals.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_of(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("rational_of: non-finite input");
  }
  return Rational(x);  // exact: decomposes the binary64 value
}

inline double round_nearest(const Rational& r) {
  return r.convert_to<double>();
}

// Tightest binary64 interval that provably contains r. Containment is checked
// by exact comparison, so no assumption is made about convert_to's rounding.
inline Interval to_interval(const Rational& r) {
  double d = round_nearest(r);
  if (!std::isfinite(d)) {
    d = std::copysign(std::numeric_limits<double>::max(), d);
  }
  double lo = d;
  double hi = d;
  while (std::isfinite(lo) && Rational(lo) > r) lo = step_down(lo);
  while (std::isfinite(lo) && std::isfinite(step_up(lo)) &&
         Rational(step_up(lo)) <= r) {
    lo = step_up(lo);
  }
  while (std::isfinite(hi) && Rational(hi) < r) hi = step_up(hi);
  while (std::isfinite(hi) && std::isfinite(step_down(hi)) &&
         Rational(step_down(hi)) >= r) {
    hi = step_down(hi);
  }
  return Interval(lo, hi);
}

inline Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Rising factorial x(x+1)...(x+n-1); poch(x, 0) = 1.
inline Rational poch(const Rational& x, int n) {
  Rational acc = 1;
  for (int i = 0; i < n; ++i) acc *= (x + i);
  return acc;
}

}  // namespace minimax

#endif  // MINIMAX_RATIONAL_HPP
