#ifndef MINIMAX_KUMMER_HPP
#define MINIMAX_KUMMER_HPP

#include "minimax/interval.hpp"

namespace minimax {

// Parameters of the confluent hypergeometric series
//   M(b, c, w) = 1 + sum_{i>=1} [b(b+1)...(b+i-1)] / [c(c+1)...(c+i-1)] * w^i / i!
struct KummerParams {
  double b;
  double c;
  double w;
};

// Rigorous enclosure of M(b, c, w) for w >= 0, b > -1, c > 0, c >= b.
// The series is summed in interval arithmetic; once the term index passes
// i0 = ceil(2w) consecutive term ratios are at most 1/2, so the dropped tail
// is enclosed by a geometric bound of twice the first omitted term. rel_tol
// bounds the tail relative to the accumulated term magnitude (so the result
// is accurate in a relative sense even when M grows like e^w). Throws
// TolExceeded if more than term_cap terms would be needed.
Interval kummer_enclosure(const Interval& b, const Interval& c, double w,
                          double rel_tol = 1e-14, int term_cap = 10000);
Interval kummer_enclosure(const KummerParams& params, double rel_tol = 1e-14,
                          int term_cap = 10000);

// Enclosure of the ratio M(b-1, c, w) / M(b, c, w) for b > 0, c > b,
// w >= 0. The denominator series has nonnegative terms and leading term 1,
// so its enclosure is verified against and then intersected with [1, inf)
// before dividing.
Interval ratio_enclosure(const Interval& b, const Interval& c, double w);
Interval ratio_enclosure(double b, double c, double w);

}  // namespace minimax

#endif  // MINIMAX_KUMMER_HPP
