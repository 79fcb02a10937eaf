#pragma once

#include <vector>

#include "minimax/interval.hpp"
#include "minimax/rational.hpp"

namespace minimax {

// Dense polynomial with verified interval coefficients; coeffs[i] multiplies w^i.
struct IntervalPolynomial {
  std::vector<Interval> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  // Horner evaluation, highest degree first. Encloses the true value for
  // every point of w and every real coefficient inside the coefficient boxes.
  Interval eval(const Interval& w) const;
  Interval eval(double w) const { return eval(Interval(w)); }

  IntervalPolynomial derivative() const;
};

// Degree-N truncation f_N of the series of M(b-1,c,w) + delta*M(b,c,w) at
// c = b+q+1, collected by powers of w:
//
//   f_N(w) = (1+delta) + (b-1+delta*b)/(b+q+1) * w
//          + sum_{i=2..N} (b-1+delta*(b+i-1)) * (b)_{i-1}
//            / ((b+q+1)_i * i!) * w^i.
//
// With delta strictly inside ((1-b)/(b+N-1), (1-b)/b) the dropped tail has
// only nonnegative terms, so f_N(w) >= 0 on a region certifies
// M(b-1,c,w)/M(b,c,w) >= -delta there.
struct BoundPolynomial {
  IntervalPolynomial poly;
  std::vector<Rational> exact_coeffs;  // same indexing as poly.coeffs
  int N = 0;
  double b = 0.0;
  double q = 0.0;
  double delta = 0.0;
  int last_negative_index = 0;  // largest i with exact_coeffs[i] < 0
};

// Coefficients are accumulated exactly in rational arithmetic and outward
// rounded once, so coefficient rounding never threatens soundness. Throws
// DeltaOutOfRange unless (1-b)/(b+N-1) < delta < (1-b)/b strictly; requires
// 0 < b < 1, q > 0, N >= 2. The degree-1 coefficient is always negative and
// the degree-N coefficient always positive under the window constraint.
BoundPolynomial build_fN(const Rational& b, const Rational& q, int N, const Rational& delta);

// Convenience overload: arguments are treated as exact binary64 values.
BoundPolynomial build_fN(double b, double q, int N, double delta);

Interval eval_bound_poly(const BoundPolynomial& f, const Interval& w);
inline Interval eval_bound_poly(const BoundPolynomial& f, double w) {
  return eval_bound_poly(f, Interval(w));
}

// Degree-L polynomial lower bound for -M(-1/2, p/2+1, w), valid for every
// w >= 0: the dropped series terms beyond order L are all positive.
IntervalPolynomial window_numerator_poly(int p, int L);

// Degree-L polynomial upper bound for M(1/2, p/2+1, w), valid on
// 0 <= w <= w_u. The tail beyond order L is dominated by
// C_L * (e^{w_u} - 1 - sum_{i=1..L} w^i/i!) with
// C_L = (1/2)_{L+1} / ((p/2+1)_{L+1}); the e^{w_u}-1 part lands in the
// constant term and -C_L*w^i/i! is folded into each coefficient. w_u is
// taken as an exact binary64 value.
IntervalPolynomial window_denominator_poly(int p, int L, double w_u);

}  // namespace minimax
