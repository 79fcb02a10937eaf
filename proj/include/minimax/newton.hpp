#ifndef MINIMAX_NEWTON_HPP
#define MINIMAX_NEWTON_HPP

#include <functional>

#include "minimax/interval.hpp"

namespace minimax {

using IntervalFn = std::function<Interval(const Interval&)>;

// Interval Newton contraction for a root of f inside bracket:
//   m <- mid(bracket); candidate <- m - f([m,m]) / df(bracket);
//   bracket <- bracket intersect candidate.
// The bracket never widens. If df(bracket) encloses zero the step cannot
// contract and the current bracket is returned (still a valid enclosure).
// Throws EmptyIntersection when the contraction empties the bracket, i.e.
// f has no root there.
Interval interval_newton(
    const IntervalFn& f, const IntervalFn& df, Interval bracket,
    int max_iter = 100,
    const std::function<void(int, const Interval&)>& on_iterate = {});

// Outcome of an adaptive positivity verification. verified == true means
// every point of domain was covered by a sub-box whose f-enclosure has a
// strictly positive lower bound.
struct PositivityCertificate {
  Interval domain;
  bool verified = false;
  // Maximum bisection depth reached (0 if the whole domain verified at once).
  int splits = 0;
  // f-enclosure over the worst sub-box examined: on success the accepted leaf
  // with the smallest lower bound, on failure the refuting or inconclusive box.
  Interval min_enclosure;
};

// Adaptive bisection proof that f > 0 everywhere on domain. Sub-boxes are
// processed worst-first (smallest enclosure lower bound); a box whose
// enclosure upper bound is negative refutes positivity immediately; a box
// still inconclusive at max_depth yields verified == false. Deterministic:
// the work queue is ordered by (enclosure.lo, box.lo, box.hi, depth).
PositivityCertificate verify_positive_on(const IntervalFn& f,
                                         const Interval& domain,
                                         int max_depth = 60);

}  // namespace minimax

#endif  // MINIMAX_NEWTON_HPP
