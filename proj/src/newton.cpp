#include "minimax/newton.hpp"

#include <queue>
#include <vector>

namespace minimax {

Interval interval_newton(const IntervalFn& f, const IntervalFn& df,
                         Interval bracket, int max_iter,
                         const std::function<void(int, const Interval&)>& on_iterate) {
  Interval cur = bracket;
  for (int it = 0; it < max_iter; ++it) {
    const double m = cur.mid();
    const Interval fm = f(Interval(m));
    const Interval d = df(cur);
    if (d.lo <= 0.0 && d.hi >= 0.0) break;  // cannot contract, still sound
    const Interval cand = Interval(m) - fm / d;
    const double nl = std::max(cur.lo, cand.lo);
    const double nh = std::min(cur.hi, cand.hi);
    if (nl > nh) {
      throw EmptyIntersection("interval_newton: contraction emptied the bracket");
    }
    if (nl == cur.lo && nh == cur.hi) break;  // fixed point
    cur = Interval(nl, nh);
    if (on_iterate) on_iterate(it + 1, cur);
  }
  return cur;
}

namespace {

struct Box {
  Interval x;
  Interval fx;
  int depth;
};

// Worst box first: smallest enclosure lower bound at the top. Remaining
// fields only break ties so the ordering is total and the search is
// deterministic.
struct WorseThan {
  bool operator()(const Box& a, const Box& b) const {
    if (a.fx.lo != b.fx.lo) return a.fx.lo > b.fx.lo;
    if (a.x.lo != b.x.lo) return a.x.lo > b.x.lo;
    if (a.x.hi != b.x.hi) return a.x.hi > b.x.hi;
    return a.depth > b.depth;
  }
};

}  // namespace

PositivityCertificate verify_positive_on(const IntervalFn& f,
                                         const Interval& domain, int max_depth) {
  PositivityCertificate cert;
  cert.domain = domain;

  std::priority_queue<Box, std::vector<Box>, WorseThan> queue;
  queue.push(Box{domain, f(domain), 0});
  int deepest = 0;

  while (true) {
    const Box box = queue.top();
    if (box.fx.lo > 0.0) {
      // The worst remaining box is strictly positive, so all are.
      cert.verified = true;
      cert.splits = deepest;
      cert.min_enclosure = box.fx;
      return cert;
    }
    queue.pop();
    if (box.fx.hi < 0.0 || box.depth >= max_depth) {
      // Definite counterexample, or inconclusive at the depth cap.
      cert.verified = false;
      cert.splits = deepest;
      cert.min_enclosure = box.fx;
      return cert;
    }
    const double m = box.x.mid();
    if (!(m > box.x.lo && m < box.x.hi)) {
      // Box is a point (or one ulp wide) and still inconclusive.
      cert.verified = false;
      cert.splits = deepest;
      cert.min_enclosure = box.fx;
      return cert;
    }
    const Interval left(box.x.lo, m);
    const Interval right(m, box.x.hi);
    queue.push(Box{left, f(left), box.depth + 1});
    queue.push(Box{right, f(right), box.depth + 1});
    deepest = std::max(deepest, box.depth + 1);
  }
}

}  // namespace minimax
