#include "minimax/kummer.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace minimax {

Interval kummer_enclosure(const Interval& b, const Interval& c, double w,
                          double rel_tol, int term_cap) {
  if (!(w >= 0.0) || !std::isfinite(w)) {
    throw std::domain_error("kummer_enclosure: w must be finite and >= 0");
  }
  if (!(b.lo > -1.0)) {
    throw std::domain_error("kummer_enclosure: requires b > -1");
  }
  if (!(c.lo > 0.0) || !(c.lo >= b.hi)) {
    throw std::domain_error("kummer_enclosure: requires c > 0 and c >= b");
  }

  // Sign of every term past the constant: positive for b >= 0, negative for
  // b in (-1, 0) (a single negative factor b in each rising product).
  const int term_sign = (b.lo >= 0.0) ? +1 : ((b.hi <= 0.0) ? -1 : 0);

  const Interval W(w);
  Interval term(1.0);
  Interval sum = term;
  double abs_accum = 1.0;
  const int i0 = std::max(1, static_cast<int>(std::ceil(2.0 * w)));

  for (int i = 0; i < term_cap; ++i) {
    // term_{i+1} = term_i * (b+i) * w / ((c+i) * (i+1))
    term = term * (b + static_cast<double>(i)) * W /
           ((c + static_cast<double>(i)) * Interval(static_cast<double>(i + 1)));
    if (term_sign > 0) {
      term = intersect(term, Interval(0.0, std::numeric_limits<double>::infinity()));
    } else if (term_sign < 0) {
      term = intersect(term, Interval(-std::numeric_limits<double>::infinity(), 0.0));
    }
    const double tmag = term.mag();
    if (i + 1 >= i0 && 2.0 * tmag <= rel_tol * abs_accum) {
      // All ratios from here on are <= 1/2, so |sum of omitted terms,
      // including this one| <= 2 * |term|.
      const double tail = 2.0 * tmag;
      Interval tail_iv = (term_sign > 0)   ? Interval(0.0, tail)
                         : (term_sign < 0) ? Interval(-tail, 0.0)
                                           : Interval(-tail, tail);
      return sum + tail_iv;
    }
    sum = sum + term;
    abs_accum += tmag;
    if (!std::isfinite(abs_accum)) break;  // series overflowed binary64
  }

  std::ostringstream msg;
  msg << "kummer_enclosure: tolerance not reached within " << term_cap
      << " terms (b=[" << b.lo << "," << b.hi << "], c=[" << c.lo << "," << c.hi
      << "], w=" << w << ")";
  throw TolExceeded(msg.str());
}

Interval kummer_enclosure(const KummerParams& params, double rel_tol,
                          int term_cap) {
  return kummer_enclosure(Interval(params.b), Interval(params.c), params.w,
                          rel_tol, term_cap);
}

Interval ratio_enclosure(const Interval& b, const Interval& c, double w) {
  // b > 0 keeps every denominator term nonnegative (so M(b,c,w) >= 1) and
  // the numerator parameter b-1 above the series pole at -1.
  if (!(b.lo > 0.0)) {
    throw std::domain_error("ratio_enclosure: requires b > 0");
  }
  if (!(c.lo > b.hi)) {
    throw std::domain_error("ratio_enclosure: requires c > b");
  }
  const Interval num = kummer_enclosure(b - 1.0, c, w);
  Interval den = kummer_enclosure(b, c, w);
  // The denominator series is 1 + nonnegative terms, so M(b,c,w) >= 1; the
  // enclosure may undershoot by rounding only.
  if (!(den.hi >= 1.0)) {
    throw std::logic_error("ratio_enclosure: denominator enclosure below 1");
  }
  den = intersect(den, Interval(1.0, std::numeric_limits<double>::infinity()));
  return num / den;
}

Interval ratio_enclosure(double b, double c, double w) {
  return ratio_enclosure(Interval(b), Interval(c), w);
}

}  // namespace minimax
