#include <cmath>
#include <vector>

#include "doctest.h"
#include "minimax/errors.hpp"
#include "minimax/kummer.hpp"
#include "minimax/quadrature.hpp"

using minimax::Interval;

namespace {

// Plain long double partial sum of the confluent hypergeometric series.
// Good enough as an independent reference for moderate w.
long double kummer_ref(long double b, long double c, long double w, int terms) {
  long double sum = 1.0L, term = 1.0L;
  for (int i = 0; i < terms; ++i) {
    term *= (b + i) * w / ((c + i) * (i + 1));
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("series equals one at w = 0") {
  Interval m = minimax::kummer_enclosure(Interval(0.5), Interval(5.5), 0.0);
  CHECK(m.contains(1.0));
  CHECK(m.width() <= 1e-15);
}

TEST_CASE("b = c collapses to the exponential") {
  Interval m = minimax::kummer_enclosure(Interval(1.0), Interval(1.0), 1.0);
  CHECK(m.contains(std::exp(1.0)));
  CHECK(m.width() < 1e-12);
}

TEST_CASE("series enclosure brackets a long double reference") {
  for (double w : {0.25, 1.0, 3.0, 7.0, 11.0, 25.0}) {
    Interval pos = minimax::kummer_enclosure(Interval(0.5), Interval(5.5), w);
    const long double ref_pos = kummer_ref(0.5L, 5.5L, w, 400);
    CHECK(static_cast<long double>(pos.lo) <= ref_pos);
    CHECK(ref_pos <= static_cast<long double>(pos.hi));

    Interval neg = minimax::kummer_enclosure(Interval(-0.5), Interval(5.5), w);
    const long double ref_neg = kummer_ref(-0.5L, 5.5L, w, 400);
    CHECK(static_cast<long double>(neg.lo) <= ref_neg);
    CHECK(ref_neg <= static_cast<long double>(neg.hi));
  }
}

TEST_CASE("series cross-checked against the kappa integral") {
  // I_{q-1}(w) = e^{-w} B(q, b) M(b, b+q, w) with q = 5, b = 1/2,
  // B(5, 1/2) = 256/315.
  const double w = 5.0;
  minimax::QuadResult quad = minimax::kappa_integral(4.0, 0.5, w);
  const double reference = std::exp(w) * quad.value * 315.0 / 256.0;
  Interval m = minimax::kummer_enclosure(Interval(0.5), Interval(5.5), w);
  CHECK(m.lo <= reference + 1e-7 * reference);
  CHECK(m.hi >= reference - 1e-7 * reference);
  CHECK(m.width() < 1e-9 * reference);
}

TEST_CASE("ratio at w = 0 is exactly one") {
  Interval r = minimax::ratio_enclosure(Interval(0.5), Interval(5.5), 0.0);
  CHECK(r.contains(1.0));
  CHECK(r.width() <= 1e-14);
}

TEST_CASE("ratio matches a long double reference at moderate w") {
  const double w = 11.0;
  Interval r = minimax::ratio_enclosure(Interval(0.5), Interval(5.5), w);
  const long double ref =
      kummer_ref(-0.5L, 5.5L, w, 200) / kummer_ref(0.5L, 5.5L, w, 200);
  CHECK(static_cast<long double>(r.lo) <= ref);
  CHECK(ref <= static_cast<long double>(r.hi));
  CHECK(r.width() < 1e-10);
}

TEST_CASE("ratio never exceeds one and stays above -1/8 on a spot grid") {
  // For b = 1/2 and c = p/2 + 2 the numerator series starts at 1 and only
  // subtracts, so the ratio is at most one; the -1/8 floor is the bound the
  // certification path proves, probed here at sample points.
  for (int p : {7, 8, 9, 10}) {
    const double c = 0.5 * p + 2.0;
    for (double w = 0.0; w <= 60.0; w += 1.5) {
      Interval r = minimax::ratio_enclosure(Interval(0.5), Interval(c), w);
      CHECK(r.hi <= 1.0 + 1e-12);
      CHECK(r.lo >= -0.125 - 1e-9);
    }
  }
}

TEST_CASE("series decreases in c for positive b and w") {
  Interval wide = minimax::kummer_enclosure(Interval(0.5), Interval(4.0), 3.0);
  Interval narrow = minimax::kummer_enclosure(Interval(0.5), Interval(5.0), 3.0);
  CHECK(wide.lo > narrow.hi);
}

TEST_CASE("interval parameters propagate to the enclosure") {
  Interval tight = minimax::kummer_enclosure(Interval(0.5), Interval(5.5), 2.0);
  Interval loose = minimax::kummer_enclosure(Interval(0.49, 0.51), Interval(5.4, 5.6), 2.0);
  CHECK(tight.is_subset_of(loose));
  minimax::KummerParams params{0.5, 5.5, 2.0};
  CHECK(minimax::kummer_enclosure(params) == tight);
}

TEST_CASE("overflowing argument reports tolerance failure") {
  CHECK_THROWS_AS(minimax::kummer_enclosure(Interval(0.5), Interval(5.5), 1.0e6),
                  minimax::TolExceeded);
}
