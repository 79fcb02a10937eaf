#include "minimax/bound_poly.hpp"

#include <stdexcept>
#include <string>

#include "minimax/errors.hpp"

namespace minimax {

Interval IntervalPolynomial::eval(const Interval& w) const {
  if (coeffs.empty()) {
    return Interval(0.0, 0.0);
  }
  Interval acc = coeffs.back();
  for (int i = static_cast<int>(coeffs.size()) - 2; i >= 0; --i) {
    acc = acc * w + coeffs[static_cast<std::size_t>(i)];
  }
  return acc;
}

IntervalPolynomial IntervalPolynomial::derivative() const {
  IntervalPolynomial d;
  if (coeffs.size() <= 1) {
    d.coeffs.push_back(Interval(0.0, 0.0));
    return d;
  }
  d.coeffs.reserve(coeffs.size() - 1);
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    d.coeffs.push_back(coeffs[i] * static_cast<double>(i));
  }
  return d;
}

BoundPolynomial build_fN(const Rational& b, const Rational& q, int N, const Rational& delta) {
  if (!(b > 0 && b < 1)) {
    throw std::invalid_argument("build_fN: requires 0 < b < 1");
  }
  if (!(q > 0)) {
    throw std::invalid_argument("build_fN: requires q > 0");
  }
  if (N < 2) {
    throw std::invalid_argument("build_fN: requires N >= 2");
  }
  // Admissible window, both sides strict: delta*b < 1-b keeps the degree-1
  // coefficient negative, delta*(b+N-1) > 1-b keeps every dropped tail term
  // (order N+1 and beyond) nonnegative and the degree-N coefficient positive.
  const Rational one_minus_b = 1 - b;
  if (!(delta * b < one_minus_b && delta * (b + N - 1) > one_minus_b)) {
    throw DeltaOutOfRange("build_fN: delta outside ((1-b)/(b+N-1), (1-b)/b)");
  }

  const Rational c = b + q + 1;
  BoundPolynomial f;
  f.N = N;
  f.b = round_nearest(b);
  f.q = round_nearest(q);
  f.delta = round_nearest(delta);
  f.exact_coeffs.resize(static_cast<std::size_t>(N) + 1);
  f.exact_coeffs[0] = 1 + delta;

  Rational poch_b = 1;   // (b)_{i-1}
  Rational poch_c = 1;   // (b+q+1)_i, built incrementally
  Rational fact = 1;     // i!
  bool seen_positive = false;
  int last_negative = 0;
  for (int i = 1; i <= N; ++i) {
    if (i >= 2) {
      poch_b *= b + (i - 2);
    }
    poch_c *= c + (i - 1);
    fact *= i;
    const Rational sign_factor = (b - 1) + delta * (b + i - 1);
    const Rational coeff = sign_factor * poch_b / (poch_c * fact);
    f.exact_coeffs[static_cast<std::size_t>(i)] = coeff;
    if (coeff < 0) {
      if (seen_positive) {
        throw std::logic_error("build_fN: negative coefficient after a positive one");
      }
      last_negative = i;
    } else if (coeff > 0) {
      seen_positive = true;
    }
  }
  if (last_negative == 0 || !seen_positive) {
    throw std::logic_error("build_fN: sign pattern missing a negative or positive block");
  }
  f.last_negative_index = last_negative;

  f.poly.coeffs.reserve(f.exact_coeffs.size());
  for (const Rational& r : f.exact_coeffs) {
    f.poly.coeffs.push_back(to_interval(r));
  }
  return f;
}

BoundPolynomial build_fN(double b, double q, int N, double delta) {
  return build_fN(rational_of(b), rational_of(q), N, rational_of(delta));
}

Interval eval_bound_poly(const BoundPolynomial& f, const Interval& w) {
  return f.poly.eval(w);
}

IntervalPolynomial window_numerator_poly(int p, int L) {
  if (p < 1 || L <= 1) {
    throw std::invalid_argument("window_numerator_poly: requires p >= 1 and L > 1");
  }
  const Rational c = Rational(p) / 2 + 1;
  const Rational mhalf(-1, 2);
  IntervalPolynomial poly;
  poly.coeffs.reserve(static_cast<std::size_t>(L) + 1);
  poly.coeffs.push_back(Interval(-1.0, -1.0));
  Rational poch_m = 1;  // (-1/2)_i
  Rational poch_c = 1;  // (p/2+1)_i
  Rational fact = 1;
  for (int i = 1; i <= L; ++i) {
    poch_m *= mhalf + (i - 1);
    poch_c *= c + (i - 1);
    fact *= i;
    poly.coeffs.push_back(to_interval(-poch_m / (poch_c * fact)));
  }
  return poly;
}

IntervalPolynomial window_denominator_poly(int p, int L, double w_u) {
  if (p < 1 || L <= 1) {
    throw std::invalid_argument("window_denominator_poly: requires p >= 1 and L > 1");
  }
  if (!(w_u > 0) || !std::isfinite(w_u)) {
    throw std::invalid_argument("window_denominator_poly: requires finite w_u > 0");
  }
  const Rational c = Rational(p) / 2 + 1;
  const Rational half(1, 2);
  const Rational cap = poch(half, L + 1) / poch(c, L + 1);  // C_L

  IntervalPolynomial poly;
  poly.coeffs.reserve(static_cast<std::size_t>(L) + 1);
  const Interval wu_pt(w_u, w_u);
  poly.coeffs.push_back(Interval(1.0, 1.0) + to_interval(cap) * (exp(wu_pt) - 1.0));
  Rational poch_h = 1;  // (1/2)_i
  Rational poch_c = 1;  // (p/2+1)_i
  Rational fact = 1;
  for (int i = 1; i <= L; ++i) {
    poch_h *= half + (i - 1);
    poch_c *= c + (i - 1);
    fact *= i;
    // (1/2)_i/(p/2+1)_i decreases in i, so each folded coefficient is >= 0.
    poly.coeffs.push_back(to_interval((poch_h / poch_c - cap) / fact));
  }
  return poly;
}

}  // namespace minimax
