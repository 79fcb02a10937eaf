#pragma once

#include "minimax/interval.hpp"
#include "minimax/rational.hpp"

namespace minimax {

// The scalar machinery behind the quartic minimization: zeta, psi, and the
// positivity functional Psi.
struct PsiInputs {
  Interval zeta;     // zeta(b,q)
  Interval Z;        // sqrt(1 - zeta)
  Interval psi_val;  // psi(zeta)
  Interval big_psi;  // Psi(b,q)
};

// zeta(b,q) = (2/9) b^2 (b+q+3)(b+q+4) / ((b+1)(b+2)(b+q+2)^2), evaluated
// exactly in rational arithmetic and rounded outward once. For 0 < b < 1
// and q > 0 the exact value always lies strictly inside (0, 1/9); that is
// re-verified on every call.
Interval zeta_of(const Rational& b, const Rational& q);
Interval zeta_of(double b, double q);

// psi(zeta) = zeta^{1/3} ((1+sqrt(1-zeta))^{1/3} + (1-sqrt(1-zeta))^{1/3})
// for zeta in (0,1]. psi(1) = 2.
Interval psi_of(const Interval& zeta);

// Psi(b,q) = (4/3) (b/(1-b)) ((b+q+1)/(b+q+2)) - 2 psi(zeta) - psi(zeta)^2.
Interval big_psi(const Rational& b, const Rational& q);
Interval big_psi(double b, double q);

// All four quantities from one evaluation.
PsiInputs psi_inputs(const Rational& b, const Rational& q);

// Closed-form minimization of F(x) = -x - gamma2 x^2/2 + gamma4 x^4/24 over
// x >= 0 under the discriminant condition 9 gamma4 > 8 gamma2^3.
struct CardanoProblem {
  double gamma2 = 0.0;
  double gamma4 = 0.0;
  Interval zeta;    // 8 gamma2^3 / (9 gamma4), inside (0,1)
  Interval x_star;  // unique positive stationary point, root of F'
  Interval f_min;   // F(x_star) = -(9/(16 gamma2)) (2 psi + psi^2)
};

// The discriminant test runs on exact rationals; DiscriminantViolation when
// 9 gamma4 <= 8 gamma2^3. x_star = (3/(2 gamma2)) psi(zeta).
CardanoProblem cardano_min(const Rational& gamma2, const Rational& gamma4);
CardanoProblem cardano_min(double gamma2, double gamma4);

}  // namespace minimax
