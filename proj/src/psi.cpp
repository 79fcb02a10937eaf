#include "minimax/psi.hpp"

#include <stdexcept>

#include "minimax/errors.hpp"

namespace minimax {

namespace {

Rational zeta_exact(const Rational& b, const Rational& q) {
  if (!(b > 0 && b < 1)) {
    throw std::invalid_argument("zeta_of: requires 0 < b < 1");
  }
  if (!(q > 0)) {
    throw std::invalid_argument("zeta_of: requires q > 0");
  }
  const Rational s = b + q;
  return Rational(2, 9) * b * b * (s + 3) * (s + 4) / ((b + 1) * (b + 2) * (s + 2) * (s + 2));
}

}  // namespace

Interval zeta_of(const Rational& b, const Rational& q) {
  const Rational z = zeta_exact(b, q);
  if (!(z > 0 && z < Rational(1, 9))) {
    throw std::logic_error("zeta_of: exact value escaped (0, 1/9)");
  }
  return to_interval(z);
}

Interval zeta_of(double b, double q) { return zeta_of(rational_of(b), rational_of(q)); }

Interval psi_of(const Interval& zeta) {
  if (!(zeta.lo > 0.0) || !(zeta.hi <= 1.0)) {
    throw std::invalid_argument("psi_of: requires zeta inside (0, 1]");
  }
  const Interval z = sqrt(intersect(1.0 - zeta, Interval(0.0, 1.0)));
  return cbrt(zeta) * (cbrt(1.0 + z) + cbrt(1.0 - z));
}

PsiInputs psi_inputs(const Rational& b, const Rational& q) {
  PsiInputs out;
  out.zeta = zeta_of(b, q);
  out.Z = sqrt(intersect(1.0 - out.zeta, Interval(0.0, 1.0)));
  out.psi_val = psi_of(out.zeta);
  const Rational s = b + q;
  const Interval lead = to_interval(Rational(4, 3) * b / (1 - b) * (s + 1) / (s + 2));
  out.big_psi = lead - 2.0 * out.psi_val - powi(out.psi_val, 2);
  return out;
}

Interval big_psi(const Rational& b, const Rational& q) { return psi_inputs(b, q).big_psi; }

Interval big_psi(double b, double q) { return big_psi(rational_of(b), rational_of(q)); }

CardanoProblem cardano_min(const Rational& gamma2, const Rational& gamma4) {
  if (!(gamma2 > 0) || !(gamma4 > 0)) {
    throw std::invalid_argument("cardano_min: requires gamma2 > 0 and gamma4 > 0");
  }
  if (!(9 * gamma4 > 8 * gamma2 * gamma2 * gamma2)) {
    throw DiscriminantViolation("cardano_min: requires 9*gamma4 > 8*gamma2^3");
  }
  const Rational zeta_r = 8 * gamma2 * gamma2 * gamma2 / (9 * gamma4);

  CardanoProblem out;
  out.gamma2 = round_nearest(gamma2);
  out.gamma4 = round_nearest(gamma4);
  out.zeta = to_interval(zeta_r);
  const Interval psi = psi_of(out.zeta);
  out.x_star = to_interval(Rational(3, 2) / gamma2) * psi;
  out.f_min = -(to_interval(Rational(9) / (16 * gamma2)) * (2.0 * psi + powi(psi, 2)));
  return out;
}

CardanoProblem cardano_min(double gamma2, double gamma4) {
  return cardano_min(rational_of(gamma2), rational_of(gamma4));
}

}  // namespace minimax
