#ifndef MINIMAX_ERRORS_HPP
#define MINIMAX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace minimax {

// Interval division where the divisor encloses zero.
struct DivisorContainsZero : std::domain_error {
  explicit DivisorContainsZero(const std::string& msg) : std::domain_error(msg) {}
};

// Interval square root of a set that extends below zero.
struct NegativeSqrtDomain : std::domain_error {
  explicit NegativeSqrtDomain(const std::string& msg) : std::domain_error(msg) {}
};

// Interval Newton contraction produced an empty set: no root in the bracket.
struct EmptyIntersection : std::runtime_error {
  explicit EmptyIntersection(const std::string& msg) : std::runtime_error(msg) {}
};

// A series enclosure could not reach the requested tolerance within its term cap.
struct TolExceeded : std::runtime_error {
  explicit TolExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// delta outside the admissible window ((1-b)/(b+N-1), (1-b)/b) for a bound polynomial.
struct DeltaOutOfRange : std::domain_error {
  explicit DeltaOutOfRange(const std::string& msg) : std::domain_error(msg) {}
};

// Cardano closed form requested where 9*gamma4 > 8*gamma2^3 fails.
struct DiscriminantViolation : std::domain_error {
  explicit DiscriminantViolation(const std::string& msg) : std::domain_error(msg) {}
};

// Adaptive quadrature failed to converge to its tolerance.
struct QuadratureNonConvergence : std::runtime_error {
  explicit QuadratureNonConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

// The decreasing-then-increasing coefficient pattern needed for an unbounded
// tail reduction could not be established.
struct ShapeHypothesisUnverified : std::runtime_error {
  explicit ShapeHypothesisUnverified(const std::string& msg) : std::runtime_error(msg) {}
};

// An estimator that divides by ||y|| was handed the zero vector.
struct ZeroVector : std::domain_error {
  explicit ZeroVector(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace minimax

#endif  // MINIMAX_ERRORS_HPP
