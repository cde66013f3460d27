#pragma once

#include <stdexcept>
#include <string>

namespace secnoma {

/// Raised when an input violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the adaptive quadrature cannot reach its tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double last_estimate, double last_difference)
      : std::runtime_error(what), estimate_(last_estimate), difference_(last_difference) {}

  double estimate() const noexcept { return estimate_; }
  double difference() const noexcept { return difference_; }

 private:
  double estimate_;
  double difference_;
};

/// Raised by the optimizers when the objective misbehaves (non-finite values)
/// or when no admissible candidate survives.
class OptimizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace detail
}  // namespace secnoma
