#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "secnoma/error.hpp"

namespace secnoma::quadrature {

/// Gauss-Legendre nodes and weights mapped to [0, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule with n points; n must be a power of two in [kMinNodes, kMaxNodes].
const Rule& gauss_legendre_unit(std::size_t n);

/// Computes an n-point rule from scratch (Newton iteration on P_n).
Rule make_gauss_legendre_unit(std::size_t n);

inline constexpr std::size_t kMinNodes = 16;
inline constexpr std::size_t kMaxNodes = 2048;

struct Result {
  double value = 0.0;
  double error = 0.0;      // |I_n - I_{n/2}| at the accepted level
  std::size_t nodes = 0;   // points in the accepted rule
};

template <class F>
double apply(const Rule& rule, F&& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(rule.nodes[i]);
  return sum;
}

/// Integrates f over [0, 1], doubling the Gauss-Legendre order from 16 until
/// two successive estimates differ by less than `tolerance`. Throws
/// QuadratureError if 2048 nodes are not enough or f returns a non-finite value.
template <class F>
Result integrate_unit(F&& f, double tolerance = 1e-10) {
  double previous = apply(gauss_legendre_unit(kMinNodes), f);
  double diff = 0.0;
  for (std::size_t n = 2 * kMinNodes; n <= kMaxNodes; n *= 2) {
    const double current = apply(gauss_legendre_unit(n), f);
    if (!std::isfinite(current)) {
      throw QuadratureError("integrand produced a non-finite value", current, diff);
    }
    diff = std::abs(current - previous);
    if (diff < tolerance) return {current, diff, n};
    previous = current;
  }
  throw QuadratureError("Gauss-Legendre refinement did not converge within " +
                            std::to_string(kMaxNodes) + " nodes (last difference " +
                            std::to_string(diff) + ")",
                        previous, diff);
}

}  // namespace secnoma::quadrature
