#include "secnoma/quadrature.hpp"

#include <array>
#include <bit>
#include <numbers>

namespace secnoma::quadrature {

Rule make_gauss_legendre_unit(std::size_t n) {
  detail::require(n >= 1, "rule needs at least one node");
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th largest root
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged root
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
      p0 = p1;
      p1 = pk;
    }
    dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // map [-1, 1] -> [0, 1]; x is descending in i
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.weights[n - 1 - i] = 0.5 * w;
    rule.weights[i] = 0.5 * w;
  }
  return rule;
}

const Rule& gauss_legendre_unit(std::size_t n) {
  detail::require(std::has_single_bit(n) && n >= kMinNodes && n <= kMaxNodes,
                  "cached rules exist for powers of two in [16, 2048]");
  static const auto rules = [] {
    std::array<Rule, 8> all;
    for (std::size_t level = 0; level < all.size(); ++level) {
      all[level] = make_gauss_legendre_unit(kMinNodes << level);
    }
    return all;
  }();
  return rules[std::countr_zero(n) - std::countr_zero(kMinNodes)];
}

}  // namespace secnoma::quadrature
