#pragma once

// Test-only reference computations. Nothing here calls into the quadrature or
// optimizer code under test.

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

struct Setup {
  double lambda1;
  double lambda2;
  double rho_t;
  double pi1;
  double pi2;
};

// Near-user SOP straight from its defining integral over |h2|^2, with
// y = lambda2 * x and boost's exp-sinh rule on [0, inf).
inline double sop_near(const Setup& s, double alpha) {
  const double a1 = (s.pi1 - 1.0) / (alpha * s.rho_t);
  const double c = (1.0 - alpha) * s.rho_t;
  auto integrand = [&](double x) {
    const double y = s.lambda2 * x;
    return std::exp(-s.pi1 * y / ((c * y + 1.0) * s.lambda1) - x - a1 / s.lambda1);
  };
  boost::math::quadrature::exp_sinh<double> rule;
  return 1.0 - rule.integrate(integrand, 1e-13);
}

inline double sop_far(const Setup& s, double alpha) {
  const double a2 = (s.pi2 - 1.0) / ((1.0 - alpha) * s.rho_t);
  const double c = alpha * s.rho_t;
  auto integrand = [&](double x) {
    const double y = s.lambda1 * x;
    return std::exp(-s.pi2 * y / ((c * y + 1.0) * s.lambda2) - x - a2 / s.lambda2);
  };
  boost::math::quadrature::exp_sinh<double> rule;
  return 1.0 - rule.integrate(integrand, 1e-13);
}

// Pr{|h2|^2 < |h1|^2 < T(|h2|^2)} / Pr{|h1|^2 > |h2|^2}: the near-user SOP
// when realizations are restricted to the ordered region.
inline double sop_near_conditioned(const Setup& s, double alpha) {
  const double a1 = (s.pi1 - 1.0) / (alpha * s.rho_t);
  const double c = (1.0 - alpha) * s.rho_t;
  auto integrand = [&](double x) {
    const double y = s.lambda2 * x;
    const double t = std::max(s.pi1 * y / (c * y + 1.0) + a1, y);
    return std::exp(-x) * (std::exp(-y / s.lambda1) - std::exp(-t / s.lambda1));
  };
  boost::math::quadrature::exp_sinh<double> rule;
  const double joint = rule.integrate(integrand, 1e-12);
  return joint / (s.lambda1 / (s.lambda1 + s.lambda2));
}

// Index of the smallest value of f over the grid (first on ties).
inline std::size_t grid_argmin(const std::vector<double>& grid, const std::function<double(double)>& f) {
  std::size_t best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = f(grid[i]);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  return best;
}

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

// Kolmogorov-Smirnov statistic of a sample against Exponential(mean).
inline double ks_exponential(std::vector<double> xs, double mean) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double cdf = -std::expm1(-xs[i] / mean);
    d = std::max({d, std::abs(static_cast<double>(i + 1) / n - cdf), std::abs(cdf - static_cast<double>(i) / n)});
  }
  return d;
}

// Number of local minima of a sampled curve: counts sign changes of the first
// differences from negative to positive, ignoring steps smaller than `flat`.
inline int count_local_minima(const std::vector<double>& values, double flat) {
  int minima = 0;
  int last_sign = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double d = values[i] - values[i - 1];
    const int sign = d > flat ? 1 : (d < -flat ? -1 : 0);
    if (sign == 0) continue;
    if (last_sign == -1 && sign == 1) ++minima;
    last_sign = sign;
  }
  // a curve that only decreases or only increases still has one (boundary) minimum
  return minima == 0 ? 1 : minima;
}

}  // namespace oracle
