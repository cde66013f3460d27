#include "secnoma/sop_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "secnoma/error.hpp"
#include "secnoma/quadrature.hpp"

namespace secnoma {

using detail::require;

TargetRates::TargetRates(double rth1, double rth2)
    : rth1_(rth1), rth2_(rth2), pi1_(std::exp2(rth1)), pi2_(std::exp2(rth2)) {
  require(rth1 >= 0.0 && rth2 >= 0.0 && std::isfinite(rth1) && std::isfinite(rth2),
          "target secrecy rates must be finite and non-negative");
}

TargetRates TargetRates::from_pi(double pi1, double pi2) {
  require(pi1 >= 1.0 && pi2 >= 1.0 && std::isfinite(pi1) && std::isfinite(pi2),
          "Pi = 2^rth must be finite and >= 1");
  return {std::log2(pi1), std::log2(pi2), pi1, pi2};
}

void check_sop_alpha(double alpha) {
  require(alpha >= kAlphaMin && alpha <= kAlphaMax,
          "power split " + std::to_string(alpha) + " outside the admissible range [1e-6, 1-1e-6]");
}

namespace {

constexpr double kRefinementTolerance = 1e-10;

// Shared shape of both SOP integrals:
//   s = 1 - (1/m) int_0^inf exp{-pi y / ((c y + 1) lam) - y/m - a/lam} dy
// with m the mean of the integrated gain. Writing the integrand as
// density(y) * exp(-f(y)) and using that the density integrates to one,
//   s = -expm1(-a/lam) + exp(-a/lam) * int density(y) * -expm1(-f(y)) dy.
// The rational map y = m t / (1 - t) turns the density into
// exp(-t/(1-t)) / (1-t)^2, which vanishes smoothly at t = 1.
SopValue sop_integral(double pi, double c, double lam, double a, double m) {
  const double offset = a / lam;
  if (offset > 745.0) return {1.0, 0.0};  // exp(-offset) underflows; s == 1
  auto deficit = [=](double t) {
    const double r = t / (1.0 - t);
    if (r > 745.0) return 0.0;
    const double y = m * r;
    const double f = pi * y / ((c * y + 1.0) * lam);
    const double jacobian = 1.0 / ((1.0 - t) * (1.0 - t));
    return std::exp(-r) * jacobian * -std::expm1(-f);
  };
  const auto q = quadrature::integrate_unit(deficit, kRefinementTolerance);
  const double keep = std::exp(-offset);
  const double value = -std::expm1(-offset) + keep * q.value;
  return {std::clamp(value, 0.0, 1.0), keep * q.error};
}

void check_inputs(const ChannelStats& stats, double alpha) {
  stats.validate();
  check_sop_alpha(alpha);
}

}  // namespace

SopValue exact_sop_near(const ChannelStats& stats, double alpha, const TargetRates& targets) {
  check_inputs(stats, alpha);
  const double pi = targets.pi1();
  const double a1 = (pi - 1.0) / (alpha * stats.rho_t);
  return sop_integral(pi, (1.0 - alpha) * stats.rho_t, stats.lambda1, a1, stats.lambda2);
}

SopValue exact_sop_far(const ChannelStats& stats, double alpha, const TargetRates& targets) {
  check_inputs(stats, alpha);
  const double pi = targets.pi2();
  const double a2 = (pi - 1.0) / ((1.0 - alpha) * stats.rho_t);
  return sop_integral(pi, alpha * stats.rho_t, stats.lambda2, a2, stats.lambda1);
}

SopPair exact_sop(const ChannelStats& stats, double alpha, const TargetRates& targets) {
  const SopValue near = exact_sop_near(stats, alpha, targets);
  const SopValue far = exact_sop_far(stats, alpha, targets);
  return {alpha, near.value, far.value, SopKind::exact, std::max(near.quad_error, far.quad_error)};
}

double asymptotic_sop_near(const ChannelStats& stats, double alpha, const TargetRates& targets) {
  check_inputs(stats, alpha);
  const double exponent =
      (targets.pi1() + alpha - 1.0) / (alpha * (alpha - 1.0) * stats.rho_t * stats.lambda1);
  return std::clamp(-std::expm1(exponent), 0.0, 1.0);
}

double asymptotic_sop_far(const ChannelStats& stats, double alpha, const TargetRates& targets) {
  check_inputs(stats, alpha);
  const double exponent =
      (targets.pi2() - alpha) / (alpha * (alpha - 1.0) * stats.rho_t * stats.lambda2);
  return std::clamp(-std::expm1(exponent), 0.0, 1.0);
}

SopPair asymptotic_sop(const ChannelStats& stats, double alpha, const TargetRates& targets) {
  return {alpha, asymptotic_sop_near(stats, alpha, targets), asymptotic_sop_far(stats, alpha, targets),
          SopKind::asymptotic, 0.0};
}

double log_sop_integrand_near(const ChannelStats& stats, double alpha, const TargetRates& targets, double y) {
  check_inputs(stats, alpha);
  require(y >= 0.0, "integration variable must be non-negative");
  const double pi = targets.pi1();
  const double rho = stats.rho_t;
  return -std::log(stats.lambda2) - pi * y / (((1.0 - alpha) * rho * y + 1.0) * stats.lambda1) -
         y / stats.lambda2 - (pi - 1.0) / (alpha * rho * stats.lambda1);
}

double log_sop_integrand_far(const ChannelStats& stats, double alpha, const TargetRates& targets, double y) {
  check_inputs(stats, alpha);
  require(y >= 0.0, "integration variable must be non-negative");
  const double pi = targets.pi2();
  const double rho = stats.rho_t;
  return -std::log(stats.lambda1) - pi * y / ((alpha * rho * y + 1.0) * stats.lambda2) -
         y / stats.lambda1 - (pi - 1.0) / ((1.0 - alpha) * rho * stats.lambda2);
}

}  // namespace secnoma
