#include "secnoma/power_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "secnoma/error.hpp"

namespace secnoma {

using detail::require;

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
constexpr double kCrossingTolerance = 1e-8;

double checked(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw OptimizationError("objective returned a non-finite value at alpha = " + std::to_string(x));
  }
  return v;
}

bool admissible(double alpha) { return alpha >= kAlphaMin && alpha <= kAlphaMax; }

}  // namespace

void GssConfig::validate() const {
  require(lower >= 0.0 && upper <= 1.0 && lower < upper, "GSS bracket must satisfy 0 <= lower < upper <= 1");
  require(tolerance > 0.0, "GSS tolerance must be positive");
}

std::size_t gss_iteration_bound(const GssConfig& config) {
  config.validate();
  const double ratio = config.tolerance / (config.upper - config.lower);
  if (ratio >= 1.0) return 1;
  return static_cast<std::size_t>(std::ceil(std::log(ratio) / std::log(kInvPhi))) + 1;
}

GssResult gss_minimize(const std::function<double(double)>& objective, const GssConfig& config) {
  config.validate();
  double a = config.lower;
  double b = config.upper;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = checked(objective, c);
  double fd = checked(objective, d);
  std::size_t iterations = 0;
  while (b - a >= config.tolerance) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = checked(objective, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = checked(objective, d);
    }
    ++iterations;
  }
  const double mid = 0.5 * (a + b);
  return {mid, checked(objective, mid), iterations};
}

GssConfig sop_search_config(double tolerance) { return {kAlphaMin, kAlphaMax, tolerance}; }

GssResult optimal_pa_near(const ChannelStats& stats, const TargetRates& targets, const GssConfig& config) {
  return gss_minimize([&](double a) { return exact_sop_near(stats, a, targets).value; }, config);
}

GssResult optimal_pa_far(const ChannelStats& stats, const TargetRates& targets, const GssConfig& config) {
  return gss_minimize([&](double a) { return exact_sop_far(stats, a, targets).value; }, config);
}

ClosedFormPa optimal_pa_near_asymptotic(const TargetRates& targets) {
  const double pi = targets.pi1();
  if (pi == 1.0) return {0.0, true};
  return {-(pi - 1.0) + std::sqrt(pi * (pi - 1.0)), false};
}

ClosedFormPa optimal_pa_far_asymptotic(const TargetRates& targets) {
  const double pi = targets.pi2();
  if (pi == 1.0) return {1.0, true};
  return {pi - std::sqrt(pi * (pi - 1.0)), false};
}

std::optional<double> equal_sop_alpha(const ChannelStats& stats, const TargetRates& targets, double tol) {
  return equal_sop_alpha(stats, targets, kAlphaMin, kAlphaMax, tol);
}

std::optional<double> equal_sop_alpha(const ChannelStats& stats, const TargetRates& targets, double lower,
                                      double upper, double tol) {
  require(tol > 0.0, "bisection tolerance must be positive");
  auto gap = [&](double a) {
    return exact_sop_near(stats, a, targets).value - exact_sop_far(stats, a, targets).value;
  };
  double lo = std::max(lower, kAlphaMin);
  double hi = std::min(upper, kAlphaMax);
  require(lo < hi, "bisection bracket is empty");
  double g_lo = gap(lo);
  const double g_hi = gap(hi);
  if (std::abs(g_lo) <= tol) return lo;
  if (std::abs(g_hi) <= tol) return hi;
  if ((g_lo > 0.0) == (g_hi > 0.0)) return std::nullopt;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = gap(mid);
    if (std::abs(g_mid) <= tol || mid == lo || mid == hi) return mid;
    if ((g_mid > 0.0) == (g_lo > 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

AsymptoticCrossing equal_sop_alpha_asymptotic(const ChannelStats& stats, const TargetRates& targets) {
  stats.validate();
  const double l1 = stats.lambda1;
  const double l2 = stats.lambda2;
  const double alpha = (targets.pi2() * l1 + l2 * (1.0 - targets.pi1())) / (l1 + l2);
  return {alpha, admissible(alpha)};
}

namespace {

template <class Score>
MinMaxOutcome select(CandidateSet candidates, SopKind kind, Score&& score) {
  MinMaxOutcome out;
  out.kind = kind;
  bool found = false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Candidate& c = candidates[i];
    c.feasible = c.alpha.has_value() && admissible(*c.alpha) && !(c.degenerate && kind == SopKind::asymptotic);
    if (!c.feasible) continue;
    const SopPair sop = score(*c.alpha);
    c.so1 = sop.so1;
    c.so2 = sop.so2;
    const double obj = c.max_sop();
    if (!found || obj < out.objective || (obj == out.objective && *c.alpha < out.selected)) {
      found = true;
      out.selected_index = i;
      out.selected = *c.alpha;
      out.objective = obj;
    }
  }
  if (!found) throw OptimizationError("no admissible min-max candidate survived");
  out.candidates = candidates;
  return out;
}

}  // namespace

MinMaxOutcome minmax_pa(const ChannelStats& stats, const TargetRates& targets, const GssConfig& config) {
  CandidateSet candidates;
  const GssResult near = optimal_pa_near(stats, targets, config);
  const GssResult far = optimal_pa_far(stats, targets, config);
  // A GSS optimum within one tolerance of the bracket edge is a boundary optimum.
  auto at_edge = [&](double a) { return a - config.lower < config.tolerance || config.upper - a < config.tolerance; };
  candidates[0] = {CandidateRole::near_optimum, near.argmin, false, at_edge(near.argmin), 0.0, 0.0};
  candidates[1] = {CandidateRole::far_optimum, far.argmin, false, at_edge(far.argmin), 0.0, 0.0};
  std::optional<double> crossing;
  if (near.argmin != far.argmin) {
    crossing = equal_sop_alpha(stats, targets, std::min(near.argmin, far.argmin), std::max(near.argmin, far.argmin),
                               kCrossingTolerance);
  }
  if (!crossing) crossing = equal_sop_alpha(stats, targets, kCrossingTolerance);
  candidates[2] = {CandidateRole::equal_sop, crossing, false, false, 0.0, 0.0};
  return select(candidates, SopKind::exact, [&](double a) { return exact_sop(stats, a, targets); });
}

MinMaxOutcome minmax_pa_asymptotic(const ChannelStats& stats, const TargetRates& targets) {
  CandidateSet candidates;
  const ClosedFormPa near = optimal_pa_near_asymptotic(targets);
  const ClosedFormPa far = optimal_pa_far_asymptotic(targets);
  const AsymptoticCrossing cross = equal_sop_alpha_asymptotic(stats, targets);
  candidates[0] = {CandidateRole::near_optimum, near.alpha, false, near.degenerate, 0.0, 0.0};
  candidates[1] = {CandidateRole::far_optimum, far.alpha, false, far.degenerate, 0.0, 0.0};
  candidates[2] = {CandidateRole::equal_sop, cross.alpha, false, false, 0.0, 0.0};
  return select(candidates, SopKind::asymptotic, [&](double a) { return asymptotic_sop(stats, a, targets); });
}

double max_sop_exact(const ChannelStats& stats, double alpha, const TargetRates& targets) {
  const SopPair p = exact_sop(stats, alpha, targets);
  return p.so1 > p.so2 ? p.so1 : p.so2;
}

}  // namespace secnoma
