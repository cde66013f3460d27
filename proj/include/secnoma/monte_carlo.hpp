#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "secnoma/channel_model.hpp"
#include "secnoma/sop_analysis.hpp"

namespace secnoma {

struct SimConfig {
  std::uint64_t realizations = 1'000'000;
  std::uint64_t seed = 2019;
  /// Keep only realizations with g1 > g2 (ordered-gain reading of the model).
  bool condition_on_ordering = false;
  /// Worker threads; results do not depend on this value.
  unsigned workers = 1;

  void validate() const;
};

struct EmpiricalSop {
  double so1 = 0.0;
  double so2 = 0.0;
  double stderr1 = 0.0;  // sqrt(p (1 - p) / N)
  double stderr2 = 0.0;
  std::uint64_t accepted = 0;  // realizations that entered the estimate
};

/// Outage frequencies of both users under the proposed decoding order.
/// A realization is in outage when R_s < R_th (strict).
EmpiricalSop empirical_sop(const ChannelStats& stats, double alpha, const TargetRates& targets, const SimConfig& sim);

struct ViolationCount {
  std::uint64_t violations = 0;  // g1 > g2 and conventional R_s2 > 0
  std::uint64_t eligible = 0;    // samples with g1 > g2
  std::uint64_t total = 0;

  double rate() const noexcept { return total == 0 ? 0.0 : static_cast<double>(violations) / static_cast<double>(total); }
};

/// Counts samples where the far user would get positive secrecy under the
/// conventional order despite g1 > g2. Expected to be zero.
ViolationCount empirical_conventional_violation_rate(const ChannelStats& stats, double alpha, const SimConfig& sim);

/// One point of an analytical-vs-simulation comparison grid.
struct ValidationPoint {
  double alpha = 0.5;
  double rho_r_db = 30.0;
  double rth1 = 1.0;
  double rth2 = 1.0;
};

struct ValidationRow {
  ValidationPoint point;
  double analytical1 = 0.0;
  double empirical1 = 0.0;
  double bound1 = 0.0;  // 3 sqrt(p (1 - p) / N) + 1e-6, with p the analytical value
  double analytical2 = 0.0;
  double empirical2 = 0.0;
  double bound2 = 0.0;

  bool within_bound1() const noexcept;
  bool within_bound2() const noexcept;
};

struct RmseReport {
  std::vector<ValidationRow> rows;
  double rmse1 = 0.0;
  double rmse2 = 0.0;
};

/// Binomial acceptance bound for an estimate of probability p from n draws.
double binomial_bound(double p, std::uint64_t n);

/// Evaluates exact and empirical SOPs at every grid point and the RMSE over
/// the grid. Point i draws from the stream derive_seed(sim.seed, i).
RmseReport rmse_vs_analytical(const ChannelStats& base, std::span<const ValidationPoint> grid, const SimConfig& sim);

/// Same, with lambda1 scaled by `analytical_lambda1_scale` on the analytical
/// side only. Used to check that the validator catches a wrong model.
RmseReport rmse_vs_analytical(const ChannelStats& base, std::span<const ValidationPoint> grid, const SimConfig& sim,
                              double analytical_lambda1_scale);

}  // namespace secnoma
