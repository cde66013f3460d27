#include "secnoma/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "secnoma/error.hpp"
#include "secnoma/noma_rates.hpp"

namespace secnoma {

using detail::require;

void SimConfig::validate() const {
  require(realizations >= 1, "simulation needs at least one realization");
  require(workers >= 1, "simulation needs at least one worker");
}

namespace {

struct Tally {
  std::uint64_t outage1 = 0;
  std::uint64_t outage2 = 0;
  std::uint64_t accepted = 0;
  std::uint64_t eligible = 0;
  std::uint64_t violations = 0;
};

// Splits [0, n) into `workers` contiguous ranges, runs `body(first, last)` on
// each and sums the tallies. Integer sums make the merge order irrelevant.
template <class Body>
Tally run_partitioned(std::uint64_t n, unsigned workers, Body body) {
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n));
  if (workers <= 1) return body(0, n);
  std::vector<Tally> parts(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = n / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t first = w * chunk;
    const std::uint64_t last = (w + 1 == workers) ? n : first + chunk;
    threads.emplace_back([&parts, &body, w, first, last] { parts[w] = body(first, last); });
  }
  for (auto& t : threads) t.join();
  Tally total;
  for (const Tally& t : parts) {
    total.outage1 += t.outage1;
    total.outage2 += t.outage2;
    total.accepted += t.accepted;
    total.eligible += t.eligible;
    total.violations += t.violations;
  }
  return total;
}

double binomial_stderr(double p, std::uint64_t n) {
  if (n == 0) return 0.0;
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace

EmpiricalSop empirical_sop(const ChannelStats& stats, double alpha, const TargetRates& targets, const SimConfig& sim) {
  stats.validate();
  sim.validate();
  const PowerSplit split(alpha);
  const GainSampler sampler(stats, sim.seed);
  const double rth1 = targets.rth1();
  const double rth2 = targets.rth2();
  const double rho_t = stats.rho_t;
  const bool conditioned = sim.condition_on_ordering;

  const Tally tally = run_partitioned(sim.realizations, sim.workers, [&](std::uint64_t first, std::uint64_t last) {
    Tally t;
    for (std::uint64_t i = first; i < last; ++i) {
      const GainSample g = sampler(i);
      if (conditioned && !(g.g1 > g.g2)) continue;
      ++t.accepted;
      const RateSet r = rates_from_sinrs(sinr_proposed(g, split, rho_t));
      if (r.rs1 < rth1) ++t.outage1;
      if (r.rs2 < rth2) ++t.outage2;
    }
    return t;
  });

  EmpiricalSop out;
  out.accepted = tally.accepted;
  if (tally.accepted == 0) return out;
  const double n = static_cast<double>(tally.accepted);
  out.so1 = static_cast<double>(tally.outage1) / n;
  out.so2 = static_cast<double>(tally.outage2) / n;
  out.stderr1 = binomial_stderr(out.so1, tally.accepted);
  out.stderr2 = binomial_stderr(out.so2, tally.accepted);
  return out;
}

ViolationCount empirical_conventional_violation_rate(const ChannelStats& stats, double alpha, const SimConfig& sim) {
  stats.validate();
  sim.validate();
  const PowerSplit split(alpha);
  const GainSampler sampler(stats, sim.seed);
  const double rho_t = stats.rho_t;

  const Tally tally = run_partitioned(sim.realizations, sim.workers, [&](std::uint64_t first, std::uint64_t last) {
    Tally t;
    for (std::uint64_t i = first; i < last; ++i) {
      const GainSample g = sampler(i);
      if (!(g.g1 > g.g2)) continue;
      ++t.eligible;
      if (rates_from_sinrs(sinr_conventional(g, split, rho_t)).rs2 > 0.0) ++t.violations;
    }
    return t;
  });
  return {tally.violations, tally.eligible, sim.realizations};
}

double binomial_bound(double p, std::uint64_t n) { return 3.0 * binomial_stderr(p, n) + 1e-6; }

bool ValidationRow::within_bound1() const noexcept { return std::abs(empirical1 - analytical1) <= bound1; }
bool ValidationRow::within_bound2() const noexcept { return std::abs(empirical2 - analytical2) <= bound2; }

RmseReport rmse_vs_analytical(const ChannelStats& base, std::span<const ValidationPoint> grid, const SimConfig& sim) {
  return rmse_vs_analytical(base, grid, sim, 1.0);
}

RmseReport rmse_vs_analytical(const ChannelStats& base, std::span<const ValidationPoint> grid, const SimConfig& sim,
                              double analytical_lambda1_scale) {
  require(!grid.empty(), "validation grid must not be empty");
  require(analytical_lambda1_scale > 0.0, "lambda1 scale must be positive");
  RmseReport report;
  report.rows.reserve(grid.size());
  double sq1 = 0.0;
  double sq2 = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const ValidationPoint& pt = grid[i];
    const ChannelStats stats = stats_at_received_snr(base, pt.rho_r_db);
    const TargetRates targets(pt.rth1, pt.rth2);

    ChannelStats analytic = stats;
    analytic.lambda1 *= analytical_lambda1_scale;
    const SopPair exact = exact_sop(analytic, pt.alpha, targets);

    SimConfig point_sim = sim;
    point_sim.seed = derive_seed(sim.seed, i);
    const EmpiricalSop emp = empirical_sop(stats, pt.alpha, targets, point_sim);

    ValidationRow row;
    row.point = pt;
    row.analytical1 = exact.so1;
    row.analytical2 = exact.so2;
    row.empirical1 = emp.so1;
    row.empirical2 = emp.so2;
    row.bound1 = binomial_bound(exact.so1, emp.accepted);
    row.bound2 = binomial_bound(exact.so2, emp.accepted);
    sq1 += (emp.so1 - exact.so1) * (emp.so1 - exact.so1);
    sq2 += (emp.so2 - exact.so2) * (emp.so2 - exact.so2);
    report.rows.push_back(row);
  }
  report.rmse1 = std::sqrt(sq1 / static_cast<double>(grid.size()));
  report.rmse2 = std::sqrt(sq2 / static_cast<double>(grid.size()));
  return report;
}

}  // namespace secnoma
