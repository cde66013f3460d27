#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>

#include "secnoma/channel_model.hpp"
#include "secnoma/sop_analysis.hpp"

namespace secnoma {

/// Search bracket and tolerance for golden-section search.
struct GssConfig {
  double lower = kAlphaMin;
  double upper = kAlphaMax;
  double tolerance = 0.01;

  void validate() const;
};

struct GssResult {
  double argmin = 0.0;
  double value = 0.0;
  std::size_t iterations = 0;
};

/// Upper bound on golden-section iterations for a bracket and tolerance.
std::size_t gss_iteration_bound(const GssConfig& config);

/// Golden-section search for the minimizer of a unimodal function. The
/// bracket shrinks by 0.618 per iteration and the search stops once it is
/// shorter than config.tolerance; the midpoint of the final bracket is
/// returned. Throws OptimizationError on a non-finite objective value.
GssResult gss_minimize(const std::function<double(double)>& objective, const GssConfig& config = {});

/// Bracket used by the SOP optimizers: the admissible range [kAlphaMin, kAlphaMax]
/// with the given tolerance.
GssConfig sop_search_config(double tolerance = 0.01);

/// Minimizer of the exact near-user SOP.
GssResult optimal_pa_near(const ChannelStats& stats, const TargetRates& targets, const GssConfig& config = sop_search_config());

/// Minimizer of the exact far-user SOP.
GssResult optimal_pa_far(const ChannelStats& stats, const TargetRates& targets, const GssConfig& config = sop_search_config());

/// Closed-form asymptotic optimum. `degenerate` is set when the target rate
/// is zero (Pi = 1) and the optimum sits on the alpha = 0 / alpha = 1 boundary.
struct ClosedFormPa {
  double alpha = 0.0;
  bool degenerate = false;
};

/// -(Pi1 - 1) + sqrt(Pi1 (Pi1 - 1)); independent of the channel statistics.
ClosedFormPa optimal_pa_near_asymptotic(const TargetRates& targets);

/// Pi2 - sqrt(Pi2 (Pi2 - 1)).
ClosedFormPa optimal_pa_far_asymptotic(const TargetRates& targets);

/// Crossing of the two exact SOP curves, found by bisection on
/// s_o1 - s_o2 over the admissible range. Empty when the difference does not
/// change sign over the range.
std::optional<double> equal_sop_alpha(const ChannelStats& stats, const TargetRates& targets, double tol = 1e-8);

/// Bisection restricted to [lower, upper] (clamped to the admissible range).
std::optional<double> equal_sop_alpha(const ChannelStats& stats, const TargetRates& targets, double lower,
                                      double upper, double tol);

/// Closed-form crossing of the asymptotic SOPs. `feasible` is false when
/// the value falls outside the admissible range; the raw value is kept.
struct AsymptoticCrossing {
  double alpha = 0.0;
  bool feasible = false;
};

AsymptoticCrossing equal_sop_alpha_asymptotic(const ChannelStats& stats, const TargetRates& targets);

enum class CandidateRole { near_optimum, far_optimum, equal_sop };

struct Candidate {
  CandidateRole role = CandidateRole::near_optimum;
  std::optional<double> alpha;  // empty when the candidate does not exist
  bool feasible = false;        // admitted to the argmin
  bool degenerate = false;      // closed form on the boundary (Pi = 1)
  double so1 = 0.0;             // evaluated only when feasible
  double so2 = 0.0;

  double max_sop() const noexcept { return so1 > so2 ? so1 : so2; }
};

using CandidateSet = std::array<Candidate, 3>;

struct MinMaxOutcome {
  CandidateSet candidates;
  std::size_t selected_index = 0;
  double selected = 0.0;
  double objective = 0.0;  // max(s_o1, s_o2) at `selected`
  SopKind kind = SopKind::exact;
};

/// Fairness-optimal split: argmin of max(s_o1, s_o2) over the near optimum,
/// the far optimum and the equal-SOP crossing. Both SOPs tend to 1 at opposite
/// ends of the range, so the difference can change sign more than once; the
/// crossing is searched between the two single-user optima first (where the
/// slopes have opposite signs) and over the whole range otherwise. Candidates outside
/// [kAlphaMin, kAlphaMax] are dropped; ties go to the smaller alpha.
MinMaxOutcome minmax_pa(const ChannelStats& stats, const TargetRates& targets, const GssConfig& config = sop_search_config());

/// Same selection over the closed-form candidates, scored with the asymptotic SOPs.
MinMaxOutcome minmax_pa_asymptotic(const ChannelStats& stats, const TargetRates& targets);

/// max(s_o1, s_o2) with the exact SOPs.
double max_sop_exact(const ChannelStats& stats, double alpha, const TargetRates& targets);

}  // namespace secnoma
