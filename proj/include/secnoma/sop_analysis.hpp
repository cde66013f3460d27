#pragma once

#include "secnoma/channel_model.hpp"

namespace secnoma {

/// Target secrecy rates (bits/s/Hz) and their exponentials Pi = 2^rth.
class TargetRates {
 public:
  TargetRates(double rth1, double rth2);

  /// Builds the targets from Pi directly; rth = log2(Pi).
  static TargetRates from_pi(double pi1, double pi2);

  double rth1() const noexcept { return rth1_; }
  double rth2() const noexcept { return rth2_; }
  double pi1() const noexcept { return pi1_; }
  double pi2() const noexcept { return pi2_; }

 private:
  TargetRates(double rth1, double rth2, double pi1, double pi2) noexcept
      : rth1_(rth1), rth2_(rth2), pi1_(pi1), pi2_(pi2) {}

  double rth1_;
  double rth2_;
  double pi1_;
  double pi2_;
};

enum class SopKind { exact, asymptotic, empirical };

/// Admissible alpha for the SOP expressions: [kAlphaMin, kAlphaMax].
inline constexpr double kAlphaMin = 1e-6;
inline constexpr double kAlphaMax = 1.0 - 1e-6;

/// Throws InvalidArgument if alpha is outside [kAlphaMin, kAlphaMax].
void check_sop_alpha(double alpha);

struct SopValue {
  double value = 0.0;
  double quad_error = 0.0;
};

struct SopPair {
  double alpha = 0.0;
  double so1 = 0.0;
  double so2 = 0.0;
  SopKind kind = SopKind::exact;
  double quad_error = 0.0;  // max of both users' estimates (exact kind only)
};

/// Near-user SOP, Pr{R_s1 < rth1}, by quadrature of the semi-infinite integral
/// over |h2|^2, mapped to (0, 1) with y = lambda2 t / (1 - t).
SopValue exact_sop_near(const ChannelStats& stats, double alpha, const TargetRates& targets);

/// Far-user SOP, Pr{R_s2 < rth2}, integrating over |h1|^2.
SopValue exact_sop_far(const ChannelStats& stats, double alpha, const TargetRates& targets);

SopPair exact_sop(const ChannelStats& stats, double alpha, const TargetRates& targets);

/// High-SNR closed form: 1 - exp{(Pi1 + alpha - 1) / (alpha (alpha - 1) rho_t lambda1)}.
double asymptotic_sop_near(const ChannelStats& stats, double alpha, const TargetRates& targets);

/// High-SNR closed form: 1 - exp{(Pi2 - alpha) / (alpha (alpha - 1) rho_t lambda2)}.
double asymptotic_sop_far(const ChannelStats& stats, double alpha, const TargetRates& targets);

SopPair asymptotic_sop(const ChannelStats& stats, double alpha, const TargetRates& targets);

/// log of the near-user integrand at gain y (the density-weighted
/// complementary CDF term inside the near-user SOP integral).
double log_sop_integrand_near(const ChannelStats& stats, double alpha, const TargetRates& targets, double y);

/// log of the far-user integrand at gain y.
double log_sop_integrand_far(const ChannelStats& stats, double alpha, const TargetRates& targets, double y);

}  // namespace secnoma
