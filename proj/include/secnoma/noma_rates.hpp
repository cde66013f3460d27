#pragma once

#include "secnoma/channel_model.hpp"

namespace secnoma {

/// Fraction of P_t given to the near user; 1 - alpha goes to the far user.
class PowerSplit {
 public:
  /// Throws InvalidArgument unless 0 < alpha < 1.
  explicit PowerSplit(double alpha);

  double near() const noexcept { return alpha_; }
  double far() const noexcept { return 1.0 - alpha_; }
  double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

enum class DecodingOrder { conventional, proposed };

/// gij is the SINR of user i's signal when decoded at user j.
struct SinrSet {
  double g11 = 0.0;
  double g12 = 0.0;
  double g21 = 0.0;
  double g22 = 0.0;
  DecodingOrder order = DecodingOrder::proposed;
};

/// Rates in bits/s/Hz. Secrecy rates are signed; a negative value means the
/// other (untrusted) user decodes the signal better than its owner.
struct RateSet {
  double r11 = 0.0;
  double r12 = 0.0;
  double r21 = 0.0;
  double r22 = 0.0;
  double rs1 = 0.0;  // r11 - r12
  double rs2 = 0.0;  // r22 - r21
};

/// Both users decode the far user's signal first (standard SIC ordering).
SinrSet sinr_conventional(const GainSample& sample, PowerSplit alpha, double rho_t);

/// Each user decodes the other user's signal first and then its own after SIC.
SinrSet sinr_proposed(const GainSample& sample, PowerSplit alpha, double rho_t);

RateSet rates_from_sinrs(const SinrSet& sinrs);

/// Range of alpha in which both users have strictly positive secrecy rate
/// under the proposed order: lower < alpha < upper.
struct SecrecyWindow {
  double lower = 0.0;
  double upper = 1.0;

  bool empty() const noexcept { return lower >= upper; }
  bool contains(double alpha) const noexcept { return lower < alpha && alpha < upper; }
};

/// Requires g1 >= g2 > 0 (ties give lower = 0).
SecrecyWindow positive_secrecy_window(const GainSample& sample, double rho_t);

/// True iff the far user's secrecy rate under the conventional order is <= 0.
/// Requires g1 >= g2.
bool conventional_far_secrecy_is_nonpositive(const GainSample& sample, PowerSplit alpha, double rho_t);

}  // namespace secnoma
