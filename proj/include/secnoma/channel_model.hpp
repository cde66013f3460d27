#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "secnoma/counter_rng.hpp"

namespace secnoma {

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Geometry, path loss and power budget of the two-user downlink.
/// Powers are stored in Watts; use the dBm helpers at the boundary.
struct SystemParams {
  double d1 = 50.0;                  // BS -> near user U1 [m]
  double d2 = 100.0;                 // BS -> far user U2 [m]
  double path_loss_exponent = 2.5;   // n
  double path_loss_constant = 1.0;   // Lc
  double noise_power = 1e-9;         // sigma^2 [W]  (-60 dBm)
  double transmit_power = 0.1;       // P_t [W]      (20 dBm, i.e. rho_r = 30 dB at the defaults)

  /// Throws InvalidArgument unless every field is positive and d1 < d2.
  void validate() const;

  /// Copy with P_t chosen so that the far user's mean received SNR is rho_r_db.
  SystemParams with_received_snr_db(double rho_r_db) const;
};

/// Mean channel power gains and the transmit SNR.
struct ChannelStats {
  double lambda1 = 0.0;  // E|h1|^2
  double lambda2 = 0.0;  // E|h2|^2
  double rho_t = 0.0;    // P_t / sigma^2, linear

  /// Positivity of all fields and lambda1 >= lambda2 (equality admitted for
  /// the symmetric reference configuration).
  void validate() const;
};

struct GainSample {
  double g1 = 0.0;  // |h1|^2
  double g2 = 0.0;  // |h2|^2
};

/// Lc * d^-n
double mean_gain(double distance, double path_loss_constant, double path_loss_exponent);

ChannelStats derive_stats(const SystemParams& params);

/// 10 log10(rho_t * lambda2): mean received SNR at the far user in dB.
double received_snr_far_db(const ChannelStats& stats);

/// Stats with rho_t rescaled so that received_snr_far_db() == rho_r_db.
ChannelStats stats_at_received_snr(ChannelStats stats, double rho_r_db);

/// Fading generator. Sample i uses counters 2i and 2i+1 of the stream, so
/// sample_range(first, n) equals the corresponding slice of a serial run.
class GainSampler {
 public:
  GainSampler(const ChannelStats& stats, std::uint64_t seed);

  GainSample operator()(std::uint64_t index) const noexcept;

  std::vector<GainSample> sample_range(std::uint64_t first, std::size_t count) const;

 private:
  double lambda1_;
  double lambda2_;
  CounterRng rng_;
};

/// Independent Exponential(lambda1), Exponential(lambda2) draws by inverse CDF.
std::vector<GainSample> sample_gains(const ChannelStats& stats, std::size_t count, std::uint64_t seed);

}  // namespace secnoma
