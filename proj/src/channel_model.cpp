#include "secnoma/channel_model.hpp"

#include <cmath>
#include <string>

#include "secnoma/error.hpp"

namespace secnoma {

using detail::require;

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) {
  require(watts > 0.0, "power must be positive to convert to dBm");
  return 10.0 * std::log10(watts) + 30.0;
}

void SystemParams::validate() const {
  require(d1 > 0.0 && d2 > 0.0, "distances must be positive");
  require(d1 < d2, "near user must be closer than the far user (d1 < d2)");
  require(path_loss_exponent > 0.0, "path-loss exponent must be positive");
  require(path_loss_constant > 0.0, "path-loss constant must be positive");
  require(noise_power > 0.0, "noise power must be positive");
  require(transmit_power > 0.0, "transmit power must be positive");
}

SystemParams SystemParams::with_received_snr_db(double rho_r_db) const {
  require(std::isfinite(rho_r_db), "received SNR must be finite");
  SystemParams out = *this;
  const double lambda2 = mean_gain(d2, path_loss_constant, path_loss_exponent);
  out.transmit_power = std::pow(10.0, rho_r_db / 10.0) * noise_power / lambda2;
  return out;
}

void ChannelStats::validate() const {
  require(lambda1 > 0.0 && lambda2 > 0.0, "mean channel gains must be positive");
  require(lambda1 >= lambda2, "near user must be the strong user (lambda1 >= lambda2)");
  require(rho_t > 0.0 && std::isfinite(rho_t), "transmit SNR must be positive and finite");
}

double mean_gain(double distance, double path_loss_constant, double path_loss_exponent) {
  require(distance > 0.0, "distance must be positive");
  require(path_loss_constant > 0.0, "path-loss constant must be positive");
  require(path_loss_exponent > 0.0, "path-loss exponent must be positive");
  return path_loss_constant * std::pow(distance, -path_loss_exponent);
}

ChannelStats derive_stats(const SystemParams& params) {
  params.validate();
  ChannelStats stats;
  stats.lambda1 = mean_gain(params.d1, params.path_loss_constant, params.path_loss_exponent);
  stats.lambda2 = mean_gain(params.d2, params.path_loss_constant, params.path_loss_exponent);
  stats.rho_t = params.transmit_power / params.noise_power;
  require(stats.lambda1 > stats.lambda2, "derived gains violate lambda1 > lambda2");
  return stats;
}

double received_snr_far_db(const ChannelStats& stats) {
  stats.validate();
  return 10.0 * std::log10(stats.rho_t * stats.lambda2);
}

ChannelStats stats_at_received_snr(ChannelStats stats, double rho_r_db) {
  require(std::isfinite(rho_r_db), "received SNR must be finite");
  stats.rho_t = std::pow(10.0, rho_r_db / 10.0) / stats.lambda2;
  stats.validate();
  return stats;
}

GainSampler::GainSampler(const ChannelStats& stats, std::uint64_t seed)
    : lambda1_(stats.lambda1), lambda2_(stats.lambda2), rng_(seed) {
  require(lambda1_ > 0.0 && lambda2_ > 0.0, "mean channel gains must be positive");
}

GainSample GainSampler::operator()(std::uint64_t index) const noexcept {
  const double u1 = rng_.uniform(2 * index);
  const double u2 = rng_.uniform(2 * index + 1);
  return {-lambda1_ * std::log1p(-u1), -lambda2_ * std::log1p(-u2)};
}

std::vector<GainSample> GainSampler::sample_range(std::uint64_t first, std::size_t count) const {
  std::vector<GainSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back((*this)(first + i));
  return out;
}

std::vector<GainSample> sample_gains(const ChannelStats& stats, std::size_t count, std::uint64_t seed) {
  require(count >= 1, "sample count must be at least 1");
  return GainSampler(stats, seed).sample_range(0, count);
}

}  // namespace secnoma
