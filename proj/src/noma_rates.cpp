#include "secnoma/noma_rates.hpp"

#include <algorithm>
#include <cmath>

#include "secnoma/error.hpp"

namespace secnoma {

using detail::require;

PowerSplit::PowerSplit(double alpha) : alpha_(alpha) {
  require(alpha > 0.0 && alpha < 1.0, "power split must lie in the open interval (0, 1)");
}

namespace {

void check_channel(const GainSample& s, double rho_t) {
  require(s.g1 >= 0.0 && s.g2 >= 0.0, "channel power gains must be non-negative");
  require(rho_t > 0.0, "transmit SNR must be positive");
}

}  // namespace

SinrSet sinr_conventional(const GainSample& s, PowerSplit alpha, double rho_t) {
  check_channel(s, rho_t);
  const double a = alpha.near();
  const double b = alpha.far();
  const double inv_rho = 1.0 / rho_t;
  SinrSet out;
  out.order = DecodingOrder::conventional;
  out.g21 = b * s.g1 / (a * s.g1 + inv_rho);
  out.g22 = b * s.g2 / (a * s.g2 + inv_rho);
  out.g11 = a * rho_t * s.g1;
  out.g12 = a * rho_t * s.g2;
  return out;
}

SinrSet sinr_proposed(const GainSample& s, PowerSplit alpha, double rho_t) {
  check_channel(s, rho_t);
  const double a = alpha.near();
  const double b = alpha.far();
  const double inv_rho = 1.0 / rho_t;
  SinrSet out;
  out.order = DecodingOrder::proposed;
  out.g21 = b * s.g1 / (a * s.g1 + inv_rho);
  out.g12 = a * s.g2 / (b * s.g2 + inv_rho);
  out.g11 = a * rho_t * s.g1;
  out.g22 = b * rho_t * s.g2;
  return out;
}

RateSet rates_from_sinrs(const SinrSet& sinrs) {
  require(sinrs.g11 >= 0.0 && sinrs.g12 >= 0.0 && sinrs.g21 >= 0.0 && sinrs.g22 >= 0.0,
          "SINRs must be non-negative");
  RateSet out;
  out.r11 = std::log2(1.0 + sinrs.g11);
  out.r12 = std::log2(1.0 + sinrs.g12);
  out.r21 = std::log2(1.0 + sinrs.g21);
  out.r22 = std::log2(1.0 + sinrs.g22);
  out.rs1 = out.r11 - out.r12;
  out.rs2 = out.r22 - out.r21;
  return out;
}

SecrecyWindow positive_secrecy_window(const GainSample& s, double rho_t) {
  require(rho_t > 0.0, "transmit SNR must be positive");
  require(s.g2 > 0.0, "far user gain must be positive");
  require(s.g1 >= s.g2, "secrecy window requires g1 >= g2");
  SecrecyWindow w;
  w.lower = (s.g1 - s.g2) / (s.g1 * s.g2 * rho_t);
  w.upper = std::min(1.0, 1.0 + w.lower);
  return w;
}

bool conventional_far_secrecy_is_nonpositive(const GainSample& s, PowerSplit alpha, double rho_t) {
  require(s.g1 >= s.g2, "conventional-order check requires g1 >= g2");
  return rates_from_sinrs(sinr_conventional(s, alpha, rho_t)).rs2 <= 0.0;
}

}  // namespace secnoma
