#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "secnoma/channel_model.hpp"
#include "secnoma/error.hpp"

using namespace secnoma;

TEST_SUITE("channel_model") {

TEST_CASE("mean gain follows Lc * d^-n") {
  CHECK(mean_gain(1.0, 1.0, 2.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(mean_gain(100.0, 1.0, 2.5) == doctest::Approx(1e-5).epsilon(1e-12));
  CHECK(mean_gain(50.0, 1.0, 2.5) == doctest::Approx(1.0 / (2500.0 * std::sqrt(50.0))).epsilon(1e-12));
  CHECK(mean_gain(10.0, 3.0, 2.0) == doctest::Approx(0.03).epsilon(1e-12));
}

TEST_CASE("mean gain rejects non-positive inputs") {
  CHECK_THROWS_AS(mean_gain(0.0, 1.0, 2.5), InvalidArgument);
  CHECK_THROWS_AS(mean_gain(10.0, -1.0, 2.5), InvalidArgument);
  CHECK_THROWS_AS(mean_gain(10.0, 1.0, 0.0), InvalidArgument);
}

TEST_CASE("dBm conversion round trip") {
  CHECK(dbm_to_watts(-60.0) == doctest::Approx(1e-9).epsilon(1e-12));
  CHECK(dbm_to_watts(20.0) == doctest::Approx(0.1).epsilon(1e-12));
  for (double dbm : {-90.0, -3.5, 0.0, 17.0, 46.0}) CHECK(watts_to_dbm(dbm_to_watts(dbm)) == doctest::Approx(dbm));
}

TEST_CASE("derived stats at the reference geometry") {
  const SystemParams params;
  const ChannelStats stats = derive_stats(params);
  CHECK(stats.lambda1 == doctest::Approx(std::pow(50.0, -2.5)).epsilon(1e-12));
  CHECK(stats.lambda2 == doctest::Approx(1e-5).epsilon(1e-12));
  CHECK(stats.rho_t == doctest::Approx(1e8).epsilon(1e-12));
  CHECK(stats.lambda1 > stats.lambda2);
  CHECK(received_snr_far_db(stats) == doctest::Approx(30.0).epsilon(1e-12));
}

TEST_CASE("received SNR examples") {
  CHECK(received_snr_far_db({1.0, 1.0, 1.0}) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(received_snr_far_db({2e-5, 1e-5, 1e8}) == doctest::Approx(30.0));
  CHECK(received_snr_far_db({2e-5, 1e-5, 1e7}) == doctest::Approx(20.0));
  const ChannelStats moved = stats_at_received_snr(derive_stats(SystemParams{}), 12.5);
  CHECK(received_snr_far_db(moved) == doctest::Approx(12.5));
  const SystemParams p = SystemParams{}.with_received_snr_db(40.0);
  CHECK(received_snr_far_db(derive_stats(p)) == doctest::Approx(40.0));
}

TEST_CASE("geometry must put the near user closer") {
  SystemParams params;
  params.d2 = params.d1;
  CHECK_THROWS_AS(derive_stats(params), InvalidArgument);
  params.d2 = 30.0;
  CHECK_THROWS_AS(derive_stats(params), InvalidArgument);
  params = SystemParams{};
  params.noise_power = 0.0;
  CHECK_THROWS_AS(derive_stats(params), InvalidArgument);
}

TEST_CASE("sampling is deterministic and partition independent") {
  const ChannelStats stats = derive_stats(SystemParams{});
  const auto a = sample_gains(stats, 1000, 7);
  const auto b = sample_gains(stats, 1000, 7);
  const auto c = sample_gains(stats, 1000, 8);
  REQUIRE(a.size() == 1000);
  bool same = true;
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    same = same && a[i].g1 == b[i].g1 && a[i].g2 == b[i].g2;
    differs = differs || a[i].g1 != c[i].g1;
  }
  CHECK(same);
  CHECK(differs);

  const GainSampler sampler(stats, 7);
  const auto slice = sampler.sample_range(400, 250);
  for (std::size_t i = 0; i < slice.size(); ++i) {
    CHECK(slice[i].g1 == a[400 + i].g1);
    CHECK(slice[i].g2 == a[400 + i].g2);
  }
}

TEST_CASE("sample means and distribution match the exponential law") {
  const ChannelStats stats{3.0, 0.5, 1.0};
  constexpr std::size_t n = 1'000'000;
  const auto samples = sample_gains(stats, n, 2019);
  std::vector<double> g1(n), g2(n);
  for (std::size_t i = 0; i < n; ++i) {
    g1[i] = samples[i].g1;
    g2[i] = samples[i].g2;
  }
  const double m1 = std::accumulate(g1.begin(), g1.end(), 0.0) / n;
  const double m2 = std::accumulate(g2.begin(), g2.end(), 0.0) / n;
  // Exponential has standard deviation equal to its mean.
  CHECK(std::abs(m1 - 3.0) <= 3.0 * 3.0 / std::sqrt(double(n)));
  CHECK(std::abs(m2 - 0.5) <= 3.0 * 0.5 / std::sqrt(double(n)));
  CHECK(oracle::ks_exponential(g1, 3.0) <= 0.002);
  CHECK(oracle::ks_exponential(g2, 0.5) <= 0.002);
}

TEST_CASE("uniform draws stay strictly inside (0, 1)") {
  const CounterRng rng(0);
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const double u = rng.uniform(i);
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

}  // TEST_SUITE
