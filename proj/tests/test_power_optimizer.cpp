#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "secnoma/error.hpp"
#include "secnoma/power_optimizer.hpp"

using namespace secnoma;

namespace {

ChannelStats reference_at(double rho_r_db) { return stats_at_received_snr(derive_stats(SystemParams{}), rho_r_db); }

}  // namespace

TEST_SUITE("power_optimizer") {

TEST_CASE("golden-section search on simple unimodal functions") {
  const GssResult q = gss_minimize([](double a) { return (a - 0.3) * (a - 0.3); }, {0.0, 1.0, 0.01});
  CHECK(std::abs(q.argmin - 0.3) <= 0.01);
  const GssResult v = gss_minimize([](double a) { return std::abs(a - 0.7); }, {0.0, 1.0, 0.001});
  CHECK(std::abs(v.argmin - 0.7) <= 0.001);
  CHECK(v.iterations <= gss_iteration_bound({0.0, 1.0, 0.001}));
  const GssResult edge = gss_minimize([](double a) { return a; }, {0.0, 1.0, 0.01});
  CHECK(edge.argmin <= 0.01);
}

TEST_CASE("iteration bound matches the golden-ratio contraction") {
  for (double tol : {0.1, 0.01, 1e-4}) {
    const GssConfig c{0.0, 1.0, tol};
    const auto expected = static_cast<std::size_t>(std::ceil(std::log(tol) / std::log(0.618))) + 1;
    CHECK(gss_iteration_bound(c) == expected);
    const GssResult r = gss_minimize([](double a) { return std::cos(3.0 * a); }, c);
    CHECK(r.iterations <= expected);
  }
}

TEST_CASE("search aborts on a non-finite objective and bad brackets") {
  CHECK_THROWS_AS(gss_minimize([](double) { return std::nan(""); }, {0.0, 1.0, 0.01}), OptimizationError);
  CHECK_THROWS_AS(gss_minimize([](double a) { return a; }, {1.0, 0.0, 0.01}), InvalidArgument);
  CHECK_THROWS_AS(gss_minimize([](double a) { return a; }, {0.0, 1.0, 0.0}), InvalidArgument);
}

TEST_CASE("closed-form optima") {
  CHECK(std::abs(optimal_pa_near_asymptotic(TargetRates::from_pi(2.0, 2.0)).alpha - (std::sqrt(2.0) - 1.0)) <= 1e-12);
  CHECK(std::abs(optimal_pa_near_asymptotic(TargetRates::from_pi(4.0, 2.0)).alpha - (-3.0 + std::sqrt(12.0))) <= 1e-12);
  CHECK(std::abs(optimal_pa_far_asymptotic(TargetRates::from_pi(2.0, 2.0)).alpha - (2.0 - std::sqrt(2.0))) <= 1e-12);
  for (double pi : {1.1, 1.5, 2.0, 4.0, 8.0}) {
    const TargetRates t = TargetRates::from_pi(pi, pi);
    const ClosedFormPa a1 = optimal_pa_near_asymptotic(t);
    const ClosedFormPa a2 = optimal_pa_far_asymptotic(t);
    CHECK_FALSE(a1.degenerate);
    CHECK(std::abs(a1.alpha + a2.alpha - 1.0) <= 1e-12);
  }
  const TargetRates zero(0.0, 0.0);
  CHECK(optimal_pa_near_asymptotic(zero).degenerate);
  CHECK(optimal_pa_far_asymptotic(zero).degenerate);
}

TEST_CASE("search on the closed-form SOPs recovers the closed-form optima") {
  for (double rho_r : {20.0, 30.0, 40.0}) {
    for (double scale : {1.0, 3.0}) {
      ChannelStats s = reference_at(rho_r);
      s.lambda1 *= scale;
      for (double pi : {1.5, 2.0, 4.0}) {
        const TargetRates t = TargetRates::from_pi(pi, pi);
        const GssResult n = gss_minimize([&](double a) { return asymptotic_sop_near(s, a, t); }, sop_search_config());
        const GssResult f = gss_minimize([&](double a) { return asymptotic_sop_far(s, a, t); }, sop_search_config());
        CHECK(std::abs(n.argmin - optimal_pa_near_asymptotic(t).alpha) <= 0.01);
        CHECK(std::abs(f.argmin - optimal_pa_far_asymptotic(t).alpha) <= 0.01);
      }
    }
  }
}

TEST_CASE("exact optima agree with a dense grid search") {
  const ChannelStats s = reference_at(30.0);
  const TargetRates t(1.0, 1.0);
  const auto grid = oracle::linspace(0.0001, 0.9999, 10000);
  const double g1 = grid[oracle::grid_argmin(grid, [&](double a) { return exact_sop_near(s, a, t).value; })];
  const double g2 = grid[oracle::grid_argmin(grid, [&](double a) { return exact_sop_far(s, a, t).value; })];
  const GssResult n = optimal_pa_near(s, t);
  const GssResult f = optimal_pa_far(s, t);
  CHECK(std::abs(n.argmin - g1) <= 0.01);
  CHECK(std::abs(f.argmin - g2) <= 0.01);
  CHECK(n.value == doctest::Approx(exact_sop_near(s, n.argmin, t).value));
}

TEST_CASE("exact optima approach the closed forms at high SNR") {
  const ChannelStats s = reference_at(40.0);
  for (double rth : {0.5, 1.0, 2.0}) {
    const TargetRates t(rth, rth);
    CHECK(std::abs(optimal_pa_near(s, t).argmin - optimal_pa_near_asymptotic(t).alpha) <= 0.02);
    CHECK(std::abs(optimal_pa_far(s, t).argmin - optimal_pa_far_asymptotic(t).alpha) <= 0.02);
  }
}

TEST_CASE("symmetric configuration mirrors the optima") {
  const ChannelStats s{1.0, 1.0, 100.0};
  const TargetRates t(1.0, 1.0);
  CHECK(std::abs(optimal_pa_near(s, t).argmin - (1.0 - optimal_pa_far(s, t).argmin)) <= 0.02);
  const auto crossing = equal_sop_alpha(s, t);
  REQUIRE(crossing.has_value());
  CHECK(std::abs(*crossing - 0.5) <= 1e-6);
  const MinMaxOutcome m = minmax_pa(s, t);
  CHECK(std::abs(m.selected - 0.5) <= 0.01);
  const MinMaxOutcome ma = minmax_pa_asymptotic(s, t);
  CHECK(ma.selected == doctest::Approx(0.5));
  CHECK(ma.candidates[ma.selected_index].role == CandidateRole::equal_sop);
}

TEST_CASE("asymptotic crossing") {
  CHECK(equal_sop_alpha_asymptotic({1.0, 1.0, 10.0}, TargetRates::from_pi(3.0, 3.0)).alpha == doctest::Approx(0.5));
  const AsymptoticCrossing c = equal_sop_alpha_asymptotic({1.0, 1.0, 10.0}, TargetRates::from_pi(2.0, 1.2));
  CHECK(c.alpha == doctest::Approx(0.1));
  CHECK(c.feasible);
  const AsymptoticCrossing d = equal_sop_alpha_asymptotic(derive_stats(SystemParams{}), TargetRates::from_pi(2.0, 2.0));
  CHECK(d.alpha == doctest::Approx(1.549).epsilon(1e-3));
  CHECK_FALSE(d.feasible);
}

TEST_CASE("exact crossings match a grid scan") {
  // s_o1 - s_o2 changes sign several times here: near both ends of the range
  // and once in the interior.
  const ChannelStats s = reference_at(30.0);
  const TargetRates t(2.0, 0.5);
  auto diff = [&](double a) { return exact_sop_near(s, a, t).value - exact_sop_far(s, a, t).value; };
  const auto grid = oracle::linspace(0.001, 0.999, 999);
  std::vector<double> scan;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if ((diff(grid[i - 1]) > 0.0) != (diff(grid[i]) > 0.0)) scan.push_back(grid[i]);
  }
  REQUIRE(scan.size() >= 2);
  for (double root : scan) {
    const auto c = equal_sop_alpha(s, t, root - 0.001, root, 1e-10);
    REQUIRE(c.has_value());
    CHECK(*c >= root - 0.001);
    CHECK(*c <= root);
  }
  const auto whole = equal_sop_alpha(s, t);
  REQUIRE(whole.has_value());
  CHECK((diff(*whole - 1e-7) > 0.0) != (diff(*whole + 1e-7) > 0.0));
  CHECK_FALSE(equal_sop_alpha(s, t, 0.1, 0.5, 1e-8).has_value());
}

TEST_CASE("min-max selection is never beaten by the grid or its own candidates") {
  const auto grid = oracle::linspace(0.001, 0.999, 1000);
  for (double rho_r : {20.0, 30.0}) {
    const ChannelStats s = reference_at(rho_r);
    for (double r1 : {0.5, 1.0, 2.0}) {
      for (double r2 : {0.5, 1.0, 2.0}) {
        const TargetRates t(r1, r2);
        const MinMaxOutcome m = minmax_pa(s, t);
        double grid_min = 1.0;
        for (double a : grid) grid_min = std::min(grid_min, max_sop_exact(s, a, t));
        CAPTURE(rho_r);
        CAPTURE(r1);
        CAPTURE(r2);
        CHECK(m.objective <= grid_min + 1e-3);
        CHECK(m.objective == doctest::Approx(max_sop_exact(s, m.selected, t)));
        for (const Candidate& c : m.candidates) {
          if (c.feasible) CHECK(m.objective <= c.max_sop());
        }
      }
    }
  }
}

TEST_CASE("asymptotic min-max agrees with the exact one at high SNR") {
  for (double rho_r : {30.0, 40.0}) {
    const ChannelStats s = reference_at(rho_r);
    const TargetRates t(1.0, 1.0);
    CHECK(std::abs(minmax_pa(s, t).selected - minmax_pa_asymptotic(s, t).selected) <= 0.02);
  }
}

TEST_CASE("zero targets exercise the degenerate candidates") {
  const ChannelStats s = reference_at(30.0);
  const TargetRates zero(0.0, 0.0);
  const MinMaxOutcome a = minmax_pa_asymptotic(s, zero);
  CHECK(a.candidates[0].degenerate);
  CHECK(a.candidates[1].degenerate);
  CHECK_FALSE(a.candidates[0].feasible);
  CHECK_FALSE(a.candidates[1].feasible);
  const MinMaxOutcome e = minmax_pa(s, zero);
  double best = 1.0;
  for (const Candidate& c : e.candidates) {
    if (c.feasible) best = std::min(best, c.max_sop());
  }
  CHECK(e.objective == best);
}

}  // TEST_SUITE
