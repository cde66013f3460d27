#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "secnoma/channel_model.hpp"
#include "secnoma/monte_carlo.hpp"
#include "secnoma/sop_analysis.hpp"

namespace secnoma {

enum class Command { validate, distance_sweep, optimize, minmax, gain_comparison };

std::string_view command_name(Command command);
Command parse_command(std::string_view name);

enum class SweepAxis { alpha, rho_r_db, d2, rth1 };

std::string_view axis_name(SweepAxis axis);

struct SweepSpec {
  SweepAxis axis = SweepAxis::rth1;
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  /// start, start + step, ... up to stop (inclusive, with a 1e-9 step slack).
  std::vector<double> values() const;
  void validate() const;
};

enum class OutputFormat { csv, json };

/// Everything a subcommand needs. Defaults reproduce the reference setup:
/// d1 = 50 m, d2 = 100 m, n = 2.5, Lc = 1, noise -60 dBm.
struct RunConfig {
  SystemParams system;             // transmit_power is resolved by system_params()
  double rho_r_db = 30.0;          // operating point; sets P_t unless transmit_dbm is given
  std::optional<double> transmit_dbm;
  double rth1 = 1.0;
  double rth2 = 1.0;
  double alpha = 0.5;
  SweepSpec sweep;
  std::vector<double> rho_r_list{20.0, 30.0, 40.0};  // validate: one curve per value
  std::vector<double> rth2_list{0.5, 1.0, 2.0};      // minmax: one column per value
  double fixed_alpha = 0.33;       // gain-comparison baseline
  double gss_tolerance = 0.01;
  std::size_t grid_points = 1000;  // minmax: brute-force dominance grid (0 disables)
  double analytical_lambda1_scale = 1.0;  // fault injection for validate
  SimConfig sim;
  std::string output_path = "-";
  OutputFormat format = OutputFormat::csv;

  TargetRates targets() const { return {rth1, rth2}; }

  /// `system` with P_t taken from transmit_dbm, or else chosen so that the
  /// far user's mean received SNR equals rho_r_db.
  SystemParams system_params() const;
  ChannelStats stats() const { return derive_stats(system_params()); }

  /// Cross-field checks; throws ConfigError.
  void validate(Command command) const;
};

/// Configuration problem; `line` is 0 when not tied to a file line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& message, std::string source = {}, std::size_t line = 0);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Defaults for a subcommand, including its sweep axis and range.
RunConfig default_run_config(Command command);

/// Applies `key = value` lines on top of `config`. Blank lines and text after
/// '#' are ignored. Keys are dotted (system.d1, sweep.step, sim.seed, ...).
void apply_config(RunConfig& config, std::istream& in, const std::string& source_name = "<config>");

void apply_config_file(RunConfig& config, const std::string& path);

/// Applies one key; throws ConfigError on unknown keys or malformed values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

}  // namespace secnoma
