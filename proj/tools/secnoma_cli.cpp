// Experiment driver: secnoma <subcommand> [--config PATH] [--out PATH] ...
//
// Exit codes: 0 all embedded checks passed, 1 a check failed,
// 2 configuration or usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "secnoma/error.hpp"
#include "secnoma/experiment.hpp"
#include "secnoma/run_config.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;

struct Overrides {
  std::string config_path;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::optional<unsigned> workers;
  bool conditioned = false;
  std::vector<std::string> settings;
};

secnoma::RunConfig resolve(secnoma::Command command, const Overrides& o) {
  secnoma::RunConfig config = secnoma::default_run_config(command);
  if (!o.config_path.empty()) secnoma::apply_config_file(config, o.config_path);
  for (const std::string& kv : o.settings) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw secnoma::ConfigError("--set expects key=value, got '" + kv + "'");
    secnoma::apply_setting(config, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (o.out) config.output_path = *o.out;
  if (o.format) secnoma::apply_setting(config, "output.format", *o.format);
  if (o.seed) config.sim.seed = *o.seed;
  if (o.samples) config.sim.realizations = *o.samples;
  if (o.workers) config.sim.workers = *o.workers;
  if (o.conditioned) config.sim.condition_on_ordering = true;
  config.validate(command);
  return config;
}

int run(secnoma::Command command, const Overrides& o) {
  secnoma::RunConfig config;
  try {
    config = resolve(command, o);
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  }

  secnoma::Report report;
  try {
    report = secnoma::run_command(command, config);
  } catch (const secnoma::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const secnoma::InvalidArgument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  }

  if (config.output_path == "-") {
    secnoma::write_report(report, config.format, std::cout);
  } else {
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write '" << config.output_path << "'\n";
      return kExitConfigError;
    }
    secnoma::write_report(report, config.format, file);
  }
  secnoma::write_check_summary(report, std::cerr);
  return report.passed() ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secrecy outage analysis and fair power allocation for two-user NOMA with untrusted users"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Overrides overrides;
  std::optional<secnoma::Command> chosen;

  const std::pair<secnoma::Command, const char*> commands[] = {
      {secnoma::Command::validate, "analytical vs simulated near-user SOP over rth1"},
      {secnoma::Command::distance_sweep, "SOPs of both users over the far user's distance"},
      {secnoma::Command::optimize, "SOP-vs-alpha curves with numerical and closed-form optima"},
      {secnoma::Command::minmax, "min-max fair power allocation over target-rate pairs"},
      {secnoma::Command::gain_comparison, "max-SOP of the fair split against fixed and single-user splits"},
  };
  for (const auto& [command, description] : commands) {
    const std::string name(secnoma::command_name(command));
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--config", overrides.config_path, "key = value run configuration");
    sub->add_option("--out", overrides.out, "output file ('-' for stdout)");
    sub->add_option("--format", overrides.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", overrides.seed, "Monte Carlo seed");
    sub->add_option("--samples", overrides.samples, "Monte Carlo realizations per point");
    sub->add_option("--workers", overrides.workers, "Monte Carlo worker threads");
    sub->add_flag("--conditioned", overrides.conditioned, "keep only realizations with |h1|^2 > |h2|^2");
    sub->add_option("--set", overrides.settings, "extra key=value setting (repeatable)");
    sub->callback([&chosen, command = command] { chosen = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }
  return run(*chosen, overrides);
}
