#include "secnoma/run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace secnoma {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string describe(std::string_view key, std::string_view value, std::string_view expected) {
  return "invalid value '" + std::string(value) + "' for " + std::string(key) + " (expected " +
         std::string(expected) + ")";
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(out)) {
    throw ConfigError(describe(key, text, "a finite number"));
  }
  return out;
}

std::uint64_t parse_u64(std::string_view key, std::string_view text) {
  text = trim(text);
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError(describe(key, text, "a non-negative integer"));
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ConfigError(describe(key, text, "true or false"));
}

std::vector<double> parse_list(std::string_view key, std::string_view text) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_double(key, text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

SweepAxis parse_axis(std::string_view key, std::string_view text) {
  text = trim(text);
  for (SweepAxis a : {SweepAxis::alpha, SweepAxis::rho_r_db, SweepAxis::d2, SweepAxis::rth1}) {
    if (text == axis_name(a)) return a;
  }
  throw ConfigError(describe(key, text, "alpha, rho_r_db, d2 or rth1"));
}

}  // namespace

std::string_view command_name(Command command) {
  switch (command) {
    case Command::validate: return "validate";
    case Command::distance_sweep: return "distance-sweep";
    case Command::optimize: return "optimize";
    case Command::minmax: return "minmax";
    case Command::gain_comparison: return "gain-comparison";
  }
  return "?";
}

Command parse_command(std::string_view name) {
  for (Command c : {Command::validate, Command::distance_sweep, Command::optimize, Command::minmax,
                    Command::gain_comparison}) {
    if (name == command_name(c)) return c;
  }
  throw ConfigError("unknown subcommand '" + std::string(name) + "'");
}

std::string_view axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::alpha: return "alpha";
    case SweepAxis::rho_r_db: return "rho_r_db";
    case SweepAxis::d2: return "d2";
    case SweepAxis::rth1: return "rth1";
  }
  return "?";
}

void SweepSpec::validate() const {
  if (!(step > 0.0)) throw ConfigError("sweep.step must be positive");
  if (stop < start) throw ConfigError("empty sweep range: sweep.stop < sweep.start");
}

std::vector<double> SweepSpec::values() const {
  validate();
  std::vector<double> out;
  const double slack = 1e-9 * step;
  for (std::size_t k = 0;; ++k) {
    const double v = start + static_cast<double>(k) * step;
    if (v > stop + slack) break;
    out.push_back(v);
  }
  return out;
}

ConfigError::ConfigError(const std::string& message, std::string source, std::size_t line)
    : std::runtime_error(line == 0 ? message : source + ":" + std::to_string(line) + ": " + message), line_(line) {}

SystemParams RunConfig::system_params() const {
  SystemParams p = system;
  if (transmit_dbm) {
    p.transmit_power = dbm_to_watts(*transmit_dbm);
    return p;
  }
  return p.with_received_snr_db(rho_r_db);
}

void RunConfig::validate(Command command) const {
  try {
    system_params().validate();
    (void)targets();
    sim.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  sweep.validate();
  const SweepAxis expected = default_run_config(command).sweep.axis;
  if (sweep.axis != expected) {
    throw ConfigError("subcommand " + std::string(command_name(command)) + " sweeps " +
                      std::string(axis_name(expected)) + ", not " + std::string(axis_name(sweep.axis)));
  }
  if (!(gss_tolerance > 0.0)) throw ConfigError("gss.tolerance must be positive");
  if (!(alpha >= kAlphaMin && alpha <= kAlphaMax)) throw ConfigError("alpha must lie in [1e-6, 1-1e-6]");
  if (!(fixed_alpha > 0.0 && fixed_alpha < 1.0)) throw ConfigError("baseline.fixed_alpha must lie in (0, 1)");
  if (!(analytical_lambda1_scale > 0.0)) throw ConfigError("fault.analytical_lambda1_scale must be positive");
  const auto values = sweep.values();
  switch (command) {
    case Command::validate:
    case Command::minmax:
      for (double v : values) {
        if (v < 0.0) throw ConfigError("target rates in the sweep must be non-negative");
      }
      if (command == Command::validate && rho_r_list.empty()) throw ConfigError("sweep.rho_r_db list is empty");
      if (command == Command::minmax && rth2_list.empty()) throw ConfigError("sweep.rth2 list is empty");
      for (double v : rth2_list) {
        if (v < 0.0) throw ConfigError("sweep.rth2 values must be non-negative");
      }
      break;
    case Command::distance_sweep:
      for (double v : values) {
        if (!(v > system.d1)) throw ConfigError("distance sweep must keep d2 > d1");
      }
      break;
    case Command::optimize:
      for (double v : values) {
        if (!(v >= kAlphaMin && v <= kAlphaMax)) throw ConfigError("alpha sweep must stay within [1e-6, 1-1e-6]");
      }
      break;
    case Command::gain_comparison:
      break;
  }
}

RunConfig default_run_config(Command command) {
  RunConfig c;
  switch (command) {
    case Command::validate:
      c.sweep = {SweepAxis::rth1, 0.5, 3.0, 0.25};
      break;
    case Command::distance_sweep:
      c.sweep = {SweepAxis::d2, 60.0, 200.0, 10.0};
      break;
    case Command::optimize:
      c.sweep = {SweepAxis::alpha, 0.01, 0.99, 0.01};
      break;
    case Command::minmax:
      c.sweep = {SweepAxis::rth1, 0.5, 3.0, 0.25};
      break;
    case Command::gain_comparison:
      c.sweep = {SweepAxis::rho_r_db, 10.0, 40.0, 5.0};
      break;
  }
  return c;
}

void apply_setting(RunConfig& c, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "system.d1") c.system.d1 = parse_double(key, value);
  else if (key == "system.d2") c.system.d2 = parse_double(key, value);
  else if (key == "system.path_loss_exponent") c.system.path_loss_exponent = parse_double(key, value);
  else if (key == "system.path_loss_constant") c.system.path_loss_constant = parse_double(key, value);
  else if (key == "system.noise_dbm") c.system.noise_power = dbm_to_watts(parse_double(key, value));
  else if (key == "system.transmit_dbm") c.transmit_dbm = parse_double(key, value);
  else if (key == "system.rho_r_db") {
    c.rho_r_db = parse_double(key, value);
    c.transmit_dbm.reset();
  }
  else if (key == "targets.rth1") c.rth1 = parse_double(key, value);
  else if (key == "targets.rth2") c.rth2 = parse_double(key, value);
  else if (key == "alpha") c.alpha = parse_double(key, value);
  else if (key == "sweep.axis") c.sweep.axis = parse_axis(key, value);
  else if (key == "sweep.start") c.sweep.start = parse_double(key, value);
  else if (key == "sweep.stop") c.sweep.stop = parse_double(key, value);
  else if (key == "sweep.step") c.sweep.step = parse_double(key, value);
  else if (key == "sweep.rho_r_db") c.rho_r_list = parse_list(key, value);
  else if (key == "sweep.rth2") c.rth2_list = parse_list(key, value);
  else if (key == "baseline.fixed_alpha") c.fixed_alpha = parse_double(key, value);
  else if (key == "gss.tolerance") c.gss_tolerance = parse_double(key, value);
  else if (key == "minmax.grid_points") c.grid_points = parse_u64(key, value);
  else if (key == "sim.samples") c.sim.realizations = parse_u64(key, value);
  else if (key == "sim.seed") c.sim.seed = parse_u64(key, value);
  else if (key == "sim.conditioned") c.sim.condition_on_ordering = parse_bool(key, value);
  else if (key == "sim.workers") c.sim.workers = static_cast<unsigned>(parse_u64(key, value));
  else if (key == "output.path") c.output_path = std::string(value);
  else if (key == "output.format") {
    if (value == "csv") c.format = OutputFormat::csv;
    else if (value == "json") c.format = OutputFormat::json;
    else throw ConfigError(describe(key, value, "csv or json"));
  }
  else if (key == "fault.analytical_lambda1_scale") c.analytical_lambda1_scale = parse_double(key, value);
  else throw ConfigError("unknown key '" + std::string(key) + "'");
}

void apply_config(RunConfig& config, std::istream& in, const std::string& source_name) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view text = line;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected 'key = value'", source_name, number);
    }
    const std::string_view key = trim(text.substr(0, eq));
    if (key.empty()) throw ConfigError("missing key before '='", source_name, number);
    try {
      apply_setting(config, key, text.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(e.what(), source_name, number);
    }
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  apply_config(config, in, path);
}

}  // namespace secnoma
