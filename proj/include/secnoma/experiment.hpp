#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "secnoma/run_config.hpp"

namespace secnoma {

/// Empty cells mark values that do not exist (an infeasible candidate, a
/// degenerate closed form); numbers are always finite.
using Cell = std::variant<std::monostate, double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Named pass/fail outcome of a check embedded in a subcommand.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string command;
  Table table;
  std::vector<std::pair<std::string, Cell>> summary;
  std::vector<Check> checks;

  bool passed() const;
};

/// Analytical vs simulated near-user SOP over rth1, one curve per rho_r.
Report cmd_validate(const RunConfig& config);

/// Both users' SOPs over d2 at fixed transmit power.
Report cmd_distance_sweep(const RunConfig& config);

/// SOP-vs-alpha curves with the numerical and closed-form optima.
Report cmd_optimize(const RunConfig& config);

/// Min-max candidates and selection per (rth1, rth2) pair.
Report cmd_minmax(const RunConfig& config);

/// max-SOP at the fair split vs a fixed split and both single-user optima.
Report cmd_gain_comparison(const RunConfig& config);

Report run_command(Command command, const RunConfig& config);

void write_csv(const Report& report, std::ostream& out);
void write_json(const Report& report, std::ostream& out);
void write_report(const Report& report, OutputFormat format, std::ostream& out);

/// One line per check, for humans.
void write_check_summary(const Report& report, std::ostream& out);

}  // namespace secnoma
