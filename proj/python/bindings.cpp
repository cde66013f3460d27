#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "secnoma/channel_model.hpp"
#include "secnoma/error.hpp"
#include "secnoma/experiment.hpp"
#include "secnoma/monte_carlo.hpp"
#include "secnoma/noma_rates.hpp"
#include "secnoma/power_optimizer.hpp"
#include "secnoma/run_config.hpp"
#include "secnoma/sop_analysis.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace secnoma;

namespace {

py::dict sinr_dict(const SinrSet& s) {
  py::dict d;
  d["g11"] = s.g11;
  d["g12"] = s.g12;
  d["g21"] = s.g21;
  d["g22"] = s.g22;
  d["order"] = s.order == DecodingOrder::proposed ? "proposed" : "conventional";
  return d;
}

py::dict rate_dict(const RateSet& r) {
  py::dict d;
  d["r11"] = r.r11;
  d["r12"] = r.r12;
  d["r21"] = r.r21;
  d["r22"] = r.r22;
  d["rs1"] = r.rs1;
  d["rs2"] = r.rs2;
  return d;
}

std::string kind_name(SopKind k) {
  switch (k) {
    case SopKind::exact: return "exact";
    case SopKind::asymptotic: return "asymptotic";
    case SopKind::empirical: return "empirical";
  }
  return "?";
}

std::string run_cli_command(const std::string& name, const std::vector<std::pair<std::string, std::string>>& settings,
                            const std::string& format) {
  const Command command = parse_command(name);
  RunConfig config = default_run_config(command);
  for (const auto& [key, value] : settings) apply_setting(config, key, value);
  const Report report = run_command(command, config);
  std::ostringstream out;
  write_report(report, format == "json" ? OutputFormat::json : OutputFormat::csv, out);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Secrecy outage probabilities and power allocation for two-user NOMA with untrusted users";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_ArithmeticError);
  py::register_exception<OptimizationError>(m, "OptimizationError", PyExc_RuntimeError);

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init<>())
      .def_readwrite("d1", &SystemParams::d1)
      .def_readwrite("d2", &SystemParams::d2)
      .def_readwrite("path_loss_exponent", &SystemParams::path_loss_exponent)
      .def_readwrite("path_loss_constant", &SystemParams::path_loss_constant)
      .def_readwrite("noise_power", &SystemParams::noise_power)
      .def_readwrite("transmit_power", &SystemParams::transmit_power)
      .def("validate", &SystemParams::validate)
      .def("with_received_snr_db", &SystemParams::with_received_snr_db, py::arg("rho_r_db"));

  py::class_<ChannelStats>(m, "ChannelStats")
      .def(py::init([](double l1, double l2, double rho) {
             ChannelStats s{l1, l2, rho};
             s.validate();
             return s;
           }),
           py::arg("lambda1"), py::arg("lambda2"), py::arg("rho_t"))
      .def_readonly("lambda1", &ChannelStats::lambda1)
      .def_readonly("lambda2", &ChannelStats::lambda2)
      .def_readonly("rho_t", &ChannelStats::rho_t)
      .def("__repr__", [](const ChannelStats& s) {
        std::ostringstream os;
        os << "ChannelStats(lambda1=" << s.lambda1 << ", lambda2=" << s.lambda2 << ", rho_t=" << s.rho_t << ")";
        return os.str();
      });

  py::class_<TargetRates>(m, "TargetRates")
      .def(py::init<double, double>(), py::arg("rth1"), py::arg("rth2"))
      .def_static("from_pi", &TargetRates::from_pi, py::arg("pi1"), py::arg("pi2"))
      .def_property_readonly("rth1", &TargetRates::rth1)
      .def_property_readonly("rth2", &TargetRates::rth2)
      .def_property_readonly("pi1", &TargetRates::pi1)
      .def_property_readonly("pi2", &TargetRates::pi2);

  m.def("dbm_to_watts", &dbm_to_watts);
  m.def("mean_gain", &mean_gain, py::arg("distance"), py::arg("path_loss_constant"), py::arg("path_loss_exponent"));
  m.def("derive_stats", &derive_stats, py::arg("params"));
  m.def("received_snr_far_db", &received_snr_far_db, py::arg("stats"));
  m.def("stats_at_received_snr", &stats_at_received_snr, py::arg("stats"), py::arg("rho_r_db"));
  m.def(
      "sample_gains",
      [](const ChannelStats& stats, std::size_t count, std::uint64_t seed) {
        std::vector<std::pair<double, double>> out;
        for (const GainSample& g : sample_gains(stats, count, seed)) out.emplace_back(g.g1, g.g2);
        return out;
      },
      py::arg("stats"), py::arg("count"), py::arg("seed"), "List of (g1, g2) exponential gain draws.");

  m.def(
      "sinr_proposed",
      [](double g1, double g2, double alpha, double rho_t) { return sinr_dict(sinr_proposed({g1, g2}, PowerSplit(alpha), rho_t)); },
      py::arg("g1"), py::arg("g2"), py::arg("alpha"), py::arg("rho_t"));
  m.def(
      "sinr_conventional",
      [](double g1, double g2, double alpha, double rho_t) {
        return sinr_dict(sinr_conventional({g1, g2}, PowerSplit(alpha), rho_t));
      },
      py::arg("g1"), py::arg("g2"), py::arg("alpha"), py::arg("rho_t"));
  m.def(
      "rates_proposed",
      [](double g1, double g2, double alpha, double rho_t) {
        return rate_dict(rates_from_sinrs(sinr_proposed({g1, g2}, PowerSplit(alpha), rho_t)));
      },
      py::arg("g1"), py::arg("g2"), py::arg("alpha"), py::arg("rho_t"));
  m.def(
      "positive_secrecy_window",
      [](double g1, double g2, double rho_t) {
        const SecrecyWindow w = positive_secrecy_window({g1, g2}, rho_t);
        return std::make_pair(w.lower, w.upper);
      },
      py::arg("g1"), py::arg("g2"), py::arg("rho_t"));

  m.def(
      "exact_sop_near",
      [](const ChannelStats& s, double a, const TargetRates& t) {
        const SopValue v = exact_sop_near(s, a, t);
        return std::make_pair(v.value, v.quad_error);
      },
      py::arg("stats"), py::arg("alpha"), py::arg("targets"), "Returns (s_o1, quadrature error).");
  m.def(
      "exact_sop_far",
      [](const ChannelStats& s, double a, const TargetRates& t) {
        const SopValue v = exact_sop_far(s, a, t);
        return std::make_pair(v.value, v.quad_error);
      },
      py::arg("stats"), py::arg("alpha"), py::arg("targets"), "Returns (s_o2, quadrature error).");
  m.def("asymptotic_sop_near", &asymptotic_sop_near, py::arg("stats"), py::arg("alpha"), py::arg("targets"));
  m.def("asymptotic_sop_far", &asymptotic_sop_far, py::arg("stats"), py::arg("alpha"), py::arg("targets"));

  m.def(
      "optimal_pa_near",
      [](const ChannelStats& s, const TargetRates& t, double tol) {
        const GssResult r = optimal_pa_near(s, t, sop_search_config(tol));
        return std::make_pair(r.argmin, r.value);
      },
      py::arg("stats"), py::arg("targets"), py::arg("tolerance") = 0.01);
  m.def(
      "optimal_pa_far",
      [](const ChannelStats& s, const TargetRates& t, double tol) {
        const GssResult r = optimal_pa_far(s, t, sop_search_config(tol));
        return std::make_pair(r.argmin, r.value);
      },
      py::arg("stats"), py::arg("targets"), py::arg("tolerance") = 0.01);
  m.def(
      "optimal_pa_near_asymptotic",
      [](const TargetRates& t) {
        const ClosedFormPa pa = optimal_pa_near_asymptotic(t);
        return std::make_pair(pa.alpha, pa.degenerate);
      },
      py::arg("targets"), "Returns (alpha_hat_1, degenerate).");
  m.def(
      "optimal_pa_far_asymptotic",
      [](const TargetRates& t) {
        const ClosedFormPa pa = optimal_pa_far_asymptotic(t);
        return std::make_pair(pa.alpha, pa.degenerate);
      },
      py::arg("targets"), "Returns (alpha_hat_2, degenerate).");
  m.def(
      "equal_sop_alpha", [](const ChannelStats& s, const TargetRates& t, double tol) { return equal_sop_alpha(s, t, tol); },
      py::arg("stats"), py::arg("targets"), py::arg("tol") = 1e-8);

  auto outcome_dict = [](const MinMaxOutcome& o) {
    py::dict d;
    py::list cands;
    for (const Candidate& c : o.candidates) {
      py::dict cd;
      cd["alpha"] = c.alpha ? py::cast(*c.alpha) : py::none();
      cd["feasible"] = c.feasible;
      cd["degenerate"] = c.degenerate;
      cd["so1"] = c.feasible ? py::cast(c.so1) : py::none();
      cd["so2"] = c.feasible ? py::cast(c.so2) : py::none();
      cands.append(cd);
    }
    d["candidates"] = cands;
    d["selected"] = o.selected;
    d["selected_index"] = o.selected_index;
    d["objective"] = o.objective;
    d["kind"] = kind_name(o.kind);
    return d;
  };
  m.def(
      "minmax_pa",
      [outcome_dict](const ChannelStats& s, const TargetRates& t, double tol) {
        return outcome_dict(minmax_pa(s, t, sop_search_config(tol)));
      },
      py::arg("stats"), py::arg("targets"), py::arg("tolerance") = 0.01);
  m.def(
      "minmax_pa_asymptotic",
      [outcome_dict](const ChannelStats& s, const TargetRates& t) { return outcome_dict(minmax_pa_asymptotic(s, t)); },
      py::arg("stats"), py::arg("targets"));

  m.def(
      "empirical_sop",
      [](const ChannelStats& s, double a, const TargetRates& t, std::uint64_t samples, std::uint64_t seed,
         bool conditioned, unsigned workers) {
        SimConfig sim{samples, seed, conditioned, workers};
        const EmpiricalSop e = empirical_sop(s, a, t, sim);
        py::dict d;
        d["so1"] = e.so1;
        d["so2"] = e.so2;
        d["stderr1"] = e.stderr1;
        d["stderr2"] = e.stderr2;
        d["accepted"] = e.accepted;
        return d;
      },
      py::arg("stats"), py::arg("alpha"), py::arg("targets"), py::arg("samples") = 1'000'000, py::arg("seed") = 2019,
      py::arg("conditioned") = false, py::arg("workers") = 1);

  m.def("run_command", &run_cli_command, py::arg("command"), py::arg("settings") = std::vector<std::pair<std::string, std::string>>{},
        py::arg("format") = "csv",
        "Runs an experiment subcommand with key=value settings and returns the rendered output.");

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
