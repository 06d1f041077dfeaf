// qvh: batch front end for the quantum-vacuum toolkit.
//
//   qvh <command> [options] [--format json|csv|table] [--units si|natural|planck]
//
// Results go to stdout, diagnostics to stderr. QVH_UNITS sets the default
// unit system; --config <file> reads "key = value" lines mirroring the long
// option names, and explicit flags win over the file.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qvh/cli/dispatch.hpp"

namespace {

std::optional<std::array<double, 3>> to_triple(const std::vector<double>& v, const char* flag) {
  if (v.empty()) return std::nullopt;
  if (v.size() != 3)
    throw qvh::Error(qvh::ErrorCode::InvalidArgument, std::string("--") + flag + " expects three comma-separated values");
  return std::array<double, 3>{v[0], v[1], v[2]};
}

void report_error(const qvh::Error& e, qvh::cli::OutputFormat format) {
  if (format == qvh::cli::OutputFormat::Json) {
    nlohmann::json j = {{"error", {{"code", std::string(qvh::to_string(e.code()))}, {"message", e.what()}}}};
    std::cerr << j.dump() << '\n';
  } else {
    std::cerr << "qvh: error [" << qvh::to_string(e.code()) << "]: " << e.what() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qvh: quantum vacuum, horizon temperature and maximal-acceleration toolkit"};
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "key = value file mirroring the long options");

  qvh::cli::RunConfig cfg;
  std::string units = "si";
  std::string format = "table";
  std::vector<double> momentum, velocity;
  std::optional<double> accel;

  app.add_option("--units", units, "Unit system: si, natural, planck")->envname("QVH_UNITS");
  app.add_option("--format", format, "Output format: json, csv, table");
  app.add_option("--alpha", cfg.alpha, "Order-unity coefficient of the maximal acceleration");
  app.add_option("--rel-tol", cfg.rel_tol, "Relative tolerance of series summation");
  app.add_option("--mass", cfg.mass, "Mass (particle, black hole or mode)");
  app.add_option("--field", cfg.field, "Electric field");
  app.add_option("--acceleration,--accel", accel, "Proper acceleration");
  app.add_option("--omega", cfg.omega, "Angular frequency of a massless quantum");
  app.add_option("--probe-mass", cfg.probe_mass, "Probe mass of the tidal argument");
  app.add_option("--r", cfg.r, "Areal radius");
  app.add_option("--metric", cfg.metric, "Metric: minkowski, schwarzschild");
  app.add_option("--curve", cfg.curve, "Worldline: static, plunge, hyperbolic, inertial");
  app.add_option("--s", cfg.s, "Interval parameter of the bundle evaluation");
  app.add_option("--s-min", cfg.s_min, "First interval sample");
  app.add_option("--s-max", cfg.s_max, "Last interval sample");
  app.add_option("--samples", cfg.samples, "Number of samples");
  app.add_option("--momentum", momentum, "Momentum px,py,pz")->delimiter(',');
  app.add_option("--velocity", velocity, "Field velocity vx,vy,vz")->delimiter(',');
  app.add_flag("--sweep", cfg.sweep, "Sweep |p| from 0 to |momentum|");
  app.add_option("--normalization", cfg.normalization, "Mode normalization N");

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"constants", "Fundamental constants and Planck scale"},
      {"schwinger", "Pair-creation rate in a static electric field"},
      {"unruh", "Unruh temperature, exact and heuristic"},
      {"hawking", "Hawking temperature by two routes"},
      {"limits", "Maximal acceleration and the Planck-limit family"},
      {"worldline", "Proper acceleration along a worldline"},
      {"bundle", "Tangent-bundle metric and acceleration bound"},
      {"suppress", "Planck-scale suppression of field modes"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  qvh::cli::OutputFormat out_format = qvh::cli::OutputFormat::Table;
  try {
    out_format = qvh::cli::parse_format(format);
    cfg.format = out_format;
    cfg.units = qvh::parse_unit_system(units);
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.acceleration = accel;
    cfg.momentum = to_triple(momentum, "momentum");
    cfg.velocity = to_triple(velocity, "velocity");
    const qvh::cli::ResultEnvelope env = qvh::cli::dispatch(cfg);
    std::cout << qvh::cli::render(env, out_format);
  } catch (const qvh::Error& e) {
    report_error(e, out_format);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qvh: error: " << e.what() << '\n';
    return 1;
  }
  return EXIT_SUCCESS;
}
