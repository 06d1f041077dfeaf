#include "qvh/cli/dispatch.hpp"

#include <cmath>

#include "qvh/black_hole.hpp"
#include "qvh/bundle.hpp"
#include "qvh/field.hpp"
#include "qvh/geometry.hpp"
#include "qvh/vacuum.hpp"

namespace qvh::cli {

using nlohmann::json;

OutputFormat parse_format(const std::string& tag) {
  if (tag == "json") return OutputFormat::Json;
  if (tag == "csv") return OutputFormat::Csv;
  if (tag == "table") return OutputFormat::Table;
  throw Error(ErrorCode::InvalidArgument, "unknown output format '" + tag + "' (expected json, csv or table)");
}

namespace {

class EnvelopeBuilder {
 public:
  EnvelopeBuilder(const RunConfig& cfg) : units_(cfg.units) {
    env_.command = cfg.command;
    input_text("units", std::string(to_string(cfg.units)));
  }

  void input(const std::string& name, double value, const Dimension& d) {
    env_.inputs[name] = {{"value", value}, {"unit", unit_label(d, units_)}};
  }
  void input_text(const std::string& name, const std::string& value) {
    env_.inputs[name] = {{"value", value}, {"unit", ""}};
  }
  void input_vector(const std::string& name, const std::array<double, 3>& v, const Dimension& d) {
    env_.inputs[name] = {{"value", json::array({v[0], v[1], v[2]})}, {"unit", unit_label(d, units_)}};
  }
  void input_flag(const std::string& name, bool value) { env_.inputs[name] = {{"value", value}, {"unit", ""}}; }

  void out(const std::string& name, const Quantity& q, const std::string& source) {
    env_.outputs.push_back({name, q.value(), unit_label(q.dim(), units_), q.dim().str(), source});
  }
  void out(const std::string& name, double value, const std::string& source) {
    env_.outputs.push_back({name, value, "1", "1", source});
  }

  void note(std::string text) { env_.notes.push_back(std::move(text)); }
  Table& table(std::string name) {
    env_.tables.push_back({});
    env_.tables.back().name = std::move(name);
    return env_.tables.back();
  }
  std::string unit(const Dimension& d) const { return unit_label(d, units_); }

  ResultEnvelope take() { return std::move(env_); }

 private:
  UnitSystem units_;
  ResultEnvelope env_;
};

const char* mode_tag(Mode m) { return m == Mode::Exact ? "exact" : "heuristic"; }

Quantity required(const std::optional<double>& v, const Dimension& d, const char* flag) {
  if (!v) throw Error(ErrorCode::InvalidArgument, std::string("missing required option --") + flag);
  return Quantity(*v, d);
}

ResultEnvelope run_constants(const RunConfig& cfg, const ConstantSet& k) {
  EnvelopeBuilder b(cfg);
  const char* src = cfg.units == UnitSystem::SI ? "codata-2018" : "unit-definition";
  b.out("e", k.e, src);
  b.out("hbar", k.hbar, src);
  b.out("c", k.c, src);
  b.out("k", k.k, src);
  b.out("G", k.G, src);
  b.out("m_e", k.m_e, src);
  const PlanckScale p = planck_scale(k);
  b.out("m_pl", p.m_pl, "planck-mass");
  b.out("l_pl", p.l_pl, "planck-length");
  b.out("t_pl", p.t_pl, "planck-time");
  b.out("T_pl", p.T_pl, "planck-temperature");
  return b.take();
}

ResultEnvelope run_schwinger(const RunConfig& cfg, const ConstantSet& k) {
  EnvelopeBuilder b(cfg);
  const Quantity E = required(cfg.field, dim::electric_field(), "field");
  const Quantity m = cfg.mass ? Quantity(*cfg.mass, dim::mass()) : k.m_e;
  b.input("field", E.value(), dim::electric_field());
  if (cfg.mass) b.input("mass", *cfg.mass, dim::mass());
  b.input("rel_tol", cfg.rel_tol, dim::none());

  const SchwingerResult r = schwinger(E, m, k, cfg.rel_tol);
  b.out("critical_field_exact", r.critical_field, "schwinger-critical-field-exact");
  b.out("critical_field_heuristic", critical_field(m, k, Mode::Heuristic), "uncertainty-work-balance-heuristic");
  b.out("prefactor", r.prefactor, "schwinger-prefactor");
  b.out("series_sum", r.series.value, "dilogarithm-series");
  b.out("series_terms", static_cast<double>(r.series.terms), "dilogarithm-series");
  b.out("rate", r.rate, "schwinger-rate");
  if (!cfg.mass) b.note("particle mass defaults to the electron mass");
  return b.take();
}

ResultEnvelope run_unruh(const RunConfig& cfg, const ConstantSet& k) {
  EnvelopeBuilder b(cfg);
  if (!cfg.acceleration && !cfg.mass)
    throw Error(ErrorCode::InvalidArgument, "unruh needs --acceleration or --mass");

  std::optional<Quantity> a;
  if (cfg.acceleration) {
    a = Quantity(*cfg.acceleration, dim::acceleration());
    b.input("acceleration", *cfg.acceleration, dim::acceleration());
  }
  if (cfg.mass) {
    const Quantity m(*cfg.mass, dim::mass());
    b.input("mass", *cfg.mass, dim::mass());
    const FluctuationScales fs = fluctuation_scales(m, k);
    b.out("delta_t", fs.delta_t, "uncertainty-time");
    b.out("delta_E", fs.delta_E, "uncertainty-energy");
    b.out("delta_x", fs.delta_x, "uncertainty-distance");
    const Quantity a_char = characteristic_acceleration(m, k);
    b.out("characteristic_acceleration", a_char, "characteristic-acceleration-heuristic");
    if (!a) {
      a = a_char;
      b.note("temperatures evaluated at the characteristic acceleration of the given mass");
    }
  }
  const TemperatureEstimate t = unruh_temperature(*a, k);
  b.out("T_exact", t.exact, std::string("unruh-") + mode_tag(Mode::Exact));
  b.out("T_heuristic", t.heuristic, std::string("unruh-") + mode_tag(Mode::Heuristic));
  if (cfg.omega) {
    const Quantity omega(*cfg.omega, dim::angular_frequency());
    b.input("omega", *cfg.omega, dim::angular_frequency());
    const MasslessChain ch = massless_unruh_chain(*a, omega, k);
    b.out("wavelength", ch.wavelength, "massless-dispersion");
    b.out("T_massless", ch.temperature, "unruh-massless-heuristic");
  }
  return b.take();
}

ResultEnvelope run_hawking(const RunConfig& cfg, const ConstantSet& k) {
  EnvelopeBuilder b(cfg);
  const Quantity M = required(cfg.mass, dim::mass(), "mass");
  b.input("mass", M.value(), dim::mass());
  const Quantity probe = cfg.probe_mass ? Quantity(*cfg.probe_mass, dim::mass()) : k.m_e;
  if (cfg.probe_mass) b.input("probe_mass", *cfg.probe_mass, dim::mass());

  b.out("schwarzschild_radius", schwarzschild_radius(M, k), "schwarzschild-radius");
  b.out("T_exact", hawking_temperature(M, k, Mode::Exact), "hawking-exact");
  b.out("T_heuristic", hawking_temperature(M, k, Mode::Heuristic), "hawking-equivalence-heuristic");
  const TidalChain ch = tidal_chain(M, probe, k);
  b.out("T_tidal", ch.temperature, "hawking-tidal-heuristic");
  b.out("tidal_pair_energy_redshifted", ch.pair_energy, "tidal-work-balance");
  b.out("forms_black_hole", black_hole_mass_check(M, k) ? 1.0 : 0.0, "horizon-exceeds-compton-extent");
  if (cfg.r) {
    const Quantity r(*cfg.r, dim::length());
    b.input("r", *cfg.r, dim::length());
    b.out("g00", schwarzschild_g00(M, r, k), "schwarzschild-g00");
    b.out("local_acceleration", local_horizon_acceleration(M, r, k), "static-observer-acceleration");
  }
  return b.take();
}

ResultEnvelope run_limits(const RunConfig& cfg, const ConstantSet& k) {
  EnvelopeBuilder b(cfg);
  b.input("alpha", cfg.alpha, dim::none());
  const PlanckLimits L = planck_limits(cfg.alpha, k);
  b.out("m0", L.m0, "minimum-black-hole-pair-mass");
  b.out("a0", L.a0, "maximal-proper-acceleration");
  b.out("T_S", L.T_S, "sakharov-temperature");
  b.out("M0", L.M0, "minimum-black-hole-mass");
  b.out("R0", L.R0, "minimum-horizon-radius");
  b.out("S0", L.S0, "minimum-black-hole-entropy");
  b.out("rho0", L.rho0, "minimum-worldline-curvature-radius");
  return b.take();
}

struct CurveSetup {
  MetricSpec metric;
  Worldline worldline;
};

CurveSetup build_curve(const RunConfig& cfg, const ConstantSet& k, EnvelopeBuilder& b) {
  std::string metric = cfg.metric;
  if (metric.empty()) metric = (cfg.curve == "hyperbolic" || cfg.curve == "inertial") ? "minkowski" : "schwarzschild";
  b.input_text("metric", metric);
  b.input_text("curve", cfg.curve);

  std::optional<Quantity> M;
  if (metric == "schwarzschild") {
    M = required(cfg.mass, dim::mass(), "mass");
    b.input("mass", M->value(), dim::mass());
  }
  CurveSetup setup{metric_by_name(metric, M, k), {}};

  if (cfg.curve == "static" || cfg.curve == "plunge") {
    if (!M) throw Error(ErrorCode::InvalidArgument, "curve '" + cfg.curve + "' needs --metric schwarzschild");
    const Quantity r = required(cfg.r, dim::length(), "r");
    b.input("r", r.value(), dim::length());
    setup.worldline = cfg.curve == "static" ? static_observer(*M, r, k) : radial_plunge(*M, r, k);
  } else if (cfg.curve == "hyperbolic") {
    if (metric != "minkowski") throw Error(ErrorCode::InvalidArgument, "hyperbolic curve needs --metric minkowski");
    const Quantity a = required(cfg.acceleration, dim::acceleration(), "accel");
    b.input("acceleration", a.value(), dim::acceleration());
    setup.worldline = hyperbolic_worldline(a, k);
  } else if (cfg.curve == "inertial") {
    if (metric != "minkowski") throw Error(ErrorCode::InvalidArgument, "inertial curve needs --metric minkowski");
    setup.worldline = inertial_observer();
  } else {
    throw Error(ErrorCode::InvalidArgument,
                "unknown curve '" + cfg.curve + "' (expected static, plunge, hyperbolic or inertial)");
  }
  return setup;
}

ResultEnvelope run_worldline(const RunConfig& cfg, const ConstantSet& k) {
  EnvelopeBuilder b(cfg);
  const CurveSetup setup = build_curve(cfg, k, b);
  b.input("s_min", cfg.s_min, dim::length());
  b.input("s_max", cfg.s_max, dim::length());
  b.input("samples", cfg.samples, dim::none());
  if (cfg.samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be at least 1");

  const int n = cfg.s_max > cfg.s_min ? cfg.samples : 1;
  const std::string len = b.unit(dim::length());
  Table& t = b.table("samples");
  t.columns = {"s", "x0", "x1", "x2", "x3", "v0", "v1", "v2", "v3", "norm_defect", "a", "rho"};
  t.units = {len, len, len, "1", "1", "1", "1", "1", "1", "1", b.unit(dim::acceleration()), len};
  for (int i = 0; i < n; ++i) {
    const double s = n == 1 ? cfg.s_min : cfg.s_min + (cfg.s_max - cfg.s_min) * i / (n - 1);
    const CovariantAcceleration acc = covariant_acceleration(setup.metric, setup.worldline, s, k);
    std::vector<std::optional<double>> row{s};
    for (int j = 0; j < 4; ++j) row.push_back(acc.position[j]);
    for (int j = 0; j < 4; ++j) row.push_back(acc.velocity[j]);
    row.push_back(acc.norm_defect);
    row.push_back(acc.scalar_a.value());
    row.push_back(acc.rho ? std::optional<double>(acc.rho->value()) : std::nullopt);
    t.rows.push_back(std::move(row));
  }
  b.note("x0 = c t; an empty rho means infinite curvature radius (a = 0)");
  return b.take();
}

ResultEnvelope run_bundle(const RunConfig& cfg, const ConstantSet& k) {
  EnvelopeBuilder b(cfg);
  const CurveSetup setup = build_curve(cfg, k, b);
  b.input("s", cfg.s, dim::length());
  b.input("alpha", cfg.alpha, dim::none());

  const PlanckLimits L = planck_limits(cfg.alpha, k);
  const BoundReport rep = acceleration_bound_check(setup.metric, setup.worldline, cfg.s, L, k);
  b.out("a", rep.a, "covariant-proper-acceleration");
  b.out("a0", L.a0, "maximal-proper-acceleration");
  b.out("rho0", L.rho0, "minimum-worldline-curvature-radius");
  b.out("ratio", rep.ratio, "acceleration-bound");
  b.out("dsigma2_per_ds2", rep.dsigma2_per_ds2, "bundle-line-element");
  b.out("bundle_route", rep.bundle_route, "bundle-line-element");
  b.out("satisfied", rep.satisfied ? 1.0 : 0.0, "acceleration-bound");

  const Coordinates x = setup.worldline.position(cfg.s);
  const BundlePoint p{x, setup.worldline.dx_ds(cfg.s), L.rho0};
  const BundleMetric G = bundle_metric(setup.metric, p);
  Table& gt = b.table("bundle_metric");
  for (int j = 0; j < 8; ++j) {
    gt.columns.push_back("G" + std::to_string(j));
    gt.units.push_back("1");
  }
  for (int i = 0; i < 8; ++i) {
    std::vector<std::optional<double>> row;
    for (int j = 0; j < 8; ++j) row.push_back(G.matrix(i, j));
    gt.rows.push_back(std::move(row));
  }
  Table& at = b.table("gauge_potential");
  for (int j = 0; j < 4; ++j) {
    at.columns.push_back("A" + std::to_string(j));
    at.units.push_back("1");
  }
  for (int i = 0; i < 4; ++i) {
    std::vector<std::optional<double>> row;
    for (int j = 0; j < 4; ++j) row.push_back(G.A.components(i, j));
    at.rows.push_back(std::move(row));
  }
  b.note("bundle coordinates are {x^mu, rho0 v^mu}, indices 0..7");
  return b.take();
}

Momentum3 to_momentum(const std::array<double, 3>& p) {
  return {Quantity(p[0], dim::momentum()), Quantity(p[1], dim::momentum()), Quantity(p[2], dim::momentum())};
}

ResultEnvelope run_suppress(const RunConfig& cfg, const ConstantSet& k) {
  EnvelopeBuilder b(cfg);
  const Quantity m = required(cfg.mass, dim::mass(), "mass");
  const std::array<double, 3> p = cfg.momentum.value_or(std::array<double, 3>{0, 0, 0});
  const std::array<double, 3> u = cfg.velocity.value_or(std::array<double, 3>{0, 0, 0});
  b.input("mass", m.value(), dim::mass());
  b.input_vector("momentum", p, dim::momentum());
  b.input_vector("velocity", u, dim::velocity());
  b.input("alpha", cfg.alpha, dim::none());
  b.input("N", cfg.normalization, dim::none());

  const PlanckLimits L = planck_limits(cfg.alpha, k);
  const Velocity3 vel{Quantity(u[0], dim::velocity()), Quantity(u[1], dim::velocity()), Quantity(u[2], dim::velocity())};
  const FieldPoint pt = make_field_point(Coordinates::Zero(), vel, k);

  if (cfg.sweep) {
    b.input_flag("sweep", true);
    b.input("samples", cfg.samples, dim::none());
    const double pmax = std::hypot(p[0], p[1], p[2]);
    if (!(pmax > 0.0)) throw Error(ErrorCode::InvalidArgument, "sweep needs a nonzero --momentum");
    if (cfg.samples < 2) throw Error(ErrorCode::InvalidArgument, "sweep needs at least 2 samples");
    Table& t = b.table("sweep");
    t.columns = {"p", "factor", "exponent"};
    t.units = {b.unit(dim::momentum()), "1", "1"};
    for (int i = 0; i < cfg.samples; ++i) {
      const double f = static_cast<double>(i) / (cfg.samples - 1);
      const ModeSpec mode = make_mode(m, to_momentum({p[0] * f, p[1] * f, p[2] * f}), k);
      const Suppression s = suppression(mode, pt, L, k);
      t.rows.push_back({pmax * f, s.factor, s.exponent_contraction});
    }
    return b.take();
  }

  const ModeSpec mode = make_mode(m, to_momentum(p), k);
  const Suppression s = suppression(mode, pt, L, k);
  b.out("gamma", pt.gamma, "lorentz-factor");
  b.out("p0", mode.p0, "on-shell-energy");
  b.out("exponent_contraction", s.exponent_contraction, "suppression-four-vector");
  b.out("exponent_expansion", s.exponent_expansion, "suppression-expanded");
  b.out("factor", s.factor, "suppression-four-vector");
  b.out("factor_expansion", s.factor_expansion, "suppression-expanded");
  b.out("amplitude_modulus", std::abs(mode_amplitude(mode, pt, cfg.normalization, k, L)), "regularized-mode");
  if (cfg.normalization == 1.0) b.note("normalization N = 1 (default; exact form not known)");
  return b.take();
}

}  // namespace

ResultEnvelope dispatch(const RunConfig& cfg) {
  const ConstantSet k = make_constants(cfg.units);
  if (cfg.command == "constants") return run_constants(cfg, k);
  if (cfg.command == "schwinger") return run_schwinger(cfg, k);
  if (cfg.command == "unruh") return run_unruh(cfg, k);
  if (cfg.command == "hawking") return run_hawking(cfg, k);
  if (cfg.command == "limits") return run_limits(cfg, k);
  if (cfg.command == "worldline") return run_worldline(cfg, k);
  if (cfg.command == "bundle") return run_bundle(cfg, k);
  if (cfg.command == "suppress") return run_suppress(cfg, k);
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + cfg.command + "'");
}

RunConfig config_from_envelope(const json& envelope) {
  RunConfig cfg;
  cfg.command = envelope.at("command").get<std::string>();
  const json& in = envelope.at("inputs");
  auto value = [&](const char* name) -> const json* {
    auto it = in.find(name);
    return it == in.end() ? nullptr : &it->at("value");
  };
  auto number = [&](const char* name, std::optional<double>& dst) {
    if (const json* v = value(name)) dst = v->get<double>();
  };
  auto vector = [&](const char* name, std::optional<std::array<double, 3>>& dst) {
    if (const json* v = value(name)) dst = v->get<std::array<double, 3>>();
  };

  if (const json* v = value("units")) cfg.units = parse_unit_system(v->get<std::string>());
  if (const json* v = value("alpha")) cfg.alpha = v->get<double>();
  if (const json* v = value("rel_tol")) cfg.rel_tol = v->get<double>();
  number("mass", cfg.mass);
  number("field", cfg.field);
  number("acceleration", cfg.acceleration);
  number("omega", cfg.omega);
  number("probe_mass", cfg.probe_mass);
  number("r", cfg.r);
  if (const json* v = value("metric")) cfg.metric = v->get<std::string>();
  if (const json* v = value("curve")) cfg.curve = v->get<std::string>();
  if (const json* v = value("s")) cfg.s = v->get<double>();
  if (const json* v = value("s_min")) cfg.s_min = v->get<double>();
  if (const json* v = value("s_max")) cfg.s_max = v->get<double>();
  if (const json* v = value("samples")) cfg.samples = v->get<int>();
  vector("momentum", cfg.momentum);
  vector("velocity", cfg.velocity);
  if (const json* v = value("sweep")) cfg.sweep = v->get<bool>();
  if (const json* v = value("N")) cfg.normalization = v->get<double>();
  return cfg;
}

}  // namespace qvh::cli
