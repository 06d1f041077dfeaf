#include "qvh/field.hpp"

#include <cmath>
#include <numbers>

namespace qvh {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOnShellTol = 1e-12;

double speed(const Velocity3& u) {
  for (const auto& q : u) require_dim(q, dim::velocity(), "velocity component");
  return std::hypot(u[0].value(), u[1].value(), u[2].value());
}

double momentum_norm(const Momentum3& p) {
  for (const auto& q : p) require_dim(q, dim::momentum(), "momentum component");
  return std::hypot(p[0].value(), p[1].value(), p[2].value());
}

void require_on_shell(const ModeSpec& mode, const ConstantSet& consts) {
  require_dim(mode.m, dim::mass(), "mode mass");
  require_dim(mode.p0, dim::momentum(), "p0");
  if (!(mode.m.value() > 0.0)) throw Error(ErrorCode::InvalidArgument, "mode mass must be positive");
  const double mc = (mode.m * consts.c).value();
  const double expected = std::hypot(mc, momentum_norm(mode.p));
  if (!(std::fabs(mode.p0.value() - expected) <= kOnShellTol * expected))
    throw Error(ErrorCode::InvalidArgument, "mode is off shell: p0 != sqrt((m c)^2 + |p|^2)");
}

double rho0_over_hbar(const PlanckLimits& limits, const ConstantSet& consts) {
  require_dim(limits.rho0, dim::length(), "rho0");
  return limits.rho0.value() / consts.hbar.value();
}

}  // namespace

double lorentz_gamma(const Velocity3& dxdt, const ConstantSet& consts) {
  validate(consts);
  const double u = speed(dxdt);
  const double c = consts.c.value();
  if (!(u < c)) throw Error(ErrorCode::InvalidArgument, "speed must be below c");
  // (c - u)(c + u) keeps full precision as u approaches c.
  return c / std::sqrt((c - u) * (c + u));
}

Vec4 FieldPoint::four_velocity(const ConstantSet& consts) const {
  const double c = consts.c.value();
  return gamma * Vec4(1.0, dxdt[0].value() / c, dxdt[1].value() / c, dxdt[2].value() / c);
}

FieldPoint make_field_point(const Coordinates& x, const Velocity3& dxdt, const ConstantSet& consts) {
  if (!x.allFinite()) throw Error(ErrorCode::NonFinite, "field point coordinates are not finite");
  return {x, dxdt, lorentz_gamma(dxdt, consts)};
}

ModeSpec make_mode(const Quantity& m, const Momentum3& p, const ConstantSet& consts,
                   std::complex<double> amplitude, Branch branch) {
  require_dim(m, dim::mass(), "mode mass");
  if (!(m.value() > 0.0)) throw Error(ErrorCode::InvalidArgument, "mode mass must be positive");
  validate(consts);
  const double mc = (m * consts.c).value();
  ModeSpec mode{m, p, Quantity(std::hypot(mc, momentum_norm(p)), dim::momentum()), amplitude, branch};
  return mode;
}

Suppression suppression(const ModeSpec& mode, const FieldPoint& pt, const PlanckLimits& limits,
                        const ConstantSet& consts) {
  validate(consts);
  require_on_shell(mode, consts);
  const double gamma = lorentz_gamma(pt.dxdt, consts);
  if (std::fabs(gamma - pt.gamma) > 1e-12 * gamma)
    throw Error(ErrorCode::InvalidArgument, "field point gamma is inconsistent with its velocity");

  const double c = consts.c.value();
  const double p_dot_u = mode.p[0].value() * pt.dxdt[0].value() + mode.p[1].value() * pt.dxdt[1].value() +
                         mode.p[2].value() * pt.dxdt[2].value();

  Suppression s;
  // p_mu v^mu with v = gamma (1, u/c) and signature (+,-,-,-).
  const double pv = gamma * (mode.p0.value() - p_dot_u / c);
  s.exponent_contraction = rho0_over_hbar(limits, consts) * std::fabs(pv);

  const Quantity m_pl = planck_scale(consts).m_pl;
  const double mc = (mode.m * consts.c).value();
  const double ratio = momentum_norm(mode.p) / mc;
  const double mass_ratio = (mode.m / m_pl).as_scalar();
  s.exponent_expansion = gamma * mass_ratio / (2.0 * kPi * limits.alpha) *
                         (std::sqrt(1.0 + ratio * ratio) - p_dot_u / (mc * c));

  s.factor = std::exp(-s.exponent_contraction);
  s.factor_expansion = std::exp(-s.exponent_expansion);
  return s;
}

double suppression_factor(const ModeSpec& mode, const FieldPoint& pt, const PlanckLimits& limits,
                          const ConstantSet& consts) {
  return suppression(mode, pt, limits, consts).factor;
}

std::complex<double> mode_amplitude(const ModeSpec& mode, const Coordinates& x, const Vec4& v, double N,
                                    const ConstantSet& consts, const PlanckLimits& limits) {
  if (!(std::isfinite(N) && N > 0.0)) throw Error(ErrorCode::InvalidArgument, "normalization N must be positive");
  if (!x.allFinite() || !v.allFinite()) throw Error(ErrorCode::NonFinite, "bundle point is not finite");
  validate(consts);
  require_on_shell(mode, consts);

  const double hbar = consts.hbar.value();
  const double p0 = mode.p0.value();
  const double px = p0 * x[0] - (mode.p[0].value() * x[1] + mode.p[1].value() * x[2] + mode.p[2].value() * x[3]);
  const double pv = p0 * v[0] - (mode.p[0].value() * v[1] + mode.p[1].value() * v[2] + mode.p[2].value() * v[3]);
  const double damping = rho0_over_hbar(limits, consts) * pv;

  const bool positive = mode.branch == Branch::Positive;
  const bool open = positive ? damping >= 0.0 : damping < 0.0;
  if (!open) return {0.0, 0.0};

  const double prefactor = 2.0 / (std::pow(2.0 * kPi, 1.5) * std::sqrt(2.0 * p0 * N));
  const double sign = positive ? -1.0 : 1.0;
  const std::complex<double> phase = std::polar(1.0, sign * px / hbar);
  return prefactor * std::exp(sign * damping) * phase * mode.amplitude;
}

std::complex<double> mode_amplitude(const ModeSpec& mode, const FieldPoint& pt, double N,
                                    const ConstantSet& consts, const PlanckLimits& limits) {
  return mode_amplitude(mode, pt.x, pt.four_velocity(consts), N, consts, limits);
}

std::complex<double> field_sample(const Coordinates& x, const Vec4& v, std::span<const WeightedMode> modes,
                                  double N, const ConstantSet& consts, const PlanckLimits& limits) {
  if (modes.empty()) throw Error(ErrorCode::InvalidArgument, "field sample needs at least one mode");
  std::complex<double> sum{0.0, 0.0};
  for (const auto& wm : modes) {
    if (!std::isfinite(wm.weight)) throw Error(ErrorCode::NonFinite, "mode weight is not finite");
    sum += wm.weight * mode_amplitude(wm.mode, x, v, N, consts, limits);
  }
  return sum;
}

}  // namespace qvh
