#include "qvh/black_hole.hpp"

#include <cmath>
#include <numbers>

namespace qvh {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_mass(const Quantity& m, const char* what) {
  require_dim(m, dim::mass(), what);
  if (!(m.value() > 0.0)) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive");
}

// Horizon acceleration with its 1/sqrt(g00) divergence removed: GM/R^2.
Quantity redshifted_horizon_acceleration(const Quantity& M, const ConstantSet& c) {
  const Quantity R = 2.0 * c.G * M / (c.c * c.c);
  return c.G * M / (R * R);
}

Quantity temperature_at_infinity(const Quantity& M, const ConstantSet& c, Mode mode) {
  // Unruh temperature of the horizon acceleration, then Tolman-transported;
  // the two sqrt(g00) factors cancel in the product.
  const Quantity kappa = redshifted_horizon_acceleration(M, c);
  const double coeff = mode == Mode::Exact ? 2.0 * kPi : 6.0;
  return c.hbar * kappa / (coeff * c.k * c.c);
}

Quantity half_planck_mass(const ConstantSet& c) { return 0.5 * sqrt(c.hbar * c.c / c.G); }

}  // namespace

Quantity schwarzschild_radius(const Quantity& M, const ConstantSet& consts) {
  require_positive_mass(M, "mass");
  validate(consts);
  return 2.0 * consts.G * M / (consts.c * consts.c);
}

SchwarzschildBH make_black_hole(const Quantity& M, const ConstantSet& consts) {
  return {M, schwarzschild_radius(M, consts)};
}

double schwarzschild_g00(const Quantity& M, const Quantity& r, const ConstantSet& consts) {
  require_dim(r, dim::length(), "radius");
  if (!(r.value() > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  const Quantity R = schwarzschild_radius(M, consts);
  return 1.0 - (R / r).as_scalar();
}

Quantity local_horizon_acceleration(const Quantity& M, const Quantity& r, const ConstantSet& consts) {
  const double g00 = schwarzschild_g00(M, r, consts);
  if (!(g00 > 0.0))
    throw Error(ErrorCode::HorizonSingular,
                "radius must lie outside the event horizon (g00 = " + std::to_string(g00) + ")");
  return consts.G * M / (r * r) / std::sqrt(g00);
}

Quantity tolman_transport(const Quantity& T_local, double g00) {
  require_dim(T_local, dim::temperature(), "temperature");
  if (T_local.value() < 0.0) throw Error(ErrorCode::InvalidArgument, "temperature must be nonnegative");
  if (!(g00 > 0.0 && g00 <= 1.0)) throw Error(ErrorCode::InvalidArgument, "g00 must lie in (0, 1]");
  return std::sqrt(g00) * T_local;
}

Quantity hawking_temperature(const Quantity& M, const ConstantSet& consts, Mode mode) {
  require_positive_mass(M, "mass");
  validate(consts);
  return temperature_at_infinity(M, consts, mode);
}

TidalChain tidal_chain(const Quantity& M, const Quantity& m_probe, const ConstantSet& consts) {
  require_positive_mass(M, "mass");
  require_positive_mass(m_probe, "probe mass");
  validate(consts);
  const Quantity& c = consts.c;
  const Quantity R = schwarzschild_radius(M, consts);
  const Quantity compton = consts.hbar / (2.0 * m_probe * c);

  TidalChain ch;
  // Tidal force gradient GMm/r^3 acting across the pair separation, times
  // the separation; g_rr = 1/g00 turns the sqrt(g_rr) factors into 1/g00.
  ch.work = (consts.G * M * m_probe / (R * R * R)) * compton * compton;
  // work scales as 1/m, so work * m is probe independent; work(m) = 2 m c^2.
  const Quantity m_pair = sqrt(ch.work * m_probe / (2.0 * c * c));
  ch.pair_energy = m_pair * c * c;
  ch.local_temperature = ch.pair_energy / (3.0 * consts.k);
  ch.temperature = temperature_at_infinity(M, consts, Mode::Heuristic);
  return ch;
}

Quantity tidal_temperature(const Quantity& M, const Quantity& m_probe, const ConstantSet& consts) {
  return tidal_chain(M, m_probe, consts).temperature;
}

PlanckLimits planck_limits(double alpha, const ConstantSet& consts) {
  if (!(std::isfinite(alpha) && alpha > 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  validate(consts);
  const Quantity& hbar = consts.hbar;
  const Quantity& c = consts.c;
  const Quantity& G = consts.G;
  const Quantity planck_mass = sqrt(hbar * c / G);
  const Quantity planck_length = sqrt(hbar * G / pow(c, 3));

  PlanckLimits L;
  L.alpha = alpha;
  L.m0 = half_planck_mass(consts);
  L.a0 = 2.0 * kPi * alpha * sqrt(pow(c, 7) / (hbar * G));
  L.T_S = (alpha / consts.k) * sqrt(hbar * pow(c, 5) / G);
  L.M0 = planck_mass / (8.0 * kPi * alpha);
  L.R0 = planck_length / (4.0 * kPi * alpha);
  L.S0 = consts.k / (16.0 * kPi * alpha * alpha);
  L.rho0 = planck_length / (2.0 * kPi * alpha);
  return L;
}

bool black_hole_mass_check(const Quantity& m, const ConstantSet& consts) {
  require_positive_mass(m, "mass");
  validate(consts);
  return m >= half_planck_mass(consts);
}

}  // namespace qvh
