#pragma once

#include "qvh/constants.hpp"
#include "qvh/vacuum.hpp"

namespace qvh {

struct SchwarzschildBH {
  Quantity M;
  Quantity R;  // 2 G M / c^2
};

SchwarzschildBH make_black_hole(const Quantity& M, const ConstantSet& consts);

Quantity schwarzschild_radius(const Quantity& M, const ConstantSet& consts);

/// Time-time metric component 1 - 2GM/(c^2 r). Positive outside the horizon.
double schwarzschild_g00(const Quantity& M, const Quantity& r, const ConstantSet& consts);

/// Proper acceleration of a static observer at radius r:
/// (GM / r^2) / sqrt(g00). Throws HorizonSingular for r <= R.
Quantity local_horizon_acceleration(const Quantity& M, const Quantity& r, const ConstantSet& consts);

/// Temperature seen at infinity for a local temperature measured where the
/// redshift factor is g00: sqrt(g00) * T_local.
Quantity tolman_transport(const Quantity& T_local, double g00);

/// Exact: hbar c^3 / (8 pi k G M). Heuristic: hbar c^3 / (24 k G M).
/// The horizon-local temperature carries a 1/sqrt(g00) factor that the
/// Tolman transport removes; the product is formed analytically, never by
/// evaluating g00 at the horizon.
Quantity hawking_temperature(const Quantity& M, const ConstantSet& consts, Mode mode = Mode::Exact);

/// Tidal-work route. Every entry is the horizon-local value with its
/// divergent g00 power stripped, i.e. multiplied by the matching power of
/// sqrt(g00).
struct TidalChain {
  Quantity work;               // g00 * tidal work on the probe pair at r = R
  Quantity pair_energy;        // sqrt(g00) * m c^2 solving work = 2 m c^2
  Quantity local_temperature;  // sqrt(g00) * T_R = pair_energy / (3 k)
  Quantity temperature;        // T at infinity after Tolman transport
};

TidalChain tidal_chain(const Quantity& M, const Quantity& m_probe, const ConstantSet& consts);

/// Temperature at infinity from the tidal route; independent of m_probe and
/// identical to hawking_temperature(M, Heuristic).
Quantity tidal_temperature(const Quantity& M, const Quantity& m_probe, const ConstantSet& consts);

/// Limit quantities set by the maximal proper acceleration. alpha is the
/// free order-unity coefficient.
struct PlanckLimits {
  double alpha = 1.0;
  Quantity m0;    // smallest mass whose horizon exceeds its Compton extent
  Quantity a0;    // maximal proper acceleration
  Quantity T_S;   // maximal (Sakharov) temperature
  Quantity M0;    // minimum black-hole mass
  Quantity R0;    // minimum horizon radius
  Quantity S0;    // minimum black-hole entropy
  Quantity rho0;  // minimum worldline curvature radius
};

PlanckLimits planck_limits(double alpha, const ConstantSet& consts);

/// True when the Schwarzschild radius of m is at least its half reduced
/// Compton wavelength, i.e. m >= m0.
bool black_hole_mass_check(const Quantity& m, const ConstantSet& consts);

}  // namespace qvh
