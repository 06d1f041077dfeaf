#pragma once

#include <array>
#include <string>
#include <string_view>

#include "qvh/units.hpp"

namespace qvh {

/// SI: CODATA 2018. Natural: hbar = c = k = m_e = 1. Planck: hbar = c = k = G = 1.
/// Both non-SI systems take the elementary charge as the unit of charge.
enum class UnitSystem { SI, Natural, Planck };

UnitSystem parse_unit_system(std::string_view tag);
std::string_view to_string(UnitSystem system);

/// SI magnitudes of a system's five base units, indexed like Dimension.
using UnitBasis = std::array<double, kBaseDims>;

struct ConstantSet {
  UnitSystem system = UnitSystem::SI;
  Quantity e;     // elementary charge
  Quantity hbar;  // reduced Planck constant
  Quantity c;     // speed of light
  Quantity k;     // Boltzmann constant
  Quantity G;     // gravitational constant
  Quantity m_e;   // electron mass
  UnitBasis basis{1, 1, 1, 1, 1};
};

ConstantSet make_constants(UnitSystem system);
ConstantSet make_constants(std::string_view tag);

/// Throws unless all six constants are positive with the right dimensions.
void validate(const ConstantSet& consts);

struct PlanckScale {
  Quantity m_pl;
  Quantity l_pl;
  Quantity t_pl;
  Quantity T_pl;
};

PlanckScale planck_scale(const ConstantSet& consts);

/// Re-expresses q (given in `from`) in the base units of `to`. `consts` may be
/// in any system; it anchors the SI magnitudes of both bases.
Quantity convert(const Quantity& q, UnitSystem from, UnitSystem to, const ConstantSet& consts);

UnitBasis unit_basis(UnitSystem system, const ConstantSet& consts);

/// Human-readable unit label for a dimension in the given system, e.g. "m s^-2".
std::string unit_label(const Dimension& d, UnitSystem system);

}  // namespace qvh
