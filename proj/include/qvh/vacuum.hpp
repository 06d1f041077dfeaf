#pragma once

#include <cstddef>

#include "qvh/constants.hpp"

namespace qvh {

/// Selects between the closed-form coefficient and the order-of-magnitude
/// coefficient produced by the uncertainty-principle argument.
enum class Mode { Exact, Heuristic };

inline constexpr double kDefaultRelTol = 1e-12;
inline constexpr std::size_t kMaxSeriesTerms = 1'000'000;

/// Value of sum_{n>=1} exp(-n x)/n^2 = Li2(exp(-x)) together with the number
/// of series terms that were summed.
struct PolylogSum {
  double value = 0.0;
  std::size_t terms = 0;
};

/// Li2(exp(-x)) for x >= 0 (x = +inf gives 0). For exp(-x) <= 1/2 the
/// defining series is summed directly; closer to the unit circle the
/// reflection Li2(z) = pi^2/6 - ln(z) ln(1-z) - Li2(1-z) is applied so the
/// summed series always converges at least geometrically with ratio 1/2.
/// Summation stops once the next term falls below rel_tol times the partial
/// sum, or after kMaxSeriesTerms terms.
PolylogSum dilog_exp_neg(double x, double rel_tol = kDefaultRelTol);

/// Pair-creation probability per unit time and volume for an electron in a
/// static field E. Dimension T^-1 L^-3.
Quantity schwinger_rate(const Quantity& E, const ConstantSet& consts, double rel_tol = kDefaultRelTol);

/// Same, also returning the series evaluation used.
struct SchwingerResult {
  Quantity rate;
  Quantity prefactor;  // e^2 E^2 / (pi^2 hbar^2 c)
  Quantity critical_field;
  PolylogSum series;
};
SchwingerResult schwinger(const Quantity& E, const ConstantSet& consts, double rel_tol = kDefaultRelTol);

/// Pair creation of particles of charge e and mass m instead of electrons.
SchwingerResult schwinger(const Quantity& E, const Quantity& m, const ConstantSet& consts,
                          double rel_tol = kDefaultRelTol);

/// Exact: pi m^2 c^3 / (e hbar). Heuristic: 2 m^2 c^3 / (e hbar).
Quantity critical_field(const Quantity& m, const ConstantSet& consts, Mode mode = Mode::Exact);

struct FluctuationScales {
  Quantity delta_t;  // hbar / (2 m c^2)
  Quantity delta_E;  // 2 m c^2
  Quantity delta_x;  // c * delta_t
};

FluctuationScales fluctuation_scales(const Quantity& m, const ConstantSet& consts);

/// 2 m c^3 / hbar: proper acceleration at which copious pair creation of
/// mass-m particles sets in.
Quantity characteristic_acceleration(const Quantity& m, const ConstantSet& consts);

struct TemperatureEstimate {
  Quantity exact;      // hbar a / (2 pi k c)
  Quantity heuristic;  // hbar a / (6 k c)
};

TemperatureEstimate unruh_temperature(const Quantity& a, const ConstantSet& consts);

/// Intermediate values of the massless-quantum argument at frequency omega.
struct MasslessChain {
  Quantity delta_t;         // 1 / (2 omega)
  Quantity wavelength;      // 2 pi c / omega
  Quantity delta_x;         // wavelength / (4 pi)
  Quantity effective_mass;  // hbar omega / c^2
  Quantity work;            // effective_mass * a * delta_x, equated to 3 k T
  Quantity temperature;     // after substituting the dispersion relation
};

MasslessChain massless_unruh_chain(const Quantity& a, const Quantity& omega, const ConstantSet& consts);

/// hbar a / (6 k c), reached through the massless chain. omega cancels
/// algebraically, so the result is bitwise independent of it.
Quantity massless_unruh_temperature(const Quantity& a, const Quantity& omega, const ConstantSet& consts);

}  // namespace qvh
