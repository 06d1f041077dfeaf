#pragma once

#include <array>
#include <complex>
#include <span>

#include "qvh/black_hole.hpp"
#include "qvh/geometry.hpp"

namespace qvh {

using Velocity3 = std::array<Quantity, 3>;
using Momentum3 = std::array<Quantity, 3>;

/// (1 - |u|^2/c^2)^(-1/2); throws for |u| >= c.
double lorentz_gamma(const Velocity3& dxdt, const ConstantSet& consts);

/// Spacetime point plus the tangent-space velocity of the field.
struct FieldPoint {
  Coordinates x;
  Velocity3 dxdt;
  double gamma = 1.0;

  /// v^mu = gamma (1, dxdt / c)
  Vec4 four_velocity(const ConstantSet& consts) const;
};

FieldPoint make_field_point(const Coordinates& x, const Velocity3& dxdt, const ConstantSet& consts);

enum class Branch { Positive, Negative };

/// One momentum mode. The complex amplitude stands in for a(p) on the
/// positive-frequency branch and a^dagger(p) on the negative one.
struct ModeSpec {
  Quantity m;
  Momentum3 p;
  Quantity p0;  // sqrt((m c)^2 + |p|^2), momentum units
  std::complex<double> amplitude{1.0, 0.0};
  Branch branch = Branch::Positive;
};

/// Builds an on-shell mode (positive energy root).
ModeSpec make_mode(const Quantity& m, const Momentum3& p, const ConstantSet& consts,
                   std::complex<double> amplitude = {1.0, 0.0}, Branch branch = Branch::Positive);

/// Planck-scale damping exp(-rho0 |p.v| / hbar), evaluated two ways.
struct Suppression {
  double factor = 1.0;          // from the four-vector contraction
  double exponent_contraction = 0.0;  // rho0 |p_mu v^mu| / hbar
  double exponent_expansion = 0.0;  // (gamma m / 2 pi alpha m_pl)(sqrt(1 + (p/mc)^2) - p.u/(m c^2))
  double factor_expansion = 1.0;
};

Suppression suppression(const ModeSpec& mode, const FieldPoint& pt, const PlanckLimits& limits,
                        const ConstantSet& consts);

/// Value in (0, 1]; shorthand for suppression(...).factor.
double suppression_factor(const ModeSpec& mode, const FieldPoint& pt, const PlanckLimits& limits,
                          const ConstantSet& consts);

/// Single-mode integrand of the regularized scalar field at bundle point
/// (x, v):
///   2 / ((2 pi)^(3/2) (2 p0 N)^(1/2)) exp(-+ i p.x/hbar) exp(-+ rho0 p.v/hbar)
///   theta(+- rho0 p.v/hbar) * amplitude
/// with the upper signs on the positive branch. theta(0) = 1 on the positive
/// branch and 0 on the negative one. p0 enters in the consts' momentum unit.
std::complex<double> mode_amplitude(const ModeSpec& mode, const Coordinates& x, const Vec4& v, double N,
                                    const ConstantSet& consts, const PlanckLimits& limits);

/// Same, with v taken from the field point's velocity.
std::complex<double> mode_amplitude(const ModeSpec& mode, const FieldPoint& pt, double N,
                                    const ConstantSet& consts, const PlanckLimits& limits);

struct WeightedMode {
  ModeSpec mode;
  double weight = 1.0;  // quadrature weight of the momentum cell
};

/// Discretized momentum integral: sum of weight * mode_amplitude in list order.
std::complex<double> field_sample(const Coordinates& x, const Vec4& v, std::span<const WeightedMode> modes,
                                  double N, const ConstantSet& consts, const PlanckLimits& limits);

}  // namespace qvh
