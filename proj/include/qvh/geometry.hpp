#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "qvh/constants.hpp"

namespace qvh {

// Coordinates are (x0 = ct, x1, x2, x3), all carrying length. The metric is
// dimensionless with signature (+,-,-,-), so the interval s is a length and
// the four-velocity dx/ds is dimensionless.
using Vec4 = Eigen::Vector4d;
using Coordinates = Eigen::Vector4d;
using Metric4 = Eigen::Matrix4d;

/// Affine connection Gamma^mu_{alpha beta}, stored as upper[mu](alpha, beta).
struct Christoffel {
  std::array<Eigen::Matrix4d, 4> upper{};

  double operator()(int mu, int alpha, int beta) const { return upper[mu](alpha, beta); }
  double& operator()(int mu, int alpha, int beta) { return upper[mu](alpha, beta); }

  /// Gamma^mu_{alpha beta} u^alpha w^beta.
  Vec4 contract(const Vec4& u, const Vec4& w) const;

  static Christoffel zero();
};

using MetricFunction = std::function<Metric4(const Coordinates&)>;
using ChristoffelFunction = std::function<Christoffel(const Coordinates&)>;

struct MetricSpec {
  std::string name;
  MetricFunction g;
  /// Optional analytic connection; finite differences are used without it.
  ChristoffelFunction christoffel_closed_form;
  /// Per-axis length scale for finite-difference steps.
  std::array<double, 4> coordinate_scale{1.0, 1.0, 1.0, 1.0};

  /// Metric at x, verified symmetric to 1e-12 and returned exactly symmetric.
  Metric4 at(const Coordinates& x) const;
};

MetricSpec minkowski_metric();

/// Schwarzschild in (ct, r, theta, phi). With closed_form = false the
/// connection is always obtained by finite differences.
MetricSpec schwarzschild_metric(const Quantity& M, const ConstantSet& consts, bool closed_form = true);

/// Metrics available by name in the CLI: "minkowski", "schwarzschild".
MetricSpec metric_by_name(const std::string& name, const std::optional<Quantity>& mass,
                          const ConstantSet& consts);

/// Connection at x: closed form when the metric supplies one, otherwise
/// central finite differences with step eps^(1/3) * max(|x_i|, scale_i).
Christoffel christoffel(const MetricSpec& metric, const Coordinates& x);

/// Always differentiates the metric numerically.
Christoffel christoffel_finite_difference(const MetricSpec& metric, const Coordinates& x);

/// ds^2 = g_{mu nu}(x) dx^mu dx^nu (positive for timelike displacements).
double interval(const MetricSpec& metric, const Coordinates& x, const Vec4& dx);

/// Timelike curve x(s) parametrized by its interval. Analytic derivatives are
/// optional; missing ones are taken by central differences of the next lower
/// derivative.
struct Worldline {
  std::string name;
  std::function<Coordinates(double)> position;
  std::function<Vec4(double)> velocity;      // dx/ds
  std::function<Vec4(double)> acceleration;  // d^2x/ds^2
  double parameter_scale = 1.0;              // step scale for numeric derivatives

  Vec4 dx_ds(double s) const;
  Vec4 d2x_ds2(double s) const;
};

/// Observer at rest at radius r in a Schwarzschild field.
Worldline static_observer(const Quantity& M, const Quantity& r, const ConstantSet& consts,
                          double theta = 1.5707963267948966, double phi = 0.0);

/// Inertial observer at rest at the origin of Minkowski space.
Worldline inertial_observer();

/// Uniformly accelerated Minkowski curve with proper acceleration a:
/// x0 = L sinh(s/L), x1 = L cosh(s/L), L = c^2/a.
Worldline hyperbolic_worldline(const Quantity& a, const ConstantSet& consts);

/// Radial free fall from rest at infinity, passing r_start at s = 0.
/// Valid for s below the horizon crossing.
Worldline radial_plunge(const Quantity& M, const Quantity& r_start, const ConstantSet& consts);

struct FourVelocity {
  Vec4 v;
  double norm = 0.0;    // g_{mu nu} v^mu v^nu
  double defect = 0.0;  // norm - 1
};

/// dx/ds at s, without renormalization.
FourVelocity four_velocity(const Worldline& w, const MetricSpec& metric, double s);

struct CovariantAcceleration {
  Vec4 position;
  Vec4 velocity;
  Vec4 components;     // Dv^mu/ds, inverse length
  double norm_defect = 0.0;
  Quantity scalar_a;   // c^2 sqrt(-g(Dv, Dv))
  /// c^2 / a; empty when a == 0 (geodesic, infinite radius).
  std::optional<Quantity> rho;

  bool rho_infinite() const { return !rho.has_value(); }
};

CovariantAcceleration covariant_acceleration(const MetricSpec& metric, const Worldline& w, double s,
                                             const ConstantSet& consts);

}  // namespace qvh
