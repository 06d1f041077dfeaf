#pragma once

#include "qvh/black_hole.hpp"
#include "qvh/geometry.hpp"

namespace qvh {

using Matrix8 = Eigen::Matrix<double, 8, 8>;
using Vec8 = Eigen::Matrix<double, 8, 1>;

/// Point of the spacetime tangent bundle. Its eight coordinates are
/// {x^mu, rho0 v^mu}.
struct BundlePoint {
  Coordinates x;
  Vec4 v;
  Quantity rho0;

  Vec8 coordinates() const;
};

/// A^mu_nu = rho0 v^lambda Gamma^mu_{lambda nu}; dimensionless.
struct GaugePotential {
  Eigen::Matrix4d components;  // (mu, nu)
};

/// Eight-dimensional metric
///   [ g + A^T g A   A^T g ]
///   [ g A           g     ]
/// whose quadratic form on {dx, rho0 dv} reproduces the bundle line element.
struct BundleMetric {
  Matrix8 matrix;
  Metric4 g;
  GaugePotential A;

  Eigen::Matrix4d upper_left() const { return matrix.topLeftCorner<4, 4>(); }
  Eigen::Matrix4d upper_right() const { return matrix.topRightCorner<4, 4>(); }
  Eigen::Matrix4d lower_left() const { return matrix.bottomLeftCorner<4, 4>(); }
  Eigen::Matrix4d lower_right() const { return matrix.bottomRightCorner<4, 4>(); }
};

GaugePotential gauge_potential(const MetricSpec& metric, const BundlePoint& p);

BundleMetric bundle_metric(const MetricSpec& metric, const BundlePoint& p);

struct BundleInterval {
  double direct = 0.0;  // g dx dx + rho0^2 g (dv + Gamma v dx)(dv + Gamma v dx)
  double block = 0.0;   // G_MN dX^M dX^N with dX = {dx, rho0 dv}
};

BundleInterval bundle_interval(const MetricSpec& metric, const BundlePoint& p, const Vec4& dx, const Vec4& dv);

struct BoundReport {
  Quantity a;
  double ratio = 0.0;            // a / a0
  double dsigma2_per_ds2 = 0.0;  // 1 + rho0^2 g(Dv, Dv) = 1 - a^2/a0^2
  double bundle_route = 0.0;     // bundle line element evaluated on (v, dv/ds)
  bool satisfied = false;        // dsigma2_per_ds2 >= 0
};

/// Checks the maximal-acceleration bound at s. The two forms of dsigma^2/ds^2
/// are required to agree to 1e-10 (relative to max(1, a^2/a0^2)).
BoundReport acceleration_bound_check(const MetricSpec& metric, const Worldline& w, double s,
                                     const PlanckLimits& limits, const ConstantSet& consts);

}  // namespace qvh
