#include "qvh/bundle.hpp"

#include <algorithm>
#include <cmath>

namespace qvh {

namespace {

// Round-off allowance for the identity between the two forms of
// dsigma^2/ds^2, and for deciding that a saturated bound is still satisfied.
constexpr double kIdentityTol = 1e-10;

double rho0_value(const Quantity& rho0) {
  require_dim(rho0, dim::length(), "rho0");
  if (rho0.value() < 0.0) throw Error(ErrorCode::InvalidArgument, "rho0 must be nonnegative");
  return rho0.value();
}

}  // namespace

Vec8 BundlePoint::coordinates() const {
  Vec8 out;
  out.head<4>() = x;
  out.tail<4>() = rho0.value() * v;
  return out;
}

GaugePotential gauge_potential(const MetricSpec& metric, const BundlePoint& p) {
  const double rho0 = rho0_value(p.rho0);
  if (!p.v.allFinite()) throw Error(ErrorCode::NonFinite, "bundle velocity is not finite");
  const Christoffel gamma = christoffel(metric, p.x);
  GaugePotential A;
  for (int mu = 0; mu < 4; ++mu) A.components.row(mu) = rho0 * (p.v.transpose() * gamma.upper[mu]);
  return A;
}

BundleMetric bundle_metric(const MetricSpec& metric, const BundlePoint& p) {
  BundleMetric out;
  out.g = metric.at(p.x);
  out.A = gauge_potential(metric, p);
  const Eigen::Matrix4d& A = out.A.components;
  // Mixed blocks lower the upper index of A with g: A_{n mu} = g_{n alpha} A^alpha_mu.
  const Eigen::Matrix4d gA = out.g * A;
  out.matrix.topLeftCorner<4, 4>() = out.g + A.transpose() * gA;
  out.matrix.topRightCorner<4, 4>() = gA.transpose();
  out.matrix.bottomLeftCorner<4, 4>() = gA;
  out.matrix.bottomRightCorner<4, 4>() = out.g;
  out.matrix = (0.5 * (out.matrix + out.matrix.transpose())).eval();
  return out;
}

BundleInterval bundle_interval(const MetricSpec& metric, const BundlePoint& p, const Vec4& dx, const Vec4& dv) {
  if (!dx.allFinite() || !dv.allFinite()) throw Error(ErrorCode::NonFinite, "bundle displacement is not finite");
  const double rho0 = rho0_value(p.rho0);
  const Metric4 g = metric.at(p.x);

  BundleInterval out;
  const Vec4 connected = dv + christoffel(metric, p.x).contract(p.v, dx);
  out.direct = dx.dot(g * dx) + rho0 * rho0 * connected.dot(g * connected);

  Vec8 dX;
  dX.head<4>() = dx;
  dX.tail<4>() = rho0 * dv;
  out.block = dX.dot(bundle_metric(metric, p).matrix * dX);
  return out;
}

BoundReport acceleration_bound_check(const MetricSpec& metric, const Worldline& w, double s,
                                     const PlanckLimits& limits, const ConstantSet& consts) {
  require_dim(limits.a0, dim::acceleration(), "a0");
  const double rho0 = rho0_value(limits.rho0);
  const CovariantAcceleration acc = covariant_acceleration(metric, w, s, consts);

  BoundReport r;
  r.a = acc.scalar_a;
  r.ratio = (acc.scalar_a / limits.a0).as_scalar();

  const Metric4 g = metric.at(acc.position);
  const double q = acc.components.dot(g * acc.components);
  r.dsigma2_per_ds2 = 1.0 + rho0 * rho0 * q;
  const double via_ratio = 1.0 - r.ratio * r.ratio;
  if (std::fabs(r.dsigma2_per_ds2 - via_ratio) > kIdentityTol * std::max(1.0, r.ratio * r.ratio))
    throw Error(ErrorCode::InternalInconsistency,
                "bundle line element disagrees with 1 - a^2/a0^2 (rho0 and a0 from different unit systems?)");

  const BundlePoint p{acc.position, acc.velocity, limits.rho0};
  r.bundle_route = bundle_interval(metric, p, acc.velocity, w.d2x_ds2(s)).direct;
  r.satisfied = r.dsigma2_per_ds2 >= -kIdentityTol;
  return r;
}

}  // namespace qvh
