#include "qvh/geometry.hpp"

#include <cmath>
#include <limits>

#include "qvh/black_hole.hpp"

namespace qvh {

namespace {

constexpr double kSingularDet = 1e-30;

const double kStep1 = std::cbrt(std::numeric_limits<double>::epsilon());
const double kStep2 = std::pow(std::numeric_limits<double>::epsilon(), 0.25);

// Step that is exactly representable as a difference around x.
double representable_step(double x, double h) {
  volatile double xp = x + h;
  return xp - x;
}

Metric4 inverse_checked(const Metric4& g) {
  const double det = g.determinant();
  if (!(std::fabs(det) > kSingularDet))
    throw Error(ErrorCode::SingularMetric, "metric is singular (|det g| <= 1e-30)");
  return g.inverse();
}

void require_finite_vec(const Vec4& v, const char* what) {
  if (!v.allFinite()) throw Error(ErrorCode::NonFinite, std::string(what) + " is not finite");
}

}  // namespace

Vec4 Christoffel::contract(const Vec4& u, const Vec4& w) const {
  Vec4 out;
  for (int mu = 0; mu < 4; ++mu) out[mu] = u.dot(upper[mu] * w);
  return out;
}

Christoffel Christoffel::zero() {
  Christoffel c;
  for (auto& m : c.upper) m.setZero();
  return c;
}

Metric4 MetricSpec::at(const Coordinates& x) const {
  if (!x.allFinite()) throw Error(ErrorCode::NonFinite, "coordinates are not finite");
  const Metric4 m = g(x);
  if (!m.allFinite()) throw Error(ErrorCode::NonFinite, "metric '" + name + "' is not finite at x");
  const double scale = m.cwiseAbs().maxCoeff();
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw Error(ErrorCode::InvalidArgument, "metric '" + name + "' is not symmetric");
  return 0.5 * (m + m.transpose());
}

MetricSpec minkowski_metric() {
  MetricSpec spec;
  spec.name = "minkowski";
  spec.g = [](const Coordinates&) {
    Metric4 eta = Metric4::Zero();
    eta.diagonal() << 1.0, -1.0, -1.0, -1.0;
    return eta;
  };
  spec.christoffel_closed_form = [](const Coordinates&) { return Christoffel::zero(); };
  return spec;
}

MetricSpec schwarzschild_metric(const Quantity& M, const ConstantSet& consts, bool closed_form) {
  const double rs = schwarzschild_radius(M, consts).value();
  MetricSpec spec;
  spec.name = "schwarzschild";
  spec.coordinate_scale = {rs, rs, 1.0, 1.0};
  spec.g = [rs](const Coordinates& x) {
    const double r = x[1];
    const double st = std::sin(x[2]);
    const double f = 1.0 - rs / r;
    Metric4 g = Metric4::Zero();
    g.diagonal() << f, -1.0 / f, -r * r, -r * r * st * st;
    return g;
  };
  if (closed_form) {
    spec.christoffel_closed_form = [rs](const Coordinates& x) {
      const double r = x[1];
      const double th = x[2];
      const double f = 1.0 - rs / r;
      const double half = 0.5 * rs / (r * r);
      Christoffel G = Christoffel::zero();
      G(0, 0, 1) = G(0, 1, 0) = half / f;
      G(1, 0, 0) = half * f;
      G(1, 1, 1) = -half / f;
      G(1, 2, 2) = -r * f;
      G(1, 3, 3) = -r * f * std::sin(th) * std::sin(th);
      G(2, 1, 2) = G(2, 2, 1) = 1.0 / r;
      G(2, 3, 3) = -std::sin(th) * std::cos(th);
      G(3, 1, 3) = G(3, 3, 1) = 1.0 / r;
      G(3, 2, 3) = G(3, 3, 2) = std::cos(th) / std::sin(th);
      return G;
    };
  }
  return spec;
}

MetricSpec metric_by_name(const std::string& name, const std::optional<Quantity>& mass,
                          const ConstantSet& consts) {
  if (name == "minkowski") return minkowski_metric();
  if (name == "schwarzschild") {
    if (!mass) throw Error(ErrorCode::InvalidArgument, "schwarzschild metric requires a mass");
    return schwarzschild_metric(*mass, consts);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown metric '" + name + "' (expected minkowski or schwarzschild)");
}

Christoffel christoffel_finite_difference(const MetricSpec& metric, const Coordinates& x) {
  const Metric4 g_inv = inverse_checked(metric.at(x));

  // dg[a](i, j) = d_a g_ij
  std::array<Metric4, 4> dg;
  for (int a = 0; a < 4; ++a) {
    const double h0 = kStep1 * std::max(std::fabs(x[a]), metric.coordinate_scale[a]);
    const double h = representable_step(x[a], h0);
    Coordinates xp = x, xm = x;
    xp[a] += h;
    xm[a] -= h;
    dg[a] = (metric.at(xp) - metric.at(xm)) / (2.0 * h);
  }

  Christoffel out;
  for (int mu = 0; mu < 4; ++mu) {
    for (int alpha = 0; alpha < 4; ++alpha) {
      for (int beta = alpha; beta < 4; ++beta) {
        double sum = 0.0;
        for (int nu = 0; nu < 4; ++nu)
          sum += g_inv(mu, nu) * (dg[alpha](nu, beta) + dg[beta](nu, alpha) - dg[nu](alpha, beta));
        out(mu, alpha, beta) = out(mu, beta, alpha) = 0.5 * sum;
      }
    }
  }
  return out;
}

Christoffel christoffel(const MetricSpec& metric, const Coordinates& x) {
  if (!metric.christoffel_closed_form) return christoffel_finite_difference(metric, x);
  inverse_checked(metric.at(x));
  return metric.christoffel_closed_form(x);
}

double interval(const MetricSpec& metric, const Coordinates& x, const Vec4& dx) {
  require_finite_vec(dx, "displacement");
  return dx.dot(metric.at(x) * dx);
}

// ---------------------------------------------------------------------------
// Worldlines

Vec4 Worldline::dx_ds(double s) const {
  if (velocity) return velocity(s);
  const double h = representable_step(s, kStep1 * std::max(std::fabs(s), parameter_scale));
  return (position(s + h) - position(s - h)) / (2.0 * h);
}

Vec4 Worldline::d2x_ds2(double s) const {
  if (acceleration) return acceleration(s);
  if (velocity) {
    const double h = representable_step(s, kStep1 * std::max(std::fabs(s), parameter_scale));
    return (velocity(s + h) - velocity(s - h)) / (2.0 * h);
  }
  const double h = representable_step(s, kStep2 * std::max(std::fabs(s), parameter_scale));
  return (position(s + h) - 2.0 * position(s) + position(s - h)) / (h * h);
}

Worldline static_observer(const Quantity& M, const Quantity& r, const ConstantSet& consts, double theta,
                          double phi) {
  const double g00 = schwarzschild_g00(M, r, consts);
  if (!(g00 > 0.0)) throw Error(ErrorCode::HorizonSingular, "static observer must sit outside the horizon");
  const double lapse = 1.0 / std::sqrt(g00);
  const double rv = r.value();
  Worldline w;
  w.name = "static";
  w.parameter_scale = rv;
  w.position = [=](double s) { return Coordinates(lapse * s, rv, theta, phi); };
  w.velocity = [=](double) { return Vec4(lapse, 0.0, 0.0, 0.0); };
  w.acceleration = [](double) { return Vec4::Zero().eval(); };
  return w;
}

Worldline inertial_observer() {
  Worldline w;
  w.name = "inertial";
  w.position = [](double s) { return Coordinates(s, 0.0, 0.0, 0.0); };
  w.velocity = [](double) { return Vec4(1.0, 0.0, 0.0, 0.0); };
  w.acceleration = [](double) { return Vec4::Zero().eval(); };
  return w;
}

Worldline hyperbolic_worldline(const Quantity& a, const ConstantSet& consts) {
  require_dim(a, dim::acceleration(), "acceleration");
  if (!(a.value() > 0.0)) throw Error(ErrorCode::InvalidArgument, "acceleration must be positive");
  validate(consts);
  const double L = (consts.c * consts.c / a).value();
  Worldline w;
  w.name = "hyperbolic";
  w.parameter_scale = L;
  w.position = [L](double s) { return Coordinates(L * std::sinh(s / L), L * std::cosh(s / L), 0.0, 0.0); };
  w.velocity = [L](double s) { return Vec4(std::cosh(s / L), std::sinh(s / L), 0.0, 0.0); };
  w.acceleration = [L](double s) { return Vec4(std::sinh(s / L) / L, std::cosh(s / L) / L, 0.0, 0.0); };
  return w;
}

Worldline radial_plunge(const Quantity& M, const Quantity& r_start, const ConstantSet& consts) {
  const double rs = schwarzschild_radius(M, consts).value();
  require_dim(r_start, dim::length(), "start radius");
  const double r0 = r_start.value();
  if (!(r0 > rs)) throw Error(ErrorCode::HorizonSingular, "plunge must start outside the horizon");

  // r(s)^(3/2) = r0^(3/2) - (3/2) sqrt(rs) s
  auto radius = [=](double s) {
    const double base = std::pow(r0, 1.5) - 1.5 * std::sqrt(rs) * s;
    if (!(base > std::pow(rs, 1.5)))
      throw Error(ErrorCode::HorizonSingular, "plunge parameter lies beyond the horizon crossing");
    return std::pow(base, 2.0 / 3.0);
  };
  // Coordinate time as a function of r (up to a constant), in length units.
  auto coord_time = [rs](double r) {
    const double q = std::sqrt(r / rs);
    return rs * (-2.0 / 3.0 * q * q * q - 2.0 * q + std::log((q + 1.0) / (q - 1.0)));
  };
  const double t0 = coord_time(r0);

  Worldline w;
  w.name = "plunge";
  w.parameter_scale = rs;
  w.position = [=](double s) {
    const double r = radius(s);
    return Coordinates(coord_time(r) - t0, r, 1.5707963267948966, 0.0);
  };
  w.velocity = [=](double s) {
    const double r = radius(s);
    return Vec4(1.0 / (1.0 - rs / r), -std::sqrt(rs / r), 0.0, 0.0);
  };
  w.acceleration = [=](double s) {
    const double r = radius(s);
    const double f = 1.0 - rs / r;
    return Vec4(rs / (r * r) * std::sqrt(rs / r) / (f * f), -0.5 * rs / (r * r), 0.0, 0.0);
  };
  return w;
}

FourVelocity four_velocity(const Worldline& w, const MetricSpec& metric, double s) {
  require_finite(s, "interval parameter");
  const Coordinates x = w.position(s);
  FourVelocity out;
  out.v = w.dx_ds(s);
  require_finite_vec(out.v, "four-velocity");
  out.norm = interval(metric, x, out.v);
  out.defect = out.norm - 1.0;
  return out;
}

CovariantAcceleration covariant_acceleration(const MetricSpec& metric, const Worldline& w, double s,
                                             const ConstantSet& consts) {
  validate(consts);
  const FourVelocity fv = four_velocity(w, metric, s);
  if (!(fv.norm > 0.0))
    throw Error(ErrorCode::NotTimelike, "worldline tangent is not timelike (g(v, v) = " + std::to_string(fv.norm) + ")");

  CovariantAcceleration out;
  out.position = w.position(s);
  out.velocity = fv.v;
  out.norm_defect = fv.defect;

  const Vec4 dv = w.d2x_ds2(s);
  require_finite_vec(dv, "dv/ds");
  out.components = dv + christoffel(metric, out.position).contract(fv.v, fv.v);

  // Dv is orthogonal to v, hence spacelike; clamp round-off of the sign.
  const double q = out.components.dot(metric.at(out.position) * out.components);
  const double magnitude = std::sqrt(std::max(0.0, -q));
  const Quantity c2 = consts.c * consts.c;
  out.scalar_a = c2 * Quantity(magnitude, dim::none() - dim::length());
  if (magnitude > 0.0) out.rho = c2 / out.scalar_a;
  return out;
}

}  // namespace qvh
