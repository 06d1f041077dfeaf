#include <cmath>
#include <functional>
#include <numbers>

#include <gtest/gtest.h>

#include "qvh/black_hole.hpp"
#include "qvh/geometry.hpp"
#include "support/anchors.hpp"
#include "support/reference.hpp"

namespace qvh {
namespace {

using reference::rel_diff;

const ConstantSet& si() {
  static const ConstantSet s = make_constants(UnitSystem::SI);
  return s;
}

const Quantity kSun(anchors::kSolarMass, dim::mass());
constexpr double kRs = anchors::R_sun;

double max_abs(const Christoffel& G) {
  double m = 0.0;
  for (const auto& mat : G.upper) m = std::max(m, mat.cwiseAbs().maxCoeff());
  return m;
}

TEST(Metric, MinkowskiIsFlat) {
  const MetricSpec eta = minkowski_metric();
  const Coordinates x(1.0, 2.0, -3.0, 4.0);
  Metric4 expected = Metric4::Zero();
  expected.diagonal() << 1, -1, -1, -1;
  EXPECT_EQ(eta.at(x), expected);
  EXPECT_EQ(max_abs(christoffel(eta, x)), 0.0);
  // Finite differences of a constant metric vanish exactly.
  EXPECT_EQ(max_abs(christoffel_finite_difference(eta, x)), 0.0);
}

TEST(Metric, ByName) {
  EXPECT_EQ(metric_by_name("minkowski", std::nullopt, si()).name, "minkowski");
  EXPECT_EQ(metric_by_name("schwarzschild", kSun, si()).name, "schwarzschild");
  EXPECT_THROW(metric_by_name("schwarzschild", std::nullopt, si()), Error);
  EXPECT_THROW(metric_by_name("kerr", kSun, si()), Error);
}

TEST(Metric, AsymmetricMetricRejected) {
  MetricSpec bad;
  bad.name = "bad";
  bad.g = [](const Coordinates&) {
    Metric4 g = Metric4::Identity();
    g(0, 1) = 0.5;
    return g;
  };
  EXPECT_THROW(bad.at(Coordinates::Zero()), Error);
}

TEST(Metric, SingularMetricRejected) {
  MetricSpec deg;
  deg.name = "degenerate";
  deg.g = [](const Coordinates&) {
    Metric4 g = Metric4::Zero();
    g(0, 0) = 1.0;
    return g;
  };
  try {
    christoffel(deg, Coordinates::Zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMetric);
  }
}

TEST(Christoffel, ClosedFormMatchesReference) {
  const MetricSpec g = schwarzschild_metric(kSun, si());
  const double m = 0.5 * kRs;
  for (double f : {1.5, 3.0, 17.0}) {
    for (double th : {0.4, 1.1, 2.9}) {
      const Coordinates x(0.0, f * kRs, th, 0.3);
      const Christoffel G = christoffel(g, x);
      const auto ref = reference::schwarzschild_connection(m, x[1], th);
      for (int mu = 0; mu < 4; ++mu)
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            EXPECT_NEAR(G(mu, a, b), ref[mu][a][b], 1e-14 * std::max(1.0, std::fabs(ref[mu][a][b])) + 1e-30);
    }
  }
}

TEST(Christoffel, FiniteDifferenceMatchesReference) {
  const MetricSpec g = schwarzschild_metric(kSun, si(), false);
  const double m = 0.5 * kRs;
  for (int i = 0; i < 20; ++i) {
    const double r = kRs * (3.0 * std::pow(100.0 / 3.0, i / 19.0));
    const double th = 1.1;
    const Coordinates x(1234.5, r, th, 0.7);
    const Christoffel G = christoffel(g, x);
    const auto ref = reference::schwarzschild_connection(m, r, th);
    const double floor = 1e-6 * max_abs(G);
    for (int mu = 0; mu < 4; ++mu)
      for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b) {
          const double want = ref[mu][a][b];
          if (want == 0.0)
            EXPECT_LE(std::fabs(G(mu, a, b)), floor) << mu << a << b << " r/R = " << r / kRs;
          else
            EXPECT_LT(rel_diff(G(mu, a, b), want), 1e-6) << mu << a << b << " r/R = " << r / kRs;
          EXPECT_EQ(G(mu, a, b), G(mu, b, a));
        }
  }
}

TEST(Interval, TimelikePositive) {
  const MetricSpec eta = minkowski_metric();
  EXPECT_DOUBLE_EQ(interval(eta, Coordinates::Zero(), Vec4(2, 1, 0, 0)), 3.0);
  EXPECT_LT(interval(eta, Coordinates::Zero(), Vec4(1, 2, 0, 0)), 0.0);
}

TEST(Worldline, NumericDerivativesFallback) {
  const Worldline exact = hyperbolic_worldline(Quantity(1.0, dim::acceleration()), si());
  Worldline numeric;
  numeric.position = exact.position;
  numeric.parameter_scale = exact.parameter_scale;
  const double L = exact.parameter_scale;
  for (double s : {0.0, 0.3 * L, -1.2 * L}) {
    EXPECT_LT((numeric.dx_ds(s) - exact.dx_ds(s)).norm(), 1e-9 * exact.dx_ds(s).norm());
    EXPECT_LT((numeric.d2x_ds2(s) - exact.d2x_ds2(s)).norm(), 1e-6 * exact.d2x_ds2(s).norm());
  }
}

TEST(Acceleration, StaticObserverMatchesLocalFormula) {
  for (bool closed : {true, false}) {
    const MetricSpec g = schwarzschild_metric(kSun, si(), closed);
    for (int i = 0; i < 20; ++i) {
      const Quantity r((1.5 + 98.5 * i / 19.0) * kRs, dim::length());
      const Worldline w = static_observer(kSun, r, si());
      const CovariantAcceleration ca = covariant_acceleration(g, w, 10.0, si());
      const Quantity expected = local_horizon_acceleration(kSun, r, si());
      EXPECT_LT(rel_diff(ca.scalar_a.value(), expected.value()), closed ? 1e-12 : 1e-6);
      EXPECT_NEAR(ca.norm_defect, 0.0, 1e-14);
      ASSERT_TRUE(ca.rho.has_value());
      EXPECT_LT(rel_diff(ca.rho->value(), (si().c * si().c / expected).value()), closed ? 1e-12 : 1e-6);
      EXPECT_EQ(ca.scalar_a.dim(), dim::acceleration());
    }
  }
}

TEST(Acceleration, StaticObserverInsideHorizonRejected) {
  EXPECT_THROW(static_observer(kSun, Quantity(0.9 * kRs, dim::length()), si()), Error);
}

TEST(Acceleration, HyperbolicIsUniform) {
  const MetricSpec eta = minkowski_metric();
  for (double a : {9.81, 1e20, 1e40}) {
    const Worldline w = hyperbolic_worldline(Quantity(a, dim::acceleration()), si());
    const double L = w.parameter_scale;
    for (int i = 0; i < 50; ++i) {
      const double s = L * (-3.0 + 6.0 * i / 49.0);
      const CovariantAcceleration ca = covariant_acceleration(eta, w, s, si());
      EXPECT_LT(rel_diff(ca.scalar_a.value(), a), 1e-8) << "s/L = " << s / L;
      EXPECT_NEAR(ca.norm_defect, 0.0, 1e-12);
    }
  }
}

TEST(Acceleration, InertialObserverIsGeodesic) {
  const CovariantAcceleration ca = covariant_acceleration(minkowski_metric(), inertial_observer(), 5.0, si());
  EXPECT_EQ(ca.scalar_a.value(), 0.0);
  EXPECT_TRUE(ca.rho_infinite());
}

TEST(Acceleration, RadialPlungeIsGeodesic) {
  const double r0 = 20.0 * kRs;
  const Worldline w = radial_plunge(kSun, Quantity(r0, dim::length()), si());
  const double c2 = si().c.value() * si().c.value();
  for (bool closed : {true, false}) {
    const MetricSpec g = schwarzschild_metric(kSun, si(), closed);
    for (double s : {0.0, 10.0 * kRs, 40.0 * kRs}) {
      const CovariantAcceleration ca = covariant_acceleration(g, w, s, si());
      EXPECT_LT(ca.scalar_a.value(), 1e-8 * c2 / kRs) << "s = " << s;
      EXPECT_NEAR(ca.norm_defect, 0.0, 1e-12);
    }
  }
}

TEST(Acceleration, RadialPlungeAgreesWithRk4Geodesic) {
  const double r0 = 10.0 * kRs;
  const Worldline w = radial_plunge(kSun, Quantity(r0, dim::length()), si());
  const Vec4 u0 = w.dx_ds(0.0);
  const Coordinates x0 = w.position(0.0);
  reference::State y{x0[0], x0[1], x0[2], x0[3], u0[0], u0[1], u0[2], u0[3]};
  // plunge from 10 R to 4 R
  const double s_end = (std::pow(r0, 1.5) - std::pow(4.0 * kRs, 1.5)) / (1.5 * std::sqrt(kRs));
  const reference::State out = reference::integrate_geodesic(0.5 * kRs, y, s_end, 4000);
  const Coordinates x = w.position(s_end);
  const Vec4 u = w.dx_ds(s_end);
  EXPECT_LT(rel_diff(out[1], x[1]), 1e-9);
  EXPECT_LT(rel_diff(out[0], x[0]), 1e-9);
  EXPECT_LT(rel_diff(out[4], u[0]), 1e-9);
  EXPECT_LT(rel_diff(out[5], u[1]), 1e-9);
  EXPECT_NEAR(x[1], 4.0 * kRs, 1e-6 * kRs);
}

TEST(Acceleration, RadialPlungeStopsAtHorizon) {
  const Worldline w = radial_plunge(kSun, Quantity(5.0 * kRs, dim::length()), si());
  EXPECT_THROW(w.position(1e3 * kRs), Error);
}

TEST(Acceleration, SpacelikeCurveRejected) {
  Worldline w;
  w.position = [](double s) { return Coordinates(0.0, s, 0.0, 0.0); };
  try {
    covariant_acceleration(minkowski_metric(), w, 0.0, si());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotTimelike);
  }
}

TEST(FourVelocityCheck, ReportsDefect) {
  Worldline w;
  w.position = [](double s) { return Coordinates(2.0 * s, 0.0, 0.0, 0.0); };
  const FourVelocity fv = four_velocity(w, minkowski_metric(), 1.0);
  EXPECT_NEAR(fv.norm, 4.0, 1e-9);
  EXPECT_NEAR(fv.defect, 3.0, 1e-9);
}

TEST(Geometry, WrongDimensionsRejected) {
  const Quantity bogus(1.0, dim::velocity());
  for (auto fn : std::initializer_list<std::function<void()>>{
           [&] { schwarzschild_metric(bogus, si()); },
           [&] { static_observer(bogus, Quantity(1e5, dim::length()), si()); },
           [&] { static_observer(kSun, bogus, si()); },
           [&] { hyperbolic_worldline(bogus, si()); },
           [&] { radial_plunge(bogus, Quantity(1e5, dim::length()), si()); },
           [&] { radial_plunge(kSun, bogus, si()); },
           [&] { metric_by_name("schwarzschild", bogus, si()); },
       }) {
    try {
      fn();
      ADD_FAILURE() << "no error";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
  }
}

}  // namespace
}  // namespace qvh
