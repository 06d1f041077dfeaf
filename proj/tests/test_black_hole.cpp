#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "qvh/black_hole.hpp"
#include "support/anchors.hpp"
#include "support/reference.hpp"

namespace qvh {
namespace {

using reference::rel_diff;

const ConstantSet& si() {
  static const ConstantSet s = make_constants(UnitSystem::SI);
  return s;
}

Quantity mass(double v) { return Quantity(v, dim::mass()); }
Quantity length(double v) { return Quantity(v, dim::length()); }

const Quantity kSun = mass(anchors::kSolarMass);

TEST(BlackHole, SolarRadius) {
  const SchwarzschildBH bh = make_black_hole(kSun, si());
  EXPECT_LT(rel_diff(bh.R.value(), anchors::R_sun), 1e-14);
  EXPECT_EQ(bh.R.dim(), dim::length());
  EXPECT_EQ(bh.M, kSun);
}

TEST(BlackHole, G00) {
  const double R = anchors::R_sun;
  EXPECT_NEAR(schwarzschild_g00(kSun, length(2 * R), si()), 0.5, 1e-15);
  EXPECT_NEAR(schwarzschild_g00(kSun, length(R), si()), 0.0, 1e-15);
  EXPECT_LT(schwarzschild_g00(kSun, length(0.5 * R), si()), 0.0);
}

TEST(BlackHole, LocalAccelerationAtTwiceRadius) {
  const Quantity a = local_horizon_acceleration(kSun, length(2 * anchors::R_sun), si());
  EXPECT_LT(rel_diff(a.value(), anchors::a_local_sun_2R), 1e-13);
  EXPECT_EQ(a.dim(), dim::acceleration());
}

TEST(BlackHole, LocalAccelerationSingularInsideHorizon) {
  const SchwarzschildBH bh = make_black_hole(kSun, si());
  for (double f : {1.0, 0.5}) {
    try {
      local_horizon_acceleration(kSun, f * bh.R, si());
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::HorizonSingular);
    }
  }
}

TEST(BlackHole, LocalAccelerationDivergesTowardHorizon) {
  const double R = anchors::R_sun;
  double prev = 0.0;
  for (double f : {10.0, 2.0, 1.1, 1.001, 1.000001}) {
    const double a = local_horizon_acceleration(kSun, length(f * R), si()).value();
    EXPECT_GT(a, prev);
    prev = a;
  }
}

TEST(BlackHole, TolmanTransport) {
  const Quantity T(100.0, dim::temperature());
  EXPECT_EQ(tolman_transport(T, 1.0), T);
  EXPECT_DOUBLE_EQ(tolman_transport(T, 0.25).value(), 50.0);
  EXPECT_THROW(tolman_transport(T, 0.0), Error);
  EXPECT_THROW(tolman_transport(T, 1.5), Error);
  EXPECT_THROW(tolman_transport(Quantity(-1.0, dim::temperature()), 0.5), Error);
}

TEST(Hawking, SolarMass) {
  EXPECT_LT(rel_diff(hawking_temperature(kSun, si()).value(), anchors::T_hawking_sun), 1e-13);
  EXPECT_LT(rel_diff(hawking_temperature(kSun, si(), Mode::Heuristic).value(), anchors::T_tidal_sun), 1e-13);
  EXPECT_LT(rel_diff(tidal_temperature(kSun, si().m_e, si()).value(), anchors::T_tidal_sun), 1e-13);
}

TEST(Hawking, RejectsNonPositiveMass) {
  try {
    hawking_temperature(mass(-1.0), si());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  EXPECT_THROW(hawking_temperature(mass(0.0), si()), Error);
}

TEST(HawkingProperty, RatioAndTwoRoutes) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const Quantity M = mass(reference::log_uniform(rng, 1e-6, 1e40));
    const Quantity m = mass(reference::log_uniform(rng, 1e-35, 1e5));
    const Quantity exact = hawking_temperature(M, si());
    const Quantity heuristic = hawking_temperature(M, si(), Mode::Heuristic);
    EXPECT_LT(rel_diff(heuristic.value() / exact.value(), std::numbers::pi / 3.0), 1e-12);
    EXPECT_EQ(tidal_temperature(M, m, si()), heuristic);
  }
}

TEST(Hawking, TidalChainIntermediates) {
  const Quantity m = 1e3 * si().m_e;
  const TidalChain ch = tidal_chain(kSun, m, si());
  const double R = anchors::R_sun;
  const double hbar = si().hbar.value(), c = si().c.value(), k = si().k.value();
  // After stripping the redshift, the pair energy is hbar c / (4R).
  EXPECT_LT(rel_diff(ch.pair_energy.value(), hbar * c / (4 * R)), 1e-12);
  EXPECT_LT(rel_diff(ch.local_temperature.value(), hbar * c / (12 * k * R)), 1e-12);
  EXPECT_LT(rel_diff(ch.local_temperature.value(), ch.temperature.value()), 1e-12);
  EXPECT_LT(rel_diff(ch.work.value(), 2.0 * ch.pair_energy.value() * ch.pair_energy.value() / (m.value() * c * c)),
            1e-12);
  EXPECT_EQ(ch.work.dim(), dim::energy());
}

TEST(Hawking, UnitSystemsAgree) {
  for (UnitSystem s : {UnitSystem::Natural, UnitSystem::Planck}) {
    const ConstantSet cs = make_constants(s);
    const Quantity M = convert(kSun, UnitSystem::SI, s, si());
    const Quantity T = hawking_temperature(M, cs);
    EXPECT_LT(rel_diff(convert(T, s, UnitSystem::SI, cs).value(), anchors::T_hawking_sun), 1e-12);
  }
}

TEST(Limits, SiAnchorsAlphaOne) {
  const PlanckLimits L = planck_limits(1.0, si());
  EXPECT_LT(rel_diff(L.a0.value(), anchors::a0_alpha1), 1e-13);
  EXPECT_LT(rel_diff(L.T_S.value(), anchors::T_S_alpha1), 1e-13);
  EXPECT_LT(rel_diff(L.rho0.value(), anchors::rho0_alpha1), 1e-13);
  EXPECT_LT(rel_diff(L.m0.value(), 0.5 * anchors::m_pl), 1e-14);
  EXPECT_EQ(L.S0.dim(), dim::entropy());
}

TEST(Limits, PlanckUnitsAreClosedForm) {
  const ConstantSet pl = make_constants(UnitSystem::Planck);
  const double pi = std::numbers::pi;
  for (double alpha : {0.5, 1.0, 2.0}) {
    const PlanckLimits L = planck_limits(alpha, pl);
    EXPECT_DOUBLE_EQ(L.a0.value(), 2 * pi * alpha);
    EXPECT_DOUBLE_EQ(L.T_S.value(), alpha);
    EXPECT_DOUBLE_EQ(L.M0.value(), 1 / (8 * pi * alpha));
    EXPECT_DOUBLE_EQ(L.R0.value(), 1 / (4 * pi * alpha));
    EXPECT_DOUBLE_EQ(L.S0.value(), 1 / (16 * pi * alpha * alpha));
    EXPECT_DOUBLE_EQ(L.rho0.value(), 1 / (2 * pi * alpha));
  }
}

TEST(Limits, ConsistencyRelations) {
  for (double alpha : {0.5, 1.0, 2.0}) {
    const PlanckLimits L = planck_limits(alpha, si());
    // The Sakharov temperature is the Unruh temperature of a0.
    EXPECT_LT(rel_diff(unruh_temperature(L.a0, si()).exact.value(), L.T_S.value()), 1e-12);
    // Hawking temperature of the minimum black hole closes the loop.
    EXPECT_LT(rel_diff(hawking_temperature(L.M0, si()).value(), L.T_S.value()), 1e-12);
    EXPECT_LT(rel_diff(schwarzschild_radius(L.M0, si()).value(), L.R0.value()), 1e-12);
    EXPECT_LT(rel_diff((si().c * si().c / L.a0).value(), L.rho0.value()), 1e-12);
  }
  EXPECT_THROW(planck_limits(0.0, si()), Error);
  EXPECT_THROW(planck_limits(-1.0, si()), Error);
}

TEST(Limits, MassCheck) {
  const double m0 = 0.5 * anchors::m_pl;
  EXPECT_TRUE(black_hole_mass_check(mass(m0 * 1.001), si()));
  EXPECT_FALSE(black_hole_mass_check(mass(m0 * 0.999), si()));
  EXPECT_FALSE(black_hole_mass_check(si().m_e, si()));
  EXPECT_TRUE(black_hole_mass_check(kSun, si()));
}

TEST(BlackHole, WrongDimensionsRejected) {
  const Quantity bogus(1.0, dim::time());
  for (auto fn : std::initializer_list<std::function<void()>>{
           [&] { schwarzschild_radius(bogus, si()); },
           [&] { schwarzschild_g00(kSun, bogus, si()); },
           [&] { local_horizon_acceleration(bogus, length(1e4), si()); },
           [&] { tolman_transport(bogus, 0.5); },
           [&] { hawking_temperature(bogus, si()); },
           [&] { tidal_chain(kSun, bogus, si()); },
           [&] { black_hole_mass_check(bogus, si()); },
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
