#include <random>

#include <gtest/gtest.h>

#include "qvh/constants.hpp"
#include "support/anchors.hpp"
#include "support/reference.hpp"

namespace qvh {
namespace {

using reference::rel_diff;

TEST(Constants, ParseUnitSystem) {
  EXPECT_EQ(parse_unit_system("si"), UnitSystem::SI);
  EXPECT_EQ(parse_unit_system("natural"), UnitSystem::Natural);
  EXPECT_EQ(parse_unit_system("planck"), UnitSystem::Planck);
  try {
    parse_unit_system("cgs");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownUnitSystem);
  }
}

TEST(Constants, Codata2018) {
  const ConstantSet si = make_constants(UnitSystem::SI);
  EXPECT_EQ(si.c.value(), 299792458.0);
  EXPECT_EQ(si.hbar.value(), 1.054571817e-34);
  EXPECT_EQ(si.e.value(), 1.602176634e-19);
  EXPECT_EQ(si.k.value(), 1.380649e-23);
  EXPECT_EQ(si.G.value(), 6.67430e-11);
  EXPECT_EQ(si.m_e.value(), 9.1093837015e-31);
  EXPECT_EQ(si.G.dim(), dim::gravitational());
  EXPECT_NO_THROW(validate(si));
}

TEST(Constants, UnitySetsAreExact) {
  const ConstantSet nat = make_constants("natural");
  EXPECT_EQ(nat.hbar.value(), 1.0);
  EXPECT_EQ(nat.c.value(), 1.0);
  EXPECT_EQ(nat.k.value(), 1.0);
  EXPECT_EQ(nat.m_e.value(), 1.0);
  EXPECT_EQ(nat.e.value(), 1.0);
  const ConstantSet pl = make_constants("planck");
  EXPECT_EQ(pl.hbar.value(), 1.0);
  EXPECT_EQ(pl.c.value(), 1.0);
  EXPECT_EQ(pl.k.value(), 1.0);
  EXPECT_EQ(pl.G.value(), 1.0);
  // m_e / m_pl
  EXPECT_LT(rel_diff(pl.m_e.value(), 9.1093837015e-31 / anchors::m_pl), 1e-14);
  EXPECT_EQ(pl.m_e.dim(), dim::mass());
}

TEST(Constants, ValidateRejectsWrongDimension) {
  ConstantSet s = make_constants(UnitSystem::SI);
  s.G = Quantity(6.67430e-11, dim::length());
  try {
    validate(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
  s = make_constants(UnitSystem::SI);
  s.c = Quantity(-1.0, dim::velocity());
  EXPECT_THROW(validate(s), Error);
}

TEST(Constants, PlanckScaleSi) {
  const PlanckScale p = planck_scale(make_constants(UnitSystem::SI));
  EXPECT_LT(rel_diff(p.m_pl.value(), anchors::m_pl), 1e-14);
  EXPECT_LT(rel_diff(p.l_pl.value(), anchors::l_pl), 1e-14);
  EXPECT_LT(rel_diff(p.t_pl.value(), anchors::t_pl), 1e-14);
  EXPECT_LT(rel_diff(p.T_pl.value(), anchors::T_pl), 1e-14);
  EXPECT_EQ(p.T_pl.dim(), dim::temperature());
}

TEST(Constants, PlanckScaleIsUnityInPlanckUnits) {
  const PlanckScale p = planck_scale(make_constants(UnitSystem::Planck));
  EXPECT_EQ(p.m_pl.value(), 1.0);
  EXPECT_EQ(p.l_pl.value(), 1.0);
  EXPECT_EQ(p.t_pl.value(), 1.0);
  EXPECT_EQ(p.T_pl.value(), 1.0);
}

TEST(Constants, ConvertKnownValues) {
  const ConstantSet si = make_constants(UnitSystem::SI);
  const Quantity one_m_pl(anchors::m_pl, dim::mass());
  EXPECT_NEAR(convert(one_m_pl, UnitSystem::SI, UnitSystem::Planck, si).value(), 1.0, 1e-14);
  const Quantity c_si = si.c;
  EXPECT_NEAR(convert(c_si, UnitSystem::SI, UnitSystem::Natural, si).value(), 1.0, 1e-15);
  EXPECT_NEAR(convert(si.e, UnitSystem::SI, UnitSystem::Planck, si).value(), 1.0, 1e-15);
  // The Planck-system constants reproduce the SI value of G after conversion.
  const ConstantSet pl = make_constants(UnitSystem::Planck);
  EXPECT_LT(rel_diff(convert(pl.G, UnitSystem::Planck, UnitSystem::SI, pl).value(), si.G.value()), 1e-14);
  EXPECT_LT(rel_diff(convert(pl.m_e, UnitSystem::Planck, UnitSystem::Natural, pl).value(), 1.0), 1e-14);
}

TEST(Constants, ConvertWithinSystemIsIdentity) {
  Quantity q(1.0, dim::length());
  EXPECT_EQ(convert(q, UnitSystem::SI, UnitSystem::SI, make_constants(UnitSystem::SI)), q);
}

TEST(ConstantsProperty, RoundTripAcrossSystems) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> exp(-2, 2);
  std::uniform_int_distribution<int> sys(0, 2);
  const std::array<UnitSystem, 3> systems{UnitSystem::SI, UnitSystem::Natural, UnitSystem::Planck};
  const ConstantSet anchor = make_constants(UnitSystem::Natural);
  for (int i = 0; i < 1000; ++i) {
    const Dimension d(exp(rng), exp(rng), exp(rng), exp(rng), exp(rng) / 2);
    const Quantity q(reference::log_uniform(rng, 1e-3, 1e3), d);
    const UnitSystem a = systems[sys(rng)], b = systems[sys(rng)];
    const Quantity there = convert(q, a, b, anchor);
    const Quantity back = convert(there, b, a, anchor);
    EXPECT_EQ(back.dim(), d);
    EXPECT_LT(rel_diff(back.value(), q.value()), 1e-12) << d.str();
  }
}

TEST(Constants, UnitLabels) {
  EXPECT_EQ(unit_label(dim::acceleration(), UnitSystem::SI), "m/s^2");
  EXPECT_EQ(unit_label(dim::temperature(), UnitSystem::SI), "K");
  EXPECT_EQ(unit_label(dim::gravitational(), UnitSystem::SI), "kg^-1 m^3 s^-2");
  EXPECT_EQ(unit_label(dim::temperature(), UnitSystem::Planck), "T_P");
  EXPECT_EQ(unit_label(dim::acceleration(), UnitSystem::Natural), "lbar_C tbar_C^-2");
}

}  // namespace
}  // namespace qvh
