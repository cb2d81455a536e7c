#include <cmath>

#include <gtest/gtest.h>

#include "mgsize/components.hpp"
#include "mgsize/error.hpp"
#include "mgsize/random.hpp"

using namespace mgsize;

TEST(PvOutput, StandardConditionsApplyDerating) {
  EXPECT_DOUBLE_EQ(pv_output(PvSpec{}, 100.0, 1.0, 25.0), 80.0);
}

TEST(PvOutput, NoIrradianceNoPower) { EXPECT_EQ(pv_output(PvSpec{}, 100.0, 0.0, 25.0), 0.0); }

TEST(PvOutput, TemperatureDerating) {
  EXPECT_NEAR(pv_output(PvSpec{}, 1.0, 0.5, 45.0), 0.8 * 0.5 * (1 - 0.004 * 20), 1e-12);
  EXPECT_NEAR(pv_output(PvSpec{}, 1.0, 0.5, 45.0), 0.368, 1e-12);
}

TEST(PvOutput, LinearInIrradianceAndCapacity) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const double cap = rng.uniform(0, 500);
    const double g = rng.uniform(0, 1.1);
    const double t = rng.uniform(-5, 60);
    const double base = pv_output(PvSpec{}, cap, g, t);
    EXPECT_NEAR(pv_output(PvSpec{}, 2 * cap, g, t), 2 * base, 1e-9 * (1 + base));
    EXPECT_NEAR(pv_output(PvSpec{}, cap, g / 2, t), base / 2, 1e-9 * (1 + base));
  }
}

TEST(HubWindSpeed, SameHeightIsIdentity) { EXPECT_EQ(hub_wind_speed(7.3, 10, 10), 7.3); }

TEST(HubWindSpeed, PowerLaw) {
  EXPECT_NEAR(hub_wind_speed(5, 10, 15, 0.14), 5 * std::pow(1.5, 0.14), 1e-12);
  EXPECT_NEAR(hub_wind_speed(5, 10, 15, 0.14), 5.292, 1e-3);
  EXPECT_EQ(hub_wind_speed(0, 10, 15), 0.0);
}

TEST(HubWindSpeed, RejectsNonPositiveHeights) {
  EXPECT_THROW(hub_wind_speed(5, 0, 15), NonPositiveHeight);
  EXPECT_THROW(hub_wind_speed(5, 10, -1), NonPositiveHeight);
}

TEST(WtOutput, OutsideOperatingWindow) {
  const WindSpec spec;
  EXPECT_EQ(wt_output(spec, 3.0, 3.0), 0.0);
  EXPECT_EQ(wt_output(spec, 3.0, 25.0), 0.0);
}

TEST(WtOutput, RatedRegionIsNameplate) {
  const WindSpec spec;
  for (double u : {10.0, 12.0, 17.5, 24.0}) EXPECT_EQ(wt_output(spec, 123.0, u), 123.0) << u;
}

TEST(WtOutput, MidCurveValue) {
  // Cubic ramp between cut-in 4 and rated 10: (8^3 - 4^3) / (10^3 - 4^3).
  EXPECT_NEAR(wt_output(WindSpec{}, 3.0, 8.0), 3.0 * 448.0 / 936.0, 1e-12);
  EXPECT_NEAR(wt_output(WindSpec{}, 3.0, 8.0), 1.4359, 1e-4);
}

TEST(WtOutput, AerodynamicLimitCaps) {
  WindSpec spec;
  spec.power_coefficient = 0.05;
  // 0.5 * rho * A * Cp * u^3 for one 3 kW unit, scaled to 6 kW installed.
  const double aero = 0.5 * 1.225 * 15.9 * 0.05 * 8 * 8 * 8 / 1000.0 * 2.0;
  EXPECT_NEAR(wt_output(spec, 6.0, 8.0), aero, 1e-12);
}

TEST(WtOutput, WithinNameplateAndZeroOutsideWindow) {
  const WindSpec spec;
  for (double u = 0.0; u < 30.0; u += 0.05) {
    const double p = wt_output(spec, 50.0, u);
    ASSERT_GE(p, 0.0);
    ASSERT_LE(p, 50.0);
    if (u < spec.cut_in_ms || u > spec.cut_out_ms) ASSERT_EQ(p, 0.0) << u;
  }
}

TEST(DgFuel, OffUsesNoFuel) { EXPECT_EQ(dg_fuel(DieselSpec{}, 60, 0), 0.0); }

TEST(DgFuel, LinearCurve) { EXPECT_NEAR(dg_fuel(DieselSpec{}, 60, 30), 12.3, 1e-12); }

TEST(DgFuel, MinimumLoadAndRating) {
  EXPECT_THROW(dg_fuel(DieselSpec{}, 60, 10), BelowMinLoad);
  EXPECT_NO_THROW(dg_fuel(DieselSpec{}, 60, 15));
  EXPECT_THROW(dg_fuel(DieselSpec{}, 60, 61), InvalidDesign);
}

TEST(ConverterTransfer, Cases) {
  EXPECT_EQ(converter_transfer(0, 0.95, 0), 0.0);
  EXPECT_DOUBLE_EQ(converter_transfer(100, 0.95, 0), 95.0);
  EXPECT_EQ(converter_transfer(1, 0.5, 1), 0.0);
}

TEST(BatteryReplacements, CeilingOfLifetimes) {
  EXPECT_EQ(battery_replacements(25, 10), 3);
  EXPECT_EQ(battery_replacements(20, 10), 2);
  EXPECT_EQ(battery_replacements(10, 15), 1);
  EXPECT_EQ(battery_replacements(25, 25), 1);
}
