#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mgsize/dispatch.hpp"
#include "mgsize/error.hpp"
#include "mgsize/random.hpp"

using namespace mgsize;
using mgsize::testing::bundled;
using mgsize::testing::design_a5;
using mgsize::testing::grid_only;

namespace {

constexpr double kTol = 1e-9;

void expect_flow_invariants(const PowerFlow& f, const DispatchLimits& lim, std::size_t hour) {
  ASSERT_NEAR(f.balance_residual(), 0.0, 1e-8 * (1.0 + f.load_kw + f.pv_kw + f.wt_kw)) << hour;
  ASSERT_NEAR(f.served_kw + f.unmet_kw, f.load_kw, 1e-8 * (1.0 + f.load_kw)) << hour;
  ASSERT_FALSE(f.batt_charge_kw > 0.0 && f.batt_discharge_kw > 0.0) << hour;
  ASSERT_LE(f.grid_import_kw, lim.import_cap_kw + kTol) << hour;
  ASSERT_LE(f.grid_export_kw, lim.export_cap_kw + kTol) << hour;
  ASSERT_LE(f.dg_kw, lim.dg_kw + kTol) << hour;
  for (double v : {f.served_kw, f.dg_kw, f.batt_charge_kw, f.batt_discharge_kw, f.grid_import_kw,
                   f.grid_export_kw, f.unmet_kw, f.curtailed_kw, f.fuel_l_per_hr,
                   f.conversion_loss_kw}) {
    ASSERT_GE(v, -kTol) << hour;
  }
}

Design random_design(Rng& rng) {
  return Design::with_capacities(rng.uniform() < 0.2 ? 0.0 : rng.uniform(0, 600),
                                 rng.uniform() < 0.3 ? 0.0 : rng.uniform(0, 250),
                                 rng.uniform() < 0.5 ? 0.0 : 60.0,
                                 rng.uniform() < 0.2 ? 0.0 : rng.uniform(0, 1000),
                                 rng.uniform(0, 400), rng.uniform() < 0.2 ? 0.0 : 500.0);
}

}  // namespace

TEST(Dispatch, EveryHourBalancesForRandomDesigns) {
  Rng rng(31);
  for (int i = 0; i < 12; ++i) {
    const Design d = random_design(rng);
    const auto lim = DispatchLimits::from(bundled(), d);
    const auto trace = simulate_year(bundled(), d);
    ASSERT_EQ(trace.flows.size(), kHoursPerYear);
    for (std::size_t h = 0; h < trace.flows.size(); ++h) {
      expect_flow_invariants(trace.flows[h], lim, h);
      ASSERT_GE(trace.soc[h], d.bess_kwh > 0 ? 0.2 - 1e-9 : 0.0);
      ASSERT_LE(trace.soc[h], 0.8 + 1e-9);
    }
  }
}

TEST(Dispatch, RandomHoursBalance) {
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    DispatchLimits lim;
    lim.converter_kw = rng.uniform(0, 300);
    lim.converter_efficiency = rng.uniform(0.8, 1.0);
    lim.converter_fixed_loss_kw = rng.uniform() < 0.5 ? 0.0 : rng.uniform(0, 2);
    lim.import_cap_kw = rng.uniform(0, 200);
    lim.export_cap_kw = rng.uniform(0, 200);
    lim.dg_kw = rng.uniform() < 0.5 ? 0.0 : rng.uniform(10, 100);
    lim.has_battery = rng.uniform() < 0.7;
    const double q_max = lim.has_battery ? rng.uniform(10, 1000) : 0.0;
    const auto battery = BatteryState::at_soc(q_max, rng.uniform(0.2, 0.8), 0.5);
    const HourInputs in{rng.uniform(0, 300), rng.uniform(0, 400), rng.uniform(0, 200)};
    const auto r = step_hour(in, battery, lim);
    expect_flow_invariants(r.flow, lim, i);
    if (lim.has_battery) {
      const double expected = battery.stored() + stored_energy_delta(r.flow.batt_charge_kw,
                                                                     r.flow.batt_discharge_kw,
                                                                     1.0, 0.9);
      ASSERT_NEAR(r.battery.stored(), expected, 1e-9 * (1 + q_max)) << i;
    }
  }
}

TEST(Dispatch, ZeroLoadServesNothing) {
  Scenario s = bundled();
  s.load = TimeSeries::constant(0.0, Unit::kW);
  const auto t = simulate_year(s, design_a5());
  EXPECT_EQ(t.totals.served_kwh, 0.0);
  EXPECT_EQ(t.totals.unmet_kwh, 0.0);
  EXPECT_EQ(t.totals.import_kwh, 0.0);
}

TEST(Dispatch, GridOnlyImportsTheLoad) {
  const auto t = simulate_year(bundled(), grid_only());
  EXPECT_NEAR(t.totals.import_kwh, bundled().load.sum(), 1e-6);
  EXPECT_EQ(t.totals.unmet_kwh, 0.0);
  EXPECT_EQ(t.totals.export_kwh, 0.0);
  EXPECT_EQ(t.totals.fuel_l, 0.0);
}

TEST(Dispatch, NoExportCapacityCurtailsSurplus) {
  DispatchLimits lim;
  lim.converter_kw = 1000;
  lim.converter_efficiency = 1.0;
  lim.import_cap_kw = 0;
  lim.export_cap_kw = 0;
  const auto r = step_hour({10.0, 50.0, 30.0}, BatteryState{}, lim);
  EXPECT_NEAR(r.flow.served_kw, 10.0, kTol);
  EXPECT_NEAR(r.flow.curtailed_kw, 70.0, kTol);
  EXPECT_EQ(r.flow.grid_export_kw, 0.0);
}

TEST(Dispatch, ShortfallIsUnmet) {
  DispatchLimits lim;
  lim.import_cap_kw = 20;
  const auto r = step_hour({100.0, 0.0, 30.0}, BatteryState{}, lim);
  EXPECT_NEAR(r.flow.grid_import_kw, 20.0, kTol);
  EXPECT_NEAR(r.flow.unmet_kw, 50.0, kTol);
}

TEST(Dispatch, DieselCoversDeficitAboveMinimumLoad) {
  DispatchLimits lim;
  lim.dg_kw = 60;
  auto r = step_hour({40.0, 0.0, 0.0}, BatteryState{}, lim);
  EXPECT_NEAR(r.flow.dg_kw, 40.0, kTol);
  EXPECT_NEAR(r.flow.fuel_l_per_hr, 0.08 * 60 + 0.25 * 40, 1e-12);
  r = step_hour({10.0, 0.0, 0.0}, BatteryState{}, lim);
  EXPECT_EQ(r.flow.dg_kw, 0.0);
  EXPECT_NEAR(r.flow.unmet_kw, 10.0, kTol);
}

TEST(Dispatch, NoDieselNoFuel) {
  const auto t = simulate_year(bundled(), Design::with_capacities(300, 100, 0, 400, 200, 500));
  EXPECT_EQ(t.totals.fuel_l, 0.0);
  EXPECT_EQ(t.totals.dg_hours, 0.0);
}

TEST(Dispatch, BatteryStartsFull) {
  const auto t = simulate_year(bundled(), design_a5());
  EXPECT_NEAR(t.initial_battery.soc(), 0.8, 1e-12);
}

TEST(Dispatch, MorePvNeverRaisesImports) {
  double last = std::numeric_limits<double>::infinity();
  for (double pv : {0.0, 100.0, 200.0, 400.0}) {
    const auto t = simulate_year(bundled(), Design::with_capacities(pv, 0, 0, 0, 400, 500));
    EXPECT_LE(t.totals.import_kwh, last + 1e-6) << pv;
    last = t.totals.import_kwh;
  }
}

TEST(Dispatch, ExcludedSourceWithCapacityIsRejected) {
  Design d = design_a5();
  d.include_pv = false;
  EXPECT_THROW(simulate_year(bundled(), d), InvalidDesign);
}

TEST(Dispatch, IsDeterministic) {
  const auto a = simulate_year(bundled(), design_a5());
  const auto b = simulate_year(bundled(), design_a5());
  std::ostringstream sa, sb;
  write_trace_csv(sa, a);
  write_trace_csv(sb, b);
  EXPECT_EQ(sa.str(), sb.str());
}
