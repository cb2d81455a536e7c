#include <algorithm>
#include <fstream>
#include <numeric>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mgsize/error.hpp"
#include "mgsize/scenario.hpp"
#include "mgsize/scenario_io.hpp"
#include "temp_dir.hpp"

using namespace mgsize;
using mgsize::testing::bundled;
using mgsize::testing::TempDir;

TEST(Scenario, BundledValidates) {
  EXPECT_NO_THROW(validate_scenario(bundled()));
  EXPECT_TRUE(scenario_problems(bundled()).empty());
}

TEST(Scenario, BundledIsDeterministic) {
  const Scenario again = bundled_scenario();
  EXPECT_EQ(again.load, bundled().load);
  EXPECT_EQ(again.irradiance, bundled().irradiance);
  EXPECT_EQ(again.wind_speed, bundled().wind_speed);
}

TEST(Scenario, ZeroLambdaIsReported) {
  Scenario s = bundled();
  s.reliability_lambda = 0.0;
  try {
    validate_scenario(s);
    FAIL() << "expected ValidationErrors";
  } catch (const ValidationErrors& e) {
    EXPECT_TRUE(e.mentions("reliability_lambda"));
  }
}

TEST(Scenario, ShortLoadIsReported) {
  Scenario s = bundled();
  std::vector<double> v(s.load.values().begin(), s.load.values().end() - 1);
  s.load = TimeSeries(v, Unit::kW);
  try {
    validate_scenario(s);
    FAIL() << "expected ValidationErrors";
  } catch (const ValidationErrors& e) {
    EXPECT_TRUE(e.mentions("length"));
  }
}

TEST(Scenario, EveryProblemIsListed) {
  Scenario s = bundled();
  s.reliability_lambda = -1.0;
  s.catalog.wind.cut_in_ms = 30.0;
  s.catalog.battery.roundtrip_efficiency = 1.5;
  s.economics.project_years = 0;
  EXPECT_GE(scenario_problems(s).size(), 4u);
}

TEST(Scenario, DefaultLoadProfileShape) {
  const auto p = default_daily_load_profile();
  EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 3139.3, 1e-6);
  EXPECT_NEAR(*std::max_element(p.begin(), p.end()), 235.2, 1e-6);
  const auto peak_hour = std::max_element(p.begin(), p.end()) - p.begin();
  EXPECT_GE(peak_hour, 17);
  EXPECT_LE(peak_hour, 21);
}

TEST(Scenario, SynthesizedResourceFollowsMonthlyMeans) {
  const auto m = default_monthly_resource();
  const auto& g = bundled().irradiance;
  const auto& w = bundled().wind_speed;
  double ghi_year = 0.0, wind_year = 0.0, ghi_ref = 0.0, wind_ref = 0.0;
  for (std::size_t h = 0; h < kHoursPerYear; ++h) {
    ghi_year += g[h];
    wind_year += w[h];
  }
  for (std::size_t i = 0; i < 12; ++i) {
    ghi_ref += m.ghi_kwh_m2_day[i];
    wind_ref += m.wind_ms[i];
  }
  EXPECT_NEAR(ghi_year / 365.0, ghi_ref / 12.0, 0.1 * ghi_ref / 12.0);
  EXPECT_NEAR(wind_year / kHoursPerYear, wind_ref / 12.0, 0.1 * wind_ref / 12.0);
  for (std::size_t h = 0; h < kHoursPerYear; ++h) {
    ASSERT_GE(g[h], 0.0);
    ASSERT_GE(w[h], 0.0);
    if (h % 24 < 4) ASSERT_EQ(g[h], 0.0) << "night hour " << h;
  }
}

TEST(ScenarioFile, EmptyObjectIsBundled) {
  TempDir dir;
  std::ofstream(dir / "s.json") << "{}";
  const Scenario s = load_scenario(dir / "s.json");
  EXPECT_EQ(s.load, bundled().load);
  EXPECT_EQ(s.irradiance, bundled().irradiance);
  EXPECT_EQ(s.wind_speed, bundled().wind_speed);
  EXPECT_EQ(s.reliability_lambda, 100.0);
}

TEST(ScenarioFile, SaveThenLoadReproducesScenario) {
  TempDir dir;
  Scenario s = bundled();
  s.name = "roundtrip";
  s.catalog.battery.capacity_ratio = 0.4;
  s.economics.project_years = 20;
  s.tariff.sellback_price = s.tariff.sellback_price.scaled(0.5);
  s.efficiency_mode = EfficiencyMode::GrossInput;
  const auto path = save_scenario(s, dir.path());
  const Scenario back = load_scenario(path);
  EXPECT_EQ(back.name, "roundtrip");
  EXPECT_EQ(back.load, s.load);
  EXPECT_EQ(back.tariff.sellback_price, s.tariff.sellback_price);
  EXPECT_EQ(back.catalog.battery.capacity_ratio, 0.4);
  EXPECT_EQ(back.economics.project_years, 20);
  EXPECT_EQ(back.efficiency_mode, EfficiencyMode::GrossInput);
}

TEST(ScenarioFile, SeriesResolveRelativeToFile) {
  TempDir dir;
  std::filesystem::create_directories(dir / "series");
  {
    std::ofstream out(dir / "series" / "load.txt");
    for (std::size_t h = 0; h < kHoursPerYear; ++h) out << (h % 24) << '\n';
  }
  std::ofstream(dir / "s.json") << R"({"load": {"file": "series/load.txt"},
    "tariff": {"purchase_price": 0.25}, "catalog": {"pv": {"derating": 0.9}}})";
  const Scenario s = load_scenario(dir / "s.json");
  EXPECT_EQ(s.load[23], 23.0);
  EXPECT_EQ(s.tariff.purchase_price[100], 0.25);
  EXPECT_EQ(s.catalog.pv.derating, 0.9);
  EXPECT_EQ(s.catalog.pv.cost.capital, 1300.0);
}

TEST(ScenarioFile, SyntheticSectionsAcceptParameters) {
  const Scenario s = parse_scenario(
      R"({"load": {"synthetic": {"day_to_day_variability": 0, "hour_to_hour_variability": 0}}})",
      ".");
  const auto profile = default_daily_load_profile();
  EXPECT_EQ(s.load[24 * 100 + 18], profile[18]);
}

TEST(ScenarioFile, MalformedJsonReportsLine) {
  try {
    parse_scenario("{\n  \"name\": \"x\",\n  \"reliability_lambda\": ,\n}", ".", "bad.json");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ScenarioFile, UnknownKeyIsConfigError) {
  EXPECT_THROW(parse_scenario(R"({"catalog": {"pv": {"deratng": 0.9}}})", "."), ConfigError);
  EXPECT_THROW(parse_scenario(R"({"economics": {"discount_rate": "six"}})", "."), ConfigError);
}

TEST(ScenarioFile, InvalidValuesFailValidation) {
  EXPECT_THROW(parse_scenario(R"({"reliability_lambda": 0})", "."), ValidationErrors);
}

TEST(ScenarioFile, MissingFiles) {
  EXPECT_THROW(load_scenario("/nonexistent/mgsize.json"), FileNotFound);
  EXPECT_THROW(parse_scenario(R"({"load": {"file": "nope.txt"}})", "/nonexistent"), FileNotFound);
}
