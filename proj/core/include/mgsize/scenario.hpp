#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgsize/timeseries.hpp"

namespace mgsize {

enum class ComponentKind { PV, WT, DG, BESS, Converter };

std::string_view to_string(ComponentKind kind);

// Economic data shared by every component. Rates are per unit of rated size
// (kW, or kWh for storage).
struct CostData {
  double capital = 0.0;      // $/unit
  double replacement = 0.0;  // $/unit
  double om = 0.0;           // $/unit/yr; diesel: $/unit/operating hour
  int lifetime_years = 1;
};

struct PvSpec {
  CostData cost{1300.0, 1300.0, 10.0, 20};
  double derating = 0.80;                  // f_pv
  double temp_coefficient = -0.004;        // alpha_p, 1/degC
  double std_irradiance_kw_m2 = 1.0;       // G_std
  double std_cell_temp_c = 25.0;           // T_std
  double annual_degradation = 0.005;       // d_PV used by the CO2 account
};

struct WindSpec {
  CostData cost{2300.0, 2300.0, 207.0, 20};
  double unit_rated_kw = 3.0;
  double cut_in_ms = 4.0;
  double rated_speed_ms = 10.0;
  double cut_out_ms = 24.0;
  double hub_height_m = 15.0;
  double shear_exponent = 0.14;            // power-law alpha
  double swept_area_m2 = 15.9;             // per unit (4.5 m rotor)
  double power_coefficient = 0.35;         // Cp
  double air_density = 1.225;              // kg/m3
  double speed_exponent = 3.0;             // 3 is physical; 2 reproduces the printed form
  double annual_degradation = 0.0;
};

struct DieselSpec {
  CostData cost{400.0, 400.0, 0.03, 15};
  double fuel_intercept = 0.08;            // alpha_dg, L/hr per kW rated
  double fuel_slope = 0.25;                // beta_dg, L/hr per kW output
  double min_load_ratio = 0.25;
};

struct BatterySpec {
  CostData cost{700.0, 700.0, 10.0, 10};
  double nominal_voltage = 24.0;
  double roundtrip_efficiency = 0.90;
  double soc_min = 0.20;
  double soc_max = 0.80;
  double capacity_ratio = 0.5;             // KiBaM c
  double rate_constant = 1.0;              // KiBaM k, 1/hr

  double depth_of_discharge() const { return 1.0 - soc_min; }
};

struct ConverterSpec {
  CostData cost{300.0, 300.0, 0.0, 15};
  double efficiency = 0.95;
  double fixed_loss_kw = 0.0;
};

struct Catalog {
  PvSpec pv;
  WindSpec wind;
  DieselSpec diesel;
  BatterySpec battery;
  ConverterSpec converter;
};

struct GridTariff {
  TimeSeries purchase_price = TimeSeries::constant(0.30, Unit::DollarsPerKWh);
  TimeSeries sellback_price = TimeSeries::constant(0.10, Unit::DollarsPerKWh);
  double max_import_kw = 500.0;
  double max_export_kw = 500.0;
  double emission_factor_kg_per_kwh = 0.79;
};

struct Economics {
  double discount_rate = 0.06;        // nominal, per year
  double inflation_rate = 0.02;       // recurring costs escalate at this rate
  int project_years = 25;
  double fuel_price_per_l = 1.80;
  double diesel_emission_kg_per_l = 2.68;

  // (r - i) / (1 + i): discounting escalated cash flows at the nominal rate
  // is the same as discounting base-year cash flows at this rate.
  double real_discount_rate() const {
    return (discount_rate - inflation_rate) / (1.0 + inflation_rate);
  }
};

// How the efficiency metric's denominator is formed. See metrics.hpp.
enum class EfficiencyMode { NetOfLosses, GrossInput };

struct Scenario {
  std::string name = "unnamed";
  TimeSeries load;
  TimeSeries irradiance;                 // kW/m2 on the array plane
  TimeSeries wind_speed;                 // m/s at anemometer height
  std::optional<TimeSeries> cell_temp;   // degC; absent means T_std every hour
  double anemometer_height_m = 10.0;
  GridTariff tariff;
  Economics economics;
  Catalog catalog;
  double reliability_lambda = 100.0;
  EfficiencyMode efficiency_mode = EfficiencyMode::NetOfLosses;
  // Uniform output multipliers used by sensitivity studies.
  double pv_output_multiplier = 1.0;
  double wind_output_multiplier = 1.0;
};

// Returns every invariant violation; empty means the scenario is valid.
std::vector<std::string> scenario_problems(const Scenario& s);

// Returns `s` unchanged when valid, otherwise throws ValidationErrors.
const Scenario& validate_scenario(const Scenario& s);

// --- bundled synthetic scenario -------------------------------------------

// Hourly shape with an evening peak (17:00-21:00), scaled to 3139.3 kWh/day
// and a 235.2 kW peak.
std::array<double, 24> default_daily_load_profile();

// Monthly means used by the bundled resource synthesis.
struct MonthlyResource {
  std::array<double, 12> ghi_kwh_m2_day;
  std::array<double, 12> wind_ms;
};
MonthlyResource default_monthly_resource();

double site_latitude_deg();

// Hourly plane irradiance from monthly mean daily insolation: monthly means
// are interpolated to daily values, spread over daylight hours with a sine
// shape and modulated by a day-level clearness draw.
TimeSeries synthesize_irradiance(const std::array<double, 12>& monthly_kwh_m2_day,
                                 double latitude_deg, std::uint64_t seed);

// Hourly wind speed at anemometer height: interpolated monthly means, a mild
// afternoon diurnal swing, and Weibull (k = 2) fluctuations with AR(1) memory.
TimeSeries synthesize_wind(const std::array<double, 12>& monthly_ms, std::uint64_t seed);

// Fully synthetic stand-in for the case-study community. Deterministic.
Scenario bundled_scenario();

}  // namespace mgsize
