#include "mgsize/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

#include "mgsize/error.hpp"
#include "mgsize/random.hpp"

namespace mgsize {

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::PV: return "PV";
    case ComponentKind::WT: return "WT";
    case ComponentKind::DG: return "DG";
    case ComponentKind::BESS: return "BESS";
    case ComponentKind::Converter: return "Converter";
  }
  return "?";
}

namespace {

class ProblemList {
 public:
  void require(bool ok, std::string message) {
    if (!ok) problems_.push_back(std::move(message));
  }
  std::vector<std::string> take() { return std::move(problems_); }

  void check_series(const TimeSeries& s, std::string_view name, std::size_t expected) {
    require(s.size() == expected,
            fmt::format("{}: length {} does not match expected {}", name, s.size(), expected));
    std::size_t bad = 0;
    std::size_t negative = 0;
    for (double v : s.values()) {
      if (!std::isfinite(v)) ++bad;
      else if (unit_is_non_negative(s.unit()) && v < 0.0) ++negative;
    }
    require(bad == 0, fmt::format("{}: {} non-finite values", name, bad));
    require(negative == 0, fmt::format("{}: {} negative values", name, negative));
  }

  void check_cost(const CostData& c, std::string_view name) {
    require(c.capital >= 0.0, fmt::format("{}.capital must be >= 0", name));
    require(c.replacement >= 0.0, fmt::format("{}.replacement must be >= 0", name));
    require(c.om >= 0.0, fmt::format("{}.om must be >= 0", name));
    require(c.lifetime_years >= 1, fmt::format("{}.lifetime_years must be >= 1", name));
  }

  void check_fraction(double v, std::string_view name) {
    require(v > 0.0 && v <= 1.0, fmt::format("{} must be in (0, 1], got {}", name, v));
  }

 private:
  std::vector<std::string> problems_;
};

}  // namespace

std::vector<std::string> scenario_problems(const Scenario& s) {
  ProblemList p;
  const std::size_t n = kHoursPerYear;
  p.check_series(s.load, "load", n);
  p.check_series(s.irradiance, "irradiance", n);
  p.check_series(s.wind_speed, "wind_speed", n);
  if (s.cell_temp) p.check_series(*s.cell_temp, "cell_temp", n);
  p.check_series(s.tariff.purchase_price, "tariff.purchase_price", n);
  p.check_series(s.tariff.sellback_price, "tariff.sellback_price", n);

  p.require(s.anemometer_height_m > 0.0, "anemometer_height_m must be > 0");
  p.require(s.reliability_lambda > 0.0,
            fmt::format("reliability_lambda must be > 0, got {}", s.reliability_lambda));
  p.require(s.pv_output_multiplier >= 0.0, "pv_output_multiplier must be >= 0");
  p.require(s.wind_output_multiplier >= 0.0, "wind_output_multiplier must be >= 0");

  const auto& t = s.tariff;
  p.require(t.max_import_kw >= 0.0, "tariff.max_import_kw must be >= 0");
  p.require(t.max_export_kw >= 0.0, "tariff.max_export_kw must be >= 0");
  p.require(t.emission_factor_kg_per_kwh >= 0.0, "tariff.emission_factor must be >= 0");

  const auto& e = s.economics;
  p.require(e.discount_rate >= 0.0, "economics.discount_rate must be >= 0");
  p.require(e.inflation_rate > -1.0, "economics.inflation_rate must be > -1");
  p.require(e.project_years >= 1, "economics.project_years must be >= 1");
  p.require(e.fuel_price_per_l >= 0.0, "economics.fuel_price_per_l must be >= 0");
  p.require(e.diesel_emission_kg_per_l >= 0.0, "economics.diesel_emission_kg_per_l must be >= 0");

  const auto& c = s.catalog;
  p.check_cost(c.pv.cost, "pv");
  p.check_fraction(c.pv.derating, "pv.derating");
  p.require(c.pv.std_irradiance_kw_m2 > 0.0, "pv.std_irradiance_kw_m2 must be > 0");
  p.require(c.pv.annual_degradation >= 0.0 && c.pv.annual_degradation < 1.0,
            "pv.annual_degradation must be in [0, 1)");

  p.check_cost(c.wind.cost, "wind");
  p.require(c.wind.unit_rated_kw > 0.0, "wind.unit_rated_kw must be > 0");
  p.require(c.wind.cut_in_ms < c.wind.cut_out_ms, "wind: cut-in speed must be below cut-out");
  p.require(c.wind.cut_in_ms < c.wind.rated_speed_ms && c.wind.rated_speed_ms <= c.wind.cut_out_ms,
            "wind: rated speed must lie in (cut-in, cut-out]");
  p.require(c.wind.cut_in_ms >= 0.0, "wind: cut-in speed must be >= 0");
  p.require(c.wind.hub_height_m > 0.0, "wind.hub_height_m must be > 0");
  p.require(c.wind.swept_area_m2 > 0.0, "wind.swept_area_m2 must be > 0");
  p.check_fraction(c.wind.power_coefficient, "wind.power_coefficient");
  p.require(c.wind.air_density > 0.0, "wind.air_density must be > 0");
  p.require(c.wind.speed_exponent > 0.0, "wind.speed_exponent must be > 0");
  p.require(c.wind.annual_degradation >= 0.0 && c.wind.annual_degradation < 1.0,
            "wind.annual_degradation must be in [0, 1)");

  p.check_cost(c.diesel.cost, "diesel");
  p.require(c.diesel.fuel_intercept >= 0.0, "diesel.fuel_intercept must be >= 0");
  p.require(c.diesel.fuel_slope >= 0.0, "diesel.fuel_slope must be >= 0");
  p.require(c.diesel.min_load_ratio >= 0.0 && c.diesel.min_load_ratio <= 1.0,
            "diesel.min_load_ratio must be in [0, 1]");

  p.check_cost(c.battery.cost, "battery");
  p.check_fraction(c.battery.roundtrip_efficiency, "battery.roundtrip_efficiency");
  p.check_fraction(c.battery.depth_of_discharge(), "battery.depth_of_discharge");
  p.require(c.battery.soc_min >= 0.0 && c.battery.soc_min < c.battery.soc_max &&
                c.battery.soc_max <= 1.0,
            "battery: need 0 <= soc_min < soc_max <= 1");
  p.require(c.battery.capacity_ratio > 0.0 && c.battery.capacity_ratio < 1.0,
            "battery.capacity_ratio must be in (0, 1)");
  p.require(c.battery.rate_constant > 0.0, "battery.rate_constant must be > 0");

  p.check_cost(c.converter.cost, "converter");
  p.check_fraction(c.converter.efficiency, "converter.efficiency");
  p.require(c.converter.fixed_loss_kw >= 0.0, "converter.fixed_loss_kw must be >= 0");

  return p.take();
}

const Scenario& validate_scenario(const Scenario& s) {
  auto problems = scenario_problems(s);
  if (!problems.empty()) throw ValidationErrors(std::move(problems));
  return s;
}

// --- bundled synthetic scenario -------------------------------------------

std::array<double, 24> default_daily_load_profile() {
  // Relative shape: low overnight, morning shoulder, flat midday, evening peak at 18:00.
  constexpr std::array<double, 24> shape = {
      0.45, 0.40, 0.38, 0.37, 0.38, 0.45, 0.60, 0.72, 0.70, 0.62, 0.58, 0.56,
      0.55, 0.55, 0.56, 0.62, 0.75, 0.90, 1.00, 0.98, 0.92, 0.80, 0.65, 0.52};
  constexpr double daily_kwh = 3139.3;
  constexpr double peak_kw = 235.2;
  // Affine map a + b * shape hitting both the daily energy and the peak.
  const double shape_sum = std::accumulate(shape.begin(), shape.end(), 0.0);
  const double shape_max = *std::max_element(shape.begin(), shape.end());
  const double b = (peak_kw * 24.0 - daily_kwh) / (shape_max * 24.0 - shape_sum);
  const double a = peak_kw - b * shape_max;
  std::array<double, 24> out{};
  for (std::size_t h = 0; h < 24; ++h) out[h] = a + b * shape[h];
  return out;
}

MonthlyResource default_monthly_resource() {
  // Synthetic monthly means for a temperate coastal site at ~36 S.
  return MonthlyResource{
      {6.2, 5.4, 4.5, 3.5, 2.6, 2.2, 2.4, 3.2, 4.3, 5.3, 5.8, 6.3},
      {5.6, 5.3, 5.1, 5.3, 5.7, 6.2, 6.4, 6.6, 6.4, 6.2, 5.9, 5.7},
  };
}

double site_latitude_deg() { return -(36.0 + 18.8 / 60.0); }

namespace {

// Day-of-year (0-based) at the middle of each month.
constexpr std::array<double, 12> kMidMonthDay = {15.0,  45.0,  74.0,  105.0, 135.0, 166.0,
                                                 196.0, 227.0, 258.0, 288.0, 319.0, 349.0};

// Periodic piecewise-linear interpolation of monthly means to day `d`.
double interpolate_monthly(const std::array<double, 12>& monthly, double d) {
  std::size_t hi = 0;
  while (hi < 12 && kMidMonthDay[hi] <= d) ++hi;
  const std::size_t lo = (hi + 11) % 12;
  const std::size_t up = hi % 12;
  double x0 = kMidMonthDay[lo];
  double x1 = kMidMonthDay[up];
  if (hi == 0) x0 -= 365.0;
  if (hi == 12) x1 += 365.0;
  const double f = (d - x0) / (x1 - x0);
  return monthly[lo] + f * (monthly[up] - monthly[lo]);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

}  // namespace

TimeSeries synthesize_irradiance(const std::array<double, 12>& monthly_kwh_m2_day,
                                 double latitude_deg, std::uint64_t seed) {
  constexpr double kDeg = std::numbers::pi / 180.0;
  constexpr double kPeakCap = 1.1;  // kW/m2
  Rng rng(seed);

  // Day-level clearness with some persistence, normalised to mean 1.
  std::vector<double> clearness(kDaysPerYear);
  double z = 0.0;
  for (auto& c : clearness) {
    z = 0.6 * z + 0.8 * rng.normal();
    c = std::clamp(1.0 + 0.30 * z, 0.25, 1.45);
  }
  const double mean_c =
      std::accumulate(clearness.begin(), clearness.end(), 0.0) / static_cast<double>(kDaysPerYear);
  for (auto& c : clearness) c /= mean_c;

  std::vector<double> values;
  values.reserve(kHoursPerYear);
  const double phi = latitude_deg * kDeg;
  for (std::size_t day = 0; day < kDaysPerYear; ++day) {
    const double d = static_cast<double>(day);
    const double daily = interpolate_monthly(monthly_kwh_m2_day, d) * clearness[day];
    const double decl = 23.45 * kDeg * std::sin(2.0 * std::numbers::pi * (285.0 + d) / 365.0);
    const double cos_ws = std::clamp(-std::tan(phi) * std::tan(decl), -1.0, 1.0);
    const double day_length = 2.0 * std::acos(cos_ws) / (15.0 * kDeg);
    const double sunrise = 12.0 - day_length / 2.0;
    const double sunset = 12.0 + day_length / 2.0;
    const double total_shape = 2.0 * day_length / std::numbers::pi;
    for (std::size_t h = 0; h < kHoursPerDay; ++h) {
      const double a = std::max(static_cast<double>(h), sunrise);
      const double b = std::min(static_cast<double>(h + 1), sunset);
      double energy = 0.0;
      if (b > a && total_shape > 0.0) {
        const double w = std::numbers::pi / day_length;
        const double shape = (std::cos(w * (a - sunrise)) - std::cos(w * (b - sunrise))) / w;
        energy = daily * shape / total_shape;
      }
      values.push_back(std::min(energy, kPeakCap));
    }
  }
  return TimeSeries(std::move(values), Unit::kWPerM2);
}

TimeSeries synthesize_wind(const std::array<double, 12>& monthly_ms, std::uint64_t seed) {
  constexpr double kGammaOnePlusHalf = 0.886226925452758;  // Gamma(1.5), Weibull k = 2
  constexpr double kRho = 0.92;
  const double innovation = std::sqrt(1.0 - kRho * kRho);
  Rng rng(seed);
  std::vector<double> values;
  values.reserve(kHoursPerYear);
  double z = rng.normal();
  for (std::size_t day = 0; day < kDaysPerYear; ++day) {
    const double mean = interpolate_monthly(monthly_ms, static_cast<double>(day));
    for (std::size_t h = 0; h < kHoursPerDay; ++h) {
      z = kRho * z + innovation * rng.normal();
      const double tail = std::max(1.0 - normal_cdf(z), 1e-12);
      const double weibull = std::sqrt(-std::log(tail)) / kGammaOnePlusHalf;
      const double diurnal =
          1.0 + 0.12 * std::sin(2.0 * std::numbers::pi * (static_cast<double>(h) - 9.0) / 24.0);
      values.push_back(mean * diurnal * weibull);
    }
  }
  return TimeSeries(std::move(values), Unit::MetersPerSecond);
}

Scenario bundled_scenario() {
  Scenario s;
  s.name = "central-tilba-synthetic";
  const auto profile = default_daily_load_profile();
  s.load = synthesize_load(profile, 0.10, 0.10, 20240101);
  const auto resource = default_monthly_resource();
  s.irradiance = synthesize_irradiance(resource.ghi_kwh_m2_day, site_latitude_deg(), 20240102);
  s.wind_speed = synthesize_wind(resource.wind_ms, 20240103);
  s.anemometer_height_m = 10.0;
  return s;
}

}  // namespace mgsize
