#include "mgsize/components.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "mgsize/error.hpp"

namespace mgsize {

double pv_output(const PvSpec& spec, double capacity_kw, double irradiance_kw_m2,
                 double cell_temp_c) {
  const double temp_factor = 1.0 + spec.temp_coefficient * (cell_temp_c - spec.std_cell_temp_c);
  const double p =
      capacity_kw * spec.derating * (irradiance_kw_m2 / spec.std_irradiance_kw_m2) * temp_factor;
  return std::max(0.0, p);
}

double hub_wind_speed(double anemometer_speed, double anemometer_height_m, double hub_height_m,
                      double shear_exponent) {
  if (!(anemometer_height_m > 0.0) || !(hub_height_m > 0.0)) {
    throw NonPositiveHeight(fmt::format("heights must be positive (anemometer {}, hub {})",
                                        anemometer_height_m, hub_height_m));
  }
  if (hub_height_m == anemometer_height_m) return anemometer_speed;
  return anemometer_speed * std::pow(hub_height_m / anemometer_height_m, shear_exponent);
}

double wt_output(const WindSpec& spec, double capacity_kw, double hub_speed, double air_density,
                 double swept_area_m2) {
  if (capacity_kw <= 0.0) return 0.0;
  if (hub_speed < spec.cut_in_ms || hub_speed > spec.cut_out_ms) return 0.0;
  const double n = spec.speed_exponent;
  double ramp = capacity_kw;
  if (hub_speed < spec.rated_speed_ms) {
    const double ci = std::pow(spec.cut_in_ms, n);
    ramp = capacity_kw * (std::pow(hub_speed, n) - ci) / (std::pow(spec.rated_speed_ms, n) - ci);
  }
  const double unit_aero_kw =
      0.5 * air_density * swept_area_m2 * spec.power_coefficient * std::pow(hub_speed, n) / 1000.0;
  const double aero = unit_aero_kw * capacity_kw / spec.unit_rated_kw;
  return std::clamp(std::min(ramp, aero), 0.0, capacity_kw);
}

double wt_output(const WindSpec& spec, double capacity_kw, double hub_speed) {
  return wt_output(spec, capacity_kw, hub_speed, spec.air_density, spec.swept_area_m2);
}

double dg_fuel(const DieselSpec& spec, double rated_kw, double output_kw) {
  if (output_kw <= 0.0) return 0.0;
  if (output_kw > rated_kw * (1.0 + 1e-12)) {
    throw InvalidDesign(fmt::format("diesel output {} kW exceeds rating {} kW", output_kw, rated_kw));
  }
  if (output_kw < spec.min_load_ratio * rated_kw) {
    throw BelowMinLoad(fmt::format("diesel output {} kW below minimum load {} kW", output_kw,
                                   spec.min_load_ratio * rated_kw));
  }
  return spec.fuel_intercept * rated_kw + spec.fuel_slope * output_kw;
}

double converter_transfer(double p_in_kw, double efficiency, double fixed_loss_kw) {
  return std::max(0.0, efficiency * p_in_kw - fixed_loss_kw);
}

int battery_replacements(int project_years, int lifetime_years) {
  if (project_years < 1 || lifetime_years < 1) {
    throw InvalidDesign("project and lifetime years must be >= 1");
  }
  return (project_years + lifetime_years - 1) / lifetime_years;
}

}  // namespace mgsize
