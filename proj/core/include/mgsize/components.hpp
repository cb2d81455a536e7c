#pragma once

#include "mgsize/scenario.hpp"

// Per-hour physical models. All functions are pure.
namespace mgsize {

// DC output of a PV array of `capacity_kw` nameplate:
//   capacity * f_pv * (G / G_std) * (1 + alpha_p * (T_cell - T_std)), floored at 0.
double pv_output(const PvSpec& spec, double capacity_kw, double irradiance_kw_m2,
                 double cell_temp_c);

// Power-law extrapolation of anemometer wind speed to hub height.
// Throws NonPositiveHeight.
double hub_wind_speed(double anemometer_speed, double anemometer_height_m, double hub_height_m,
                      double shear_exponent = 0.14);

// Output of `capacity_kw` of installed wind turbines at hub speed `hub_speed`.
// Zero below cut-in and above cut-out; between them the lesser of a ramp
// (u^n - u_ci^n) / (u_r^n - u_ci^n) up to rated, the aerodynamic limit
// 0.5 * rho * A * Cp * u^n scaled from one unit to the installed capacity,
// and nameplate.
double wt_output(const WindSpec& spec, double capacity_kw, double hub_speed, double air_density,
                 double swept_area_m2);
double wt_output(const WindSpec& spec, double capacity_kw, double hub_speed);

// Fuel use in L/hr: intercept * rated + slope * output while running, 0 when off.
// Throws BelowMinLoad for 0 < output < min_load_ratio * rated, and
// InvalidDesign for output above rating.
double dg_fuel(const DieselSpec& spec, double rated_kw, double output_kw);

// Power out of a converter: max(0, efficiency * p_in - fixed_loss).
double converter_transfer(double p_in_kw, double efficiency, double fixed_loss_kw);

// Purchases of a component over the project: ceil(project / lifetime).
int battery_replacements(int project_years, int lifetime_years);

}  // namespace mgsize
