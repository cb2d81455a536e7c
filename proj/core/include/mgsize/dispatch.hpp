#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mgsize/battery.hpp"
#include "mgsize/scenario.hpp"

namespace mgsize {

// Candidate microgrid. A capacity may be non-zero only when its source is
// included; the converter and grid connection carry no inclusion flag.
struct Design {
  bool include_pv = false;
  bool include_wt = false;
  bool include_dg = false;
  bool include_bess = false;
  double pv_kw = 0.0;
  double wt_kw = 0.0;
  double dg_kw = 0.0;
  double bess_kwh = 0.0;
  double converter_kw = 0.0;
  double grid_cap_kw = 0.0;

  // Sets each inclusion flag from whether its capacity is positive.
  static Design with_capacities(double pv_kw, double wt_kw, double dg_kw, double bess_kwh,
                                double converter_kw, double grid_cap_kw);

  friend bool operator==(const Design&, const Design&) = default;
};

std::vector<std::string> design_problems(const Design& d);

// Throws InvalidDesign listing every problem.
void validate_design(const Design& d);

// One hour of operation. All fields are non-negative kW (energy over the
// hour); fuel is L/hr. pv_kw and wt_kw are the available generation, before
// curtailment. Balance:
//   pv + wt + dg + discharge + import
//     = served + charge + export + conversion_loss + curtailed
struct PowerFlow {
  double load_kw = 0.0;
  double served_kw = 0.0;
  double pv_kw = 0.0;
  double wt_kw = 0.0;
  double dg_kw = 0.0;
  double batt_charge_kw = 0.0;
  double batt_discharge_kw = 0.0;
  double grid_import_kw = 0.0;
  double grid_export_kw = 0.0;
  double unmet_kw = 0.0;
  double curtailed_kw = 0.0;
  double fuel_l_per_hr = 0.0;
  double conversion_loss_kw = 0.0;

  // Sources minus sinks; zero up to rounding for every produced flow.
  double balance_residual() const;
};

struct TraceTotals {
  double load_kwh = 0.0;
  double served_kwh = 0.0;
  double unmet_kwh = 0.0;
  double pv_kwh = 0.0;
  double wt_kwh = 0.0;
  double renewable_kwh = 0.0;  // pv + wt generation available
  double dg_kwh = 0.0;
  double dg_hours = 0.0;
  double fuel_l = 0.0;
  double import_kwh = 0.0;
  double export_kwh = 0.0;
  double charge_kwh = 0.0;
  double discharge_kwh = 0.0;
  double loss_kwh = 0.0;       // conversion losses
  double curtailed_kwh = 0.0;
  double grid_purchase_usd = 0.0;
  double sellback_usd = 0.0;
  double stored_change_kwh = 0.0;  // final minus initial stored energy
};

struct DispatchTrace {
  std::vector<PowerFlow> flows;
  std::vector<double> soc;  // end-of-hour state of charge
  BatteryState initial_battery;
  BatteryState final_battery;
  TraceTotals totals;
};

// Per-hour limits derived from a design and scenario.
struct DispatchLimits {
  double converter_kw = 0.0;
  double converter_efficiency = 1.0;
  double converter_fixed_loss_kw = 0.0;
  double import_cap_kw = 0.0;
  double export_cap_kw = 0.0;
  double dg_kw = 0.0;
  DieselSpec diesel;
  bool has_battery = false;
  KineticParams battery;

  static DispatchLimits from(const Scenario& s, const Design& d);
};

struct HourInputs {
  double load_kw = 0.0;
  double pv_kw = 0.0;  // DC bus
  double wt_kw = 0.0;  // AC bus
};

struct HourResult {
  BatteryState battery;
  PowerFlow flow;
};

// Decides one hour of flows. Implementations must satisfy the PowerFlow
// balance and never charge and discharge in the same hour.
class DispatchStrategy {
 public:
  virtual ~DispatchStrategy() = default;
  virtual HourResult step(const HourInputs& in, const BatteryState& battery,
                          const DispatchLimits& limits) const = 0;
};

// PV and battery sit on a DC bus behind the converter; wind, diesel, grid and
// load sit on the AC bus. Surplus goes battery -> export -> curtail; deficit
// is covered by battery -> grid -> diesel, and the rest is unmet. Diesel
// stays off when the remaining deficit is below its minimum load.
class PriorityDispatch final : public DispatchStrategy {
 public:
  HourResult step(const HourInputs& in, const BatteryState& battery,
                  const DispatchLimits& limits) const override;
};

HourResult step_hour(const HourInputs& in, const BatteryState& battery,
                     const DispatchLimits& limits);

// Hourly available generation for the design, multipliers applied.
std::vector<double> pv_generation(const Scenario& s, double pv_kw);
std::vector<double> wt_generation(const Scenario& s, double wt_kw);

// Runs the year from a battery at soc_max. Throws InvalidDesign.
DispatchTrace simulate_year(const Scenario& scenario, const Design& design);
DispatchTrace simulate_year(const Scenario& scenario, const Design& design,
                            const DispatchStrategy& strategy);

// One row per hour: the PowerFlow fields then soc.
void write_trace_csv(std::ostream& out, const DispatchTrace& trace);

}  // namespace mgsize
