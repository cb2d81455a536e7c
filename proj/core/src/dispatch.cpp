#include "mgsize/dispatch.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "mgsize/components.hpp"
#include "mgsize/csv.hpp"
#include "mgsize/error.hpp"

namespace mgsize {

Design Design::with_capacities(double pv_kw, double wt_kw, double dg_kw, double bess_kwh,
                               double converter_kw, double grid_cap_kw) {
  Design d;
  d.include_pv = pv_kw > 0.0;
  d.include_wt = wt_kw > 0.0;
  d.include_dg = dg_kw > 0.0;
  d.include_bess = bess_kwh > 0.0;
  d.pv_kw = pv_kw;
  d.wt_kw = wt_kw;
  d.dg_kw = dg_kw;
  d.bess_kwh = bess_kwh;
  d.converter_kw = converter_kw;
  d.grid_cap_kw = grid_cap_kw;
  return d;
}

std::vector<std::string> design_problems(const Design& d) {
  std::vector<std::string> out;
  const auto check = [&](double v, std::string_view name, bool included) {
    if (!std::isfinite(v) || v < 0.0) {
      out.push_back(fmt::format("{} must be finite and >= 0, got {}", name, v));
    } else if (v > 0.0 && !included) {
      out.push_back(fmt::format("{} is {} but the source is excluded", name, v));
    }
  };
  check(d.pv_kw, "pv_kw", d.include_pv);
  check(d.wt_kw, "wt_kw", d.include_wt);
  check(d.dg_kw, "dg_kw", d.include_dg);
  check(d.bess_kwh, "bess_kwh", d.include_bess);
  check(d.converter_kw, "converter_kw", true);
  check(d.grid_cap_kw, "grid_cap_kw", true);
  return out;
}

void validate_design(const Design& d) {
  const auto problems = design_problems(d);
  if (problems.empty()) return;
  std::string msg = "invalid design:";
  for (const auto& p : problems) msg += " " + p + ";";
  throw InvalidDesign(msg);
}

double PowerFlow::balance_residual() const {
  const double sources = pv_kw + wt_kw + dg_kw + batt_discharge_kw + grid_import_kw;
  const double sinks =
      served_kw + batt_charge_kw + grid_export_kw + conversion_loss_kw + curtailed_kw;
  return sources - sinks;
}

DispatchLimits DispatchLimits::from(const Scenario& s, const Design& d) {
  DispatchLimits l;
  l.converter_kw = d.converter_kw;
  l.converter_efficiency = s.catalog.converter.efficiency;
  l.converter_fixed_loss_kw = s.catalog.converter.fixed_loss_kw;
  l.import_cap_kw = std::min(d.grid_cap_kw, s.tariff.max_import_kw);
  l.export_cap_kw = std::min(d.grid_cap_kw, s.tariff.max_export_kw);
  l.dg_kw = d.include_dg ? d.dg_kw : 0.0;
  l.diesel = s.catalog.diesel;
  l.has_battery = d.include_bess && d.bess_kwh > 0.0;
  l.battery = KineticParams::from(s.catalog.battery);
  return l;
}

namespace {

// One direction of the converter within an hour. The rating limits the
// output side; the fixed loss is paid once the direction carries power.
class ConverterLeg {
 public:
  ConverterLeg(double rating, double efficiency, double fixed_loss)
      : rating_(rating), eff_(efficiency), fixed_(fixed_loss) {}

  double out() const { return out_; }
  double input() const { return out_ > 0.0 ? (out_ + fixed_) / eff_ : 0.0; }
  double loss() const { return input() - out_; }

  // Extra output reachable with `dc_available` more input.
  double max_extra_out(double dc_available) const {
    const double room = std::max(0.0, rating_ - out_);
    const double reachable = out_ > 0.0 ? dc_available * eff_
                                        : converter_transfer(dc_available, eff_, fixed_);
    return std::clamp(reachable, 0.0, room);
  }

  // Commits `extra` more output and returns the extra input it draws.
  double add(double extra) {
    if (extra <= 0.0) return 0.0;
    const double before = input();
    out_ += extra;
    return input() - before;
  }

 private:
  double rating_;
  double eff_;
  double fixed_;
  double out_ = 0.0;
};

}  // namespace

HourResult PriorityDispatch::step(const HourInputs& in, const BatteryState& battery,
                                  const DispatchLimits& lim) const {
  PowerFlow f;
  f.load_kw = in.load_kw;
  f.pv_kw = in.pv_kw;
  f.wt_kw = in.wt_kw;

  ConverterLeg inverter(lim.converter_kw, lim.converter_efficiency, lim.converter_fixed_loss_kw);
  ConverterLeg rectifier(lim.converter_kw, lim.converter_efficiency, lim.converter_fixed_loss_kw);
  constexpr double dt = 1.0;

  double need = in.load_kw;
  double wt_left = in.wt_kw;
  double pv_left = in.pv_kw;

  // Renewables serve the load: wind directly, PV through the inverter.
  const double wt_to_load = std::min(wt_left, need);
  wt_left -= wt_to_load;
  need -= wt_to_load;
  const double pv_to_load = std::min(need, inverter.max_extra_out(pv_left));
  pv_left = std::max(0.0, pv_left - inverter.add(pv_to_load));
  need -= pv_to_load;
  double served = wt_to_load + pv_to_load;

  // Surplus: battery, then export, then curtail.
  const double charge_bound =
      lim.has_battery ? bess_max_charge(battery, dt, lim.battery) : 0.0;
  double charge = std::min(pv_left, charge_bound);
  pv_left -= charge;
  if (wt_left > 0.0 && charge < charge_bound && inverter.out() == 0.0) {
    const double y = std::min(charge_bound - charge, rectifier.max_extra_out(wt_left));
    wt_left = std::max(0.0, wt_left - rectifier.add(y));
    charge += y;
  }
  double exported = std::min(wt_left, lim.export_cap_kw);
  wt_left -= exported;
  if (pv_left > 0.0 && rectifier.out() == 0.0) {
    const double e = std::min(std::max(0.0, lim.export_cap_kw - exported),
                              inverter.max_extra_out(pv_left));
    pv_left = std::max(0.0, pv_left - inverter.add(e));
    exported += e;
  }

  // Deficit: battery, grid, diesel; the remainder is unmet.
  double discharge = 0.0;
  if (need > 0.0 && lim.has_battery && charge == 0.0 && rectifier.out() == 0.0) {
    const double bound = bess_max_discharge(battery, dt, lim.battery);
    const double x = std::min(need, inverter.max_extra_out(bound));
    discharge = std::min(inverter.add(x), bound);
    need -= x;
    served += x;
  }
  const double imported = std::clamp(need, 0.0, lim.import_cap_kw);
  need -= imported;
  served += imported;
  double dg = 0.0;
  if (need > 0.0 && lim.dg_kw > 0.0 && need >= lim.diesel.min_load_ratio * lim.dg_kw) {
    dg = std::min(need, lim.dg_kw);
    need -= dg;
    served += dg;
    f.fuel_l_per_hr = dg_fuel(lim.diesel, lim.dg_kw, dg);
  }

  f.served_kw = served;
  f.unmet_kw = std::max(0.0, need);
  f.dg_kw = dg;
  f.batt_charge_kw = charge;
  f.batt_discharge_kw = discharge;
  f.grid_import_kw = imported;
  f.grid_export_kw = exported;
  f.curtailed_kw = pv_left + wt_left;
  f.conversion_loss_kw = inverter.loss() + rectifier.loss();

  HourResult r{battery, f};
  if (lim.has_battery) {
    r.battery = bess_step(battery, discharge - charge, dt, lim.battery);
  }
  return r;
}

HourResult step_hour(const HourInputs& in, const BatteryState& battery,
                     const DispatchLimits& limits) {
  return PriorityDispatch{}.step(in, battery, limits);
}

std::vector<double> pv_generation(const Scenario& s, double pv_kw) {
  std::vector<double> out(s.irradiance.size(), 0.0);
  if (pv_kw <= 0.0) return out;
  const double std_temp = s.catalog.pv.std_cell_temp_c;
  for (std::size_t h = 0; h < out.size(); ++h) {
    const double temp = s.cell_temp ? (*s.cell_temp)[h] : std_temp;
    out[h] = pv_output(s.catalog.pv, pv_kw, s.irradiance[h], temp) * s.pv_output_multiplier;
  }
  return out;
}

std::vector<double> wt_generation(const Scenario& s, double wt_kw) {
  std::vector<double> out(s.wind_speed.size(), 0.0);
  if (wt_kw <= 0.0) return out;
  const auto& w = s.catalog.wind;
  for (std::size_t h = 0; h < out.size(); ++h) {
    const double u = hub_wind_speed(s.wind_speed[h], s.anemometer_height_m, w.hub_height_m,
                                    w.shear_exponent);
    out[h] = wt_output(w, wt_kw, u) * s.wind_output_multiplier;
  }
  return out;
}

DispatchTrace simulate_year(const Scenario& scenario, const Design& design) {
  return simulate_year(scenario, design, PriorityDispatch{});
}

DispatchTrace simulate_year(const Scenario& s, const Design& design,
                            const DispatchStrategy& strategy) {
  validate_design(design);
  const DispatchLimits limits = DispatchLimits::from(s, design);
  const auto pv = pv_generation(s, design.include_pv ? design.pv_kw : 0.0);
  const auto wt = wt_generation(s, design.include_wt ? design.wt_kw : 0.0);
  const auto& bspec = s.catalog.battery;

  DispatchTrace trace;
  const double q_max = limits.has_battery ? design.bess_kwh : 0.0;
  trace.initial_battery =
      BatteryState::at_soc(q_max, bspec.soc_max, bspec.capacity_ratio, bspec.soc_min, bspec.soc_max);
  BatteryState battery = trace.initial_battery;

  const std::size_t hours = s.load.size();
  trace.flows.reserve(hours);
  trace.soc.reserve(hours);
  TraceTotals& t = trace.totals;
  for (std::size_t h = 0; h < hours; ++h) {
    const HourInputs in{s.load[h], pv[h], wt[h]};
    HourResult r = strategy.step(in, battery, limits);
    battery = r.battery;
    const PowerFlow& f = r.flow;

    t.load_kwh += f.load_kw;
    t.served_kwh += f.served_kw;
    t.unmet_kwh += f.unmet_kw;
    t.pv_kwh += f.pv_kw;
    t.wt_kwh += f.wt_kw;
    t.dg_kwh += f.dg_kw;
    if (f.dg_kw > 0.0) t.dg_hours += 1.0;
    t.fuel_l += f.fuel_l_per_hr;
    t.import_kwh += f.grid_import_kw;
    t.export_kwh += f.grid_export_kw;
    t.charge_kwh += f.batt_charge_kw;
    t.discharge_kwh += f.batt_discharge_kw;
    t.loss_kwh += f.conversion_loss_kw;
    t.curtailed_kwh += f.curtailed_kw;
    t.grid_purchase_usd += f.grid_import_kw * s.tariff.purchase_price[h];
    t.sellback_usd += f.grid_export_kw * s.tariff.sellback_price[h];

    trace.flows.push_back(f);
    trace.soc.push_back(battery.soc());
  }
  t.renewable_kwh = t.pv_kwh + t.wt_kwh;
  trace.final_battery = battery;
  t.stored_change_kwh = battery.stored() - trace.initial_battery.stored();
  return trace;
}

void write_trace_csv(std::ostream& out, const DispatchTrace& trace) {
  out << "hour,load_kw,served_kw,pv_kw,wt_kw,dg_kw,batt_charge_kw,batt_discharge_kw,"
         "grid_import_kw,grid_export_kw,unmet_kw,curtailed_kw,fuel_l_per_hr,"
         "conversion_loss_kw,soc\n";
  for (std::size_t h = 0; h < trace.flows.size(); ++h) {
    const PowerFlow& f = trace.flows[h];
    out << h;
    for (double v : {f.load_kw, f.served_kw, f.pv_kw, f.wt_kw, f.dg_kw, f.batt_charge_kw,
                     f.batt_discharge_kw, f.grid_import_kw, f.grid_export_kw, f.unmet_kw,
                     f.curtailed_kw, f.fuel_l_per_hr, f.conversion_loss_kw, trace.soc[h]}) {
      out << ',' << csv_number(v);
    }
    out << '\n';
  }
}

}  // namespace mgsize
