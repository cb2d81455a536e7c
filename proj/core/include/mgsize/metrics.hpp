#pragma once

#include <array>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mgsize/dispatch.hpp"
#include "mgsize/scenario.hpp"

namespace mgsize {

// Objectives plus auxiliary economics for one design.
//
// co2_kg_per_yr is the emissions objective (lower is better): net grid
// purchases times the grid factor plus diesel combustion, so a design that
// exports more than it imports can go negative. co2_delta_kg_per_yr is the
// avoided-emissions account (renewable generation credited at the grid factor
// minus diesel and grid emissions); positive means net avoidance.
struct MetricVector {
  double npc_usd = 0.0;
  double reliability = 1.0;
  double efficiency_pct = 0.0;
  double co2_kg_per_yr = 0.0;
  double co2_delta_kg_per_yr = 0.0;
  double lcoe_usd_per_kwh = 0.0;
  double capital_usd = 0.0;
  double om_usd_per_yr = 0.0;  // O&M + fuel + grid purchases - sellback, base year
  double lpsp = 0.0;
  double unmet_kwh = 0.0;
  double served_kwh = 0.0;

  friend bool operator==(const MetricVector&, const MetricVector&) = default;
};

// Field names and values in serialization order.
std::span<const std::string_view> metric_field_names();
std::vector<double> metric_field_values(const MetricVector& m);
MetricVector metric_from_values(std::span<const double> values);

struct CostBreakdown {
  double capital_usd = 0.0;            // year 0
  double replacement_pv_usd = 0.0;     // present value of all replacements
  double salvage_pv_usd = 0.0;         // present value of the year-T credit
  double om_usd_per_yr = 0.0;          // base-year fixed and hourly O&M
  double fuel_usd_per_yr = 0.0;
  double grid_purchase_usd_per_yr = 0.0;
  double sellback_usd_per_yr = 0.0;
  double recurring_pv_usd = 0.0;       // present value of yearly O&M, fuel and grid
};

struct NpcResult {
  double npc_usd = 0.0;
  CostBreakdown breakdown;
  std::vector<double> yearly_cash_usd;  // nominal net cost for years 0..T
};

// Net present cost: sum over t = 0..T of (C_tot(t) - S(t)) / (1 + r)^t.
// Year 0 carries capital. Years 1..T carry O&M, fuel and grid purchases net
// of sellback, escalated by inflation; a component is replaced in each year
// that is a multiple of its lifetime and before T; at T the remaining-life
// fraction of the last unit's replacement cost is credited as salvage.
NpcResult npc(const DispatchTrace& trace, const Design& design, const Scenario& scenario);

// Discounted sum of a nominal cash-flow vector indexed by year.
double present_value(std::span<const double> yearly_cash, double discount_rate);

// r (1 + r)^T / ((1 + r)^T - 1); 1 / T when r = 0.
double capital_recovery_factor(double rate, int years);

// npc * CRF(r, T) / served. Throws ZeroEnergyServed when served <= 0.
double lcoe(double npc_usd, double served_kwh_per_yr, double rate, int years);

// Unmet over total demand, as a fraction; 0 when demand is 0.
double lpsp(const DispatchTrace& trace);

// exp(-lambda * lpsp).
double reliability(double lpsp, double lambda);

// 100 * useful / (input - losses) over the year.
//   NetOfLosses: input counts every source including storage discharge;
//     losses count conversion, curtailment and energy sent into storage, so
//     the denominator is the energy delivered to load plus export.
//   GrossInput: useful over generation plus imports plus net storage draw.
// Throws ZeroInput when the denominator is 0.
double efficiency(const DispatchTrace& trace, EfficiencyMode mode = EfficiencyMode::NetOfLosses);

// Avoided emissions for operating year `year`:
//   sum_{PV,WT} E_i (1 - d_i)^year EF_grid - (fuel * EF_dg + import * EF_grid).
double co2_delta(const DispatchTrace& trace, const Scenario& scenario, int year = 1);

// Emissions objective: (import - export) * EF_grid + fuel * EF_dg.
double co2_emissions(const DispatchTrace& trace, const Scenario& scenario);

struct Evaluation {
  DispatchTrace trace;
  NpcResult cost;
  MetricVector metrics;
};

// Simulates the year and composes every metric. Undefined ratios (no energy
// served, no energy delivered) are reported as lcoe = inf and efficiency = 0.
Evaluation evaluate_detailed(const Design& design, const Scenario& scenario);
MetricVector evaluate(const Design& design, const Scenario& scenario);

}  // namespace mgsize
