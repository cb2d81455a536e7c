#include "mgsize/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "mgsize/error.hpp"

namespace mgsize {

namespace {

constexpr std::array<std::string_view, 11> kMetricFields = {
    "npc_usd",         "reliability",      "efficiency_pct", "co2_kg_per_yr",
    "co2_delta_kg_per_yr", "lcoe_usd_per_kwh", "capital_usd",    "om_usd_per_yr",
    "lpsp",            "unmet_kwh",        "served_kwh"};

struct Installed {
  double size;
  CostData cost;
};

}  // namespace

std::span<const std::string_view> metric_field_names() { return kMetricFields; }

std::vector<double> metric_field_values(const MetricVector& m) {
  return {m.npc_usd,          m.reliability, m.efficiency_pct, m.co2_kg_per_yr,
          m.co2_delta_kg_per_yr, m.lcoe_usd_per_kwh, m.capital_usd, m.om_usd_per_yr,
          m.lpsp,             m.unmet_kwh,   m.served_kwh};
}

MetricVector metric_from_values(std::span<const double> v) {
  if (v.size() != kMetricFields.size()) {
    throw Error(fmt::format("expected {} metric values, got {}", kMetricFields.size(), v.size()));
  }
  return MetricVector{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[10]};
}

double present_value(std::span<const double> yearly_cash, double discount_rate) {
  double pv = 0.0;
  double factor = 1.0;
  for (double c : yearly_cash) {
    pv += c / factor;
    factor *= 1.0 + discount_rate;
  }
  return pv;
}

NpcResult npc(const DispatchTrace& trace, const Design& d, const Scenario& s) {
  const auto& cat = s.catalog;
  const auto& econ = s.economics;
  const int years = econ.project_years;

  // Diesel O&M is charged per operating hour per rated kW; it is handled
  // with the recurring costs rather than the fixed per-unit rate.
  std::vector<Installed> parts;
  if (d.include_pv && d.pv_kw > 0.0) parts.push_back({d.pv_kw, cat.pv.cost});
  if (d.include_wt && d.wt_kw > 0.0) parts.push_back({d.wt_kw, cat.wind.cost});
  if (d.include_dg && d.dg_kw > 0.0) parts.push_back({d.dg_kw, cat.diesel.cost});
  if (d.include_bess && d.bess_kwh > 0.0) parts.push_back({d.bess_kwh, cat.battery.cost});
  if (d.converter_kw > 0.0) parts.push_back({d.converter_kw, cat.converter.cost});

  NpcResult r;
  CostBreakdown& b = r.breakdown;
  for (const auto& p : parts) b.capital_usd += p.size * p.cost.capital;
  b.om_usd_per_yr = (d.include_pv ? d.pv_kw * cat.pv.cost.om : 0.0) +
                    (d.include_wt ? d.wt_kw * cat.wind.cost.om : 0.0) +
                    (d.include_bess ? d.bess_kwh * cat.battery.cost.om : 0.0) +
                    d.converter_kw * cat.converter.cost.om +
                    (d.include_dg ? d.dg_kw * cat.diesel.cost.om * trace.totals.dg_hours : 0.0);
  b.fuel_usd_per_yr = trace.totals.fuel_l * econ.fuel_price_per_l;
  b.grid_purchase_usd_per_yr = trace.totals.grid_purchase_usd;
  b.sellback_usd_per_yr = trace.totals.sellback_usd;
  const double recurring = b.om_usd_per_yr + b.fuel_usd_per_yr + b.grid_purchase_usd_per_yr -
                           b.sellback_usd_per_yr;

  std::vector<double> replacement(static_cast<std::size_t>(years) + 1, 0.0);
  double salvage = 0.0;
  for (const auto& p : parts) {
    const int life = p.cost.lifetime_years;
    for (int t = life; t < years; t += life) {
      replacement[static_cast<std::size_t>(t)] += p.size * p.cost.replacement;
    }
    const int last_install = ((years - 1) / life) * life;
    const int remaining = life - (years - last_install);
    salvage += p.size * p.cost.replacement * static_cast<double>(remaining) / life;
  }

  r.yearly_cash_usd.assign(static_cast<std::size_t>(years) + 1, 0.0);
  r.yearly_cash_usd[0] = b.capital_usd;
  const double disc = 1.0 + econ.discount_rate;
  double escalation = 1.0;
  double discount = 1.0;
  for (int t = 1; t <= years; ++t) {
    escalation *= 1.0 + econ.inflation_rate;
    discount *= disc;
    const auto i = static_cast<std::size_t>(t);
    double cash = (recurring + replacement[i]) * escalation;
    b.recurring_pv_usd += recurring * escalation / discount;
    b.replacement_pv_usd += replacement[i] * escalation / discount;
    if (t == years) {
      cash -= salvage * escalation;
      b.salvage_pv_usd = salvage * escalation / discount;
    }
    r.yearly_cash_usd[i] = cash;
  }
  r.npc_usd = present_value(r.yearly_cash_usd, econ.discount_rate);
  return r;
}

double capital_recovery_factor(double rate, int years) {
  if (years < 1) throw Error("capital recovery factor needs years >= 1");
  if (rate == 0.0) return 1.0 / years;
  const double g = std::pow(1.0 + rate, years);
  return rate * g / (g - 1.0);
}

double lcoe(double npc_usd, double served_kwh_per_yr, double rate, int years) {
  if (!(served_kwh_per_yr > 0.0)) {
    throw ZeroEnergyServed("levelized cost is undefined with no energy served");
  }
  return npc_usd * capital_recovery_factor(rate, years) / served_kwh_per_yr;
}

double lpsp(const DispatchTrace& trace) {
  if (!(trace.totals.load_kwh > 0.0)) return 0.0;
  return trace.totals.unmet_kwh / trace.totals.load_kwh;
}

double reliability(double lpsp_fraction, double lambda) {
  return std::exp(-lambda * lpsp_fraction);
}

double efficiency(const DispatchTrace& trace, EfficiencyMode mode) {
  const TraceTotals& t = trace.totals;
  double denominator = 0.0;
  if (mode == EfficiencyMode::NetOfLosses) {
    const double input = t.pv_kwh + t.wt_kwh + t.dg_kwh + t.import_kwh + t.discharge_kwh;
    const double losses = t.loss_kwh + t.curtailed_kwh + t.charge_kwh;
    denominator = input - losses;
  } else {
    denominator = t.pv_kwh + t.wt_kwh + t.dg_kwh + t.import_kwh +
                  std::max(0.0, t.discharge_kwh - t.charge_kwh);
  }
  if (!(denominator > 0.0)) throw ZeroInput("efficiency is undefined with no delivered energy");
  return std::min(100.0, 100.0 * t.served_kwh / denominator);
}

double co2_delta(const DispatchTrace& trace, const Scenario& s, int year) {
  const TraceTotals& t = trace.totals;
  const double ef = s.tariff.emission_factor_kg_per_kwh;
  const double pv = t.pv_kwh * std::pow(1.0 - s.catalog.pv.annual_degradation, year);
  const double wt = t.wt_kwh * std::pow(1.0 - s.catalog.wind.annual_degradation, year);
  const double avoided = (pv + wt) * ef;
  const double emitted = t.fuel_l * s.economics.diesel_emission_kg_per_l + t.import_kwh * ef;
  return avoided - emitted;
}

double co2_emissions(const DispatchTrace& trace, const Scenario& s) {
  const TraceTotals& t = trace.totals;
  return (t.import_kwh - t.export_kwh) * s.tariff.emission_factor_kg_per_kwh +
         t.fuel_l * s.economics.diesel_emission_kg_per_l;
}

Evaluation evaluate_detailed(const Design& design, const Scenario& scenario) {
  Evaluation e;
  e.trace = simulate_year(scenario, design);
  e.cost = npc(e.trace, design, scenario);
  const TraceTotals& t = e.trace.totals;
  const CostBreakdown& b = e.cost.breakdown;

  MetricVector& m = e.metrics;
  m.npc_usd = e.cost.npc_usd;
  m.lpsp = lpsp(e.trace);
  m.reliability = reliability(m.lpsp, scenario.reliability_lambda);
  try {
    m.efficiency_pct = efficiency(e.trace, scenario.efficiency_mode);
  } catch (const ZeroInput&) {
    m.efficiency_pct = 0.0;
  }
  m.co2_kg_per_yr = co2_emissions(e.trace, scenario);
  m.co2_delta_kg_per_yr = co2_delta(e.trace, scenario, 1);
  m.lcoe_usd_per_kwh = t.served_kwh > 0.0
                           ? lcoe(m.npc_usd, t.served_kwh,
                                  scenario.economics.real_discount_rate(),
                                  scenario.economics.project_years)
                           : std::numeric_limits<double>::infinity();
  m.capital_usd = b.capital_usd;
  m.om_usd_per_yr =
      b.om_usd_per_yr + b.fuel_usd_per_yr + b.grid_purchase_usd_per_yr - b.sellback_usd_per_yr;
  m.unmet_kwh = t.unmet_kwh;
  m.served_kwh = t.served_kwh;
  return e;
}

MetricVector evaluate(const Design& design, const Scenario& scenario) {
  return evaluate_detailed(design, scenario).metrics;
}

}  // namespace mgsize
