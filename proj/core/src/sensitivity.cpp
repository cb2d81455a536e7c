#include "mgsize/sensitivity.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <fmt/format.h>

#include "mgsize/csv.hpp"
#include "mgsize/error.hpp"
#include "mgsize/optimize/grid_search.hpp"

namespace mgsize {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

void check_multiplier(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw InvalidPerturbation(fmt::format("sweep multiplier must be > 0, got {}", m));
  }
}

CostData scaled_capital(CostData c, double m) {
  c.capital *= m;
  c.replacement *= m;
  return c;
}

}  // namespace

std::string_view to_string(PerturbationTarget t) {
  switch (t) {
    case PerturbationTarget::Load: return "load";
    case PerturbationTarget::PVOutput: return "pv_output";
    case PerturbationTarget::WindOutput: return "wind_output";
  }
  return "?";
}

Scenario apply_perturbation(const Scenario& scenario, const Perturbation& p) {
  if (!(std::abs(p.delta) < 1.0)) {
    throw InvalidPerturbation(fmt::format("perturbation {} is outside (-1, 1)", p.delta));
  }
  Scenario s = scenario;
  const double m = 1.0 + p.delta;
  switch (p.target) {
    case PerturbationTarget::Load: s.load = s.load.scaled(m); break;
    case PerturbationTarget::PVOutput: s.pv_output_multiplier *= m; break;
    case PerturbationTarget::WindOutput: s.wind_output_multiplier *= m; break;
  }
  return s;
}

double percent_deviation(double value, double baseline) {
  if (value == baseline) return 0.0;
  return 100.0 * (value - baseline) / std::abs(baseline);
}

DeviationRow perturb_and_evaluate(const Scenario& scenario, const Design& design,
                                  const Perturbation& p, const MetricVector& baseline) {
  DeviationRow row;
  row.perturbation = p;
  row.metrics = p.delta == 0.0 ? evaluate(design, scenario)
                               : evaluate(design, apply_perturbation(scenario, p));
  row.npc_pct = percent_deviation(row.metrics.npc_usd, baseline.npc_usd);
  row.reliability_pct = 100.0 * (row.metrics.reliability - baseline.reliability);
  row.efficiency_pct = percent_deviation(row.metrics.efficiency_pct, baseline.efficiency_pct);
  row.co2_pct = percent_deviation(row.metrics.co2_kg_per_yr, baseline.co2_kg_per_yr);
  return row;
}

DeviationRow perturb_and_evaluate(const Scenario& scenario, const Design& design,
                                  const Perturbation& p) {
  return perturb_and_evaluate(scenario, design, p, evaluate(design, scenario));
}

std::vector<Perturbation> standard_perturbations() {
  std::vector<Perturbation> out;
  for (auto t : {PerturbationTarget::Load, PerturbationTarget::PVOutput,
                 PerturbationTarget::WindOutput}) {
    for (double d : {-0.05, 0.05, -0.10, 0.10}) out.push_back({t, d});
  }
  return out;
}

DeviationReport run_sensitivity(const Scenario& scenario, const Design& design,
                                std::span<const Perturbation> perturbations, unsigned jobs) {
  DeviationReport report;
  report.baseline = evaluate(design, scenario);
  report.rows.resize(perturbations.size());
  parallel_for(perturbations.size(), jobs, [&](std::size_t i) {
    report.rows[i] = perturb_and_evaluate(scenario, design, perturbations[i], report.baseline);
  });
  return report;
}

void write_deviation_csv(std::ostream& out, const DeviationReport& report) {
  out << "parameter,uncertainty_pct,npc_pct,reliability_pct,efficiency_pct,co2_pct\n";
  for (const auto& r : report.rows) {
    out << to_string(r.perturbation.target) << ',' << csv_number(100.0 * r.perturbation.delta)
        << ',' << csv_number(r.npc_pct) << ',' << csv_number(r.reliability_pct) << ','
        << csv_number(r.efficiency_pct) << ',' << csv_number(r.co2_pct) << '\n';
  }
}

void write_deviation_csv(const std::filesystem::path& path, const DeviationReport& report) {
  auto out = open_for_write(path);
  write_deviation_csv(out, report);
}

std::string_view to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::PurchasePrice: return "purchase_price";
    case SweepParameter::SellbackPrice: return "sellback_price";
    case SweepParameter::BatteryCapCost: return "battery_capital_cost";
    case SweepParameter::PVCapCost: return "pv_capital_cost";
  }
  return "?";
}

SweepParameter sweep_parameter_from_string(std::string_view name) {
  for (auto p : kSweepParameters) {
    if (to_string(p) == name) return p;
  }
  throw ConfigError(fmt::format(
      "unknown sweep parameter '{}' (expected purchase_price, sellback_price, "
      "battery_capital_cost or pv_capital_cost)",
      name));
}

Scenario apply_sweep(const Scenario& scenario, SweepParameter p, double multiplier) {
  check_multiplier(multiplier);
  Scenario s = scenario;
  switch (p) {
    case SweepParameter::PurchasePrice:
      s.tariff.purchase_price = s.tariff.purchase_price.scaled(multiplier);
      break;
    case SweepParameter::SellbackPrice:
      s.tariff.sellback_price = s.tariff.sellback_price.scaled(multiplier);
      break;
    case SweepParameter::BatteryCapCost:
      s.catalog.battery.cost = scaled_capital(s.catalog.battery.cost, multiplier);
      break;
    case SweepParameter::PVCapCost:
      s.catalog.pv.cost = scaled_capital(s.catalog.pv.cost, multiplier);
      break;
  }
  return s;
}

std::vector<SweepPoint> lcoe_sweep(const Scenario& scenario, const Design& design,
                                   SweepParameter parameter, std::span<const double> multipliers,
                                   unsigned jobs) {
  for (double m : multipliers) check_multiplier(m);
  std::vector<SweepPoint> curve(multipliers.size());
  parallel_for(multipliers.size(), jobs, [&](std::size_t i) {
    const double m = multipliers[i];
    curve[i].multiplier = m;
    curve[i].lcoe_usd_per_kwh =
        m == 1.0 ? evaluate(design, scenario).lcoe_usd_per_kwh
                 : evaluate(design, apply_sweep(scenario, parameter, m)).lcoe_usd_per_kwh;
  });
  return curve;
}

std::vector<double> default_sweep_multipliers() { return {0.8, 0.9, 1.0, 1.1, 1.2}; }

void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> curve) {
  out << "multiplier,lcoe_usd_per_kwh\n";
  for (const auto& p : curve) {
    out << csv_number(p.multiplier) << ',' << csv_number(p.lcoe_usd_per_kwh) << '\n';
  }
}

void write_sweep_csv(const std::filesystem::path& path, std::span<const SweepPoint> curve) {
  auto out = open_for_write(path);
  write_sweep_csv(out, curve);
}

}  // namespace mgsize
