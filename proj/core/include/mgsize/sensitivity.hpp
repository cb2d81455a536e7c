#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "mgsize/metrics.hpp"

namespace mgsize {

enum class PerturbationTarget { Load, PVOutput, WindOutput };
std::string_view to_string(PerturbationTarget t);

struct Perturbation {
  PerturbationTarget target = PerturbationTarget::Load;
  double delta = 0.0;  // signed fraction, |delta| < 1
};

// The scenario with the target scaled uniformly by (1 + delta).
// Throws InvalidPerturbation.
Scenario apply_perturbation(const Scenario& scenario, const Perturbation& p);

// Percent deviations from the baseline. Reliability is reported in
// percentage points, 100 (R - R_base), since the baseline is often exactly 1.
struct DeviationRow {
  Perturbation perturbation;
  double npc_pct = 0.0;
  double reliability_pct = 0.0;
  double efficiency_pct = 0.0;
  double co2_pct = 0.0;
  MetricVector metrics;
};

// 100 (m - base) / |base|; 0 when both are 0.
double percent_deviation(double value, double baseline);

DeviationRow perturb_and_evaluate(const Scenario& scenario, const Design& design,
                                  const Perturbation& p);
// Reuses an already computed baseline.
DeviationRow perturb_and_evaluate(const Scenario& scenario, const Design& design,
                                  const Perturbation& p, const MetricVector& baseline);

// Load, PV output and wind output, each at -5, +5, -10 and +10 %.
std::vector<Perturbation> standard_perturbations();

struct DeviationReport {
  MetricVector baseline;
  std::vector<DeviationRow> rows;
};

DeviationReport run_sensitivity(const Scenario& scenario, const Design& design,
                                std::span<const Perturbation> perturbations, unsigned jobs = 1);

// parameter,uncertainty_pct,npc_pct,reliability_pct,efficiency_pct,co2_pct
void write_deviation_csv(std::ostream& out, const DeviationReport& report);
void write_deviation_csv(const std::filesystem::path& path, const DeviationReport& report);

enum class SweepParameter { PurchasePrice, SellbackPrice, BatteryCapCost, PVCapCost };
std::string_view to_string(SweepParameter p);
// Throws ConfigError for unknown names.
SweepParameter sweep_parameter_from_string(std::string_view name);
inline constexpr std::array<SweepParameter, 4> kSweepParameters = {
    SweepParameter::PurchasePrice, SweepParameter::SellbackPrice, SweepParameter::BatteryCapCost,
    SweepParameter::PVCapCost};

// The scenario with one economic input scaled. Capital-cost multipliers
// scale replacement cost as well. Throws InvalidPerturbation for m <= 0.
Scenario apply_sweep(const Scenario& scenario, SweepParameter p, double multiplier);

struct SweepPoint {
  double multiplier = 1.0;
  double lcoe_usd_per_kwh = 0.0;
};

std::vector<SweepPoint> lcoe_sweep(const Scenario& scenario, const Design& design,
                                   SweepParameter parameter, std::span<const double> multipliers,
                                   unsigned jobs = 1);

// 0.8, 0.9, 1.0, 1.1, 1.2.
std::vector<double> default_sweep_multipliers();

// multiplier,lcoe_usd_per_kwh
void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> curve);
void write_sweep_csv(const std::filesystem::path& path, std::span<const SweepPoint> curve);

}  // namespace mgsize
