#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mgsize/metrics.hpp"

namespace mgsize {

// Objective weights in the order npc, reliability, efficiency, co2. Each lies
// strictly between 0 and 1 and they sum to 1.
struct Weights {
  double npc = 0.25;
  double reliability = 0.25;
  double efficiency = 0.25;
  double co2 = 0.25;

  std::array<double, 4> as_array() const { return {npc, reliability, efficiency, co2}; }

  // Throws InvalidWeights.
  void validate() const;

  static Weights equal() { return {}; }
  // Validated weights from explicit values.
  static Weights of(double npc, double reliability, double efficiency, double co2);
  // Parses "0.25,0.25,0.25,0.25". Throws InvalidWeights.
  static Weights parse(std::string_view text);

  friend bool operator==(const Weights&, const Weights&) = default;
};

// Per-objective min and max over a reference pool, natural orientation
// (npc, reliability, efficiency_pct, co2_kg_per_yr).
struct NormalizationBounds {
  std::array<double, 4> min{};
  std::array<double, 4> max{};

  // Throws EmptyInput for an empty pool.
  static NormalizationBounds from_pool(std::span<const MetricVector> pool);
  // Throws DegenerateBounds when a min exceeds its max or a bound is not finite.
  void validate() const;
};

// w1 n(npc) + w2 (1 - n(R)) + w3 (1 - n(eff)) + w4 n(co2), n(x) = (x - min) / (max - min).
// Lower is better. A metric whose bounds coincide contributes 0.
double scalarize(const MetricVector& m, const Weights& w, const NormalizationBounds& bounds);

// Scores against bounds taken from the pool itself.
std::vector<double> scalarize_pool(std::span<const MetricVector> pool, const Weights& w);

// Index of the lowest score; the first one wins ties. Throws EmptyInput.
std::size_t select_best(std::span<const MetricVector> pool, const Weights& w);

// 1-based position of each entry when sorted by score (stable on ties).
std::vector<std::size_t> score_ranks(std::span<const MetricVector> pool, const Weights& w);

}  // namespace mgsize
