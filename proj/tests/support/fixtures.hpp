#pragma once

#include <vector>

#include "mgsize/dispatch.hpp"
#include "mgsize/metrics.hpp"
#include "mgsize/scenario.hpp"

namespace mgsize::testing {

// Built once per process; the synthesis is deterministic.
inline const Scenario& bundled() {
  static const Scenario s = bundled_scenario();
  return s;
}

inline Design design_a5() { return Design::with_capacities(418, 123, 0, 704, 255, 500); }
inline Design grid_only() { return Design::with_capacities(0, 0, 0, 0, 0, 500); }

// Published objective values for five candidate designs (A1..A5), as
// {npc, reliability, efficiency_pct, co2}.
inline MetricVector published_row(double npc, double r, double eff, double co2) {
  MetricVector m;
  m.npc_usd = npc;
  m.reliability = r;
  m.efficiency_pct = eff;
  m.co2_kg_per_yr = co2;
  return m;
}

inline std::vector<MetricVector> published_rows() {
  return {published_row(4.47e6, 0.9994, 92.5, 315909),
          published_row(5.53e6, 1.0, 79.744, 31041),
          published_row(5.81e6, 0.9994, 96.997, 361807),
          published_row(6.06e6, 0.9993, 79.956, -382269),
          published_row(4.83e6, 1.0, 91.9924, 302747)};
}

}  // namespace mgsize::testing
