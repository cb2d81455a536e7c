#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mgsize/metrics.hpp"
#include "mgsize/optimize/search_space.hpp"

namespace mgsize {

struct EvaluatedDesign {
  Design design;
  MetricVector metrics;
  bool feasible = true;
  std::vector<std::string> violation_notes;
  std::size_t lattice_index = 0;
};

// Maps a design to its metrics. Must be safe to call concurrently.
using Evaluator = std::function<MetricVector(const Design&)>;

// Evaluator bound to a scenario; the scenario is captured by reference.
Evaluator scenario_evaluator(const Scenario& scenario);

struct GridSearchOptions {
  // Upper limit on capital plus base-year operating cost.
  std::optional<double> budget_usd;
  unsigned jobs = 1;
  // Keep infeasible designs (flagged) in the result.
  bool keep_infeasible = false;
};

// Fills in feasibility for an evaluated design.
void check_feasibility(EvaluatedDesign& e, const std::optional<double>& budget_usd);

// Evaluates every lattice point. The result is sorted by npc ascending with
// ties in lattice order, and does not depend on `jobs`.
// Throws EmptySearchSpace.
std::vector<EvaluatedDesign> grid_search(const Evaluator& evaluator, const SearchSpace& space,
                                         const GridSearchOptions& options = {});
std::vector<EvaluatedDesign> grid_search(const Scenario& scenario, const SearchSpace& space,
                                         const GridSearchOptions& options = {});

// Runs fn(i) for i in [0, n) on up to `jobs` threads.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

std::vector<MetricVector> metrics_of(const std::vector<EvaluatedDesign>& designs);

}  // namespace mgsize
