#pragma once

#include <array>
#include <functional>
#include <limits>
#include <vector>

#include "mgsize/optimize/grid_search.hpp"
#include "mgsize/optimize/scalarize.hpp"

namespace mgsize {

struct StepSchedule {
  std::array<double, 5> initial_step = {25.0, 25.0, 60.0, 50.0, 25.0};  // by Dimension
  std::array<double, 5> lower = {0.0, 0.0, 0.0, 0.0, 0.0};
  std::array<double, 5> upper = {
      std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
      std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
      std::numeric_limits<double>::infinity()};
  double shrink = 0.5;
  double tolerance = 1.0;  // stop once every step is below this
  int max_iterations = 200;
};

// Lower is better.
using DesignObjective = std::function<double(const Design&)>;

struct RefineResult {
  Design design;
  double score = 0.0;
  double start_score = 0.0;
  int iterations = 0;  // completed coordinate cycles
  int evaluations = 0;
  bool converged = false;
  std::array<double, 5> final_step{};
  std::vector<double> score_history;  // incumbent after each cycle
};

// Cyclic coordinate search. Each cycle tries +step then -step on every
// dimension in turn and moves on the first strict improvement; a cycle with
// no move halves the steps.
RefineResult refine(const Design& start, const DesignObjective& objective,
                    const StepSchedule& schedule = {});

// Objective that scalarizes the scenario's metrics against fixed bounds.
DesignObjective scalarized_objective(const Evaluator& evaluator, const Weights& weights,
                                     const NormalizationBounds& bounds);

struct RefinedDesign {
  EvaluatedDesign result;
  RefineResult search;
};

RefinedDesign refine(const Design& start, const Scenario& scenario, const Weights& weights,
                     const NormalizationBounds& bounds, const StepSchedule& schedule = {});

}  // namespace mgsize
