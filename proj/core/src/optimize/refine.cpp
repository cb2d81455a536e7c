#include "mgsize/optimize/refine.hpp"

#include <algorithm>

namespace mgsize {

RefineResult refine(const Design& start, const DesignObjective& objective,
                    const StepSchedule& schedule) {
  RefineResult r;
  r.design = start;
  r.score = objective(start);
  r.start_score = r.score;
  r.evaluations = 1;
  std::array<double, 5> step = schedule.initial_step;

  auto all_below = [&] {
    return std::all_of(step.begin(), step.end(), [&](double s) { return s < schedule.tolerance; });
  };

  while (r.iterations < schedule.max_iterations && !all_below()) {
    ++r.iterations;
    bool moved = false;
    for (std::size_t i = 0; i < kDimensions.size(); ++i) {
      if (!(step[i] > 0.0)) continue;
      const Dimension dim = kDimensions[i];
      const double here = capacity(r.design, dim);
      for (double sign : {1.0, -1.0}) {
        const double next =
            std::clamp(here + sign * step[i], schedule.lower[i], schedule.upper[i]);
        if (next == here) continue;
        Design candidate = r.design;
        set_capacity(candidate, dim, next);
        const double score = objective(candidate);
        ++r.evaluations;
        if (score < r.score) {
          r.design = candidate;
          r.score = score;
          moved = true;
          break;
        }
      }
    }
    if (!moved) {
      for (double& s : step) s *= schedule.shrink;
    }
    r.score_history.push_back(r.score);
  }
  r.converged = all_below();
  r.final_step = step;
  return r;
}

DesignObjective scalarized_objective(const Evaluator& evaluator, const Weights& weights,
                                     const NormalizationBounds& bounds) {
  weights.validate();
  bounds.validate();
  return [evaluator, weights, bounds](const Design& d) {
    return scalarize(evaluator(d), weights, bounds);
  };
}

RefinedDesign refine(const Design& start, const Scenario& scenario, const Weights& weights,
                     const NormalizationBounds& bounds, const StepSchedule& schedule) {
  const Evaluator eval = scenario_evaluator(scenario);
  RefinedDesign out;
  out.search = refine(start, scalarized_objective(eval, weights, bounds), schedule);
  out.result.design = out.search.design;
  out.result.metrics = eval(out.search.design);
  check_feasibility(out.result, std::nullopt);
  return out;
}

}  // namespace mgsize
