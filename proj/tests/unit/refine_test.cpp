#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mgsize/optimize/refine.hpp"

using namespace mgsize;
using mgsize::testing::bundled;
using mgsize::testing::design_a5;

TEST(Refine, MinimumOfConvexBowlIsFound) {
  const DesignObjective bowl = [](const Design& d) {
    return std::pow(d.pv_kw - 137.0, 2) + std::pow(d.bess_kwh - 420.0, 2) +
           std::pow(d.converter_kw - 90.0, 2);
  };
  const auto r = refine(Design::with_capacities(0, 0, 0, 0, 300, 500), bowl);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.iterations, 200);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_LT(r.final_step[i], 1.0);
  // Within the last step size of the optimum on every moved axis.
  EXPECT_NEAR(r.design.pv_kw, 137.0, 1.0);
  EXPECT_NEAR(r.design.bess_kwh, 420.0, 1.0);
  EXPECT_NEAR(r.design.converter_kw, 90.0, 1.0);
  EXPECT_EQ(r.design.wt_kw, 0.0);
}

TEST(Refine, OneDimensionalObjective) {
  const DesignObjective f = [](const Design& d) { return std::abs(d.wt_kw - 61.3); };
  const auto r = refine(Design{}, f);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.design.wt_kw, 61.3, r.final_step[1] * 2);
  EXPECT_TRUE(r.design.include_wt);
}

TEST(Refine, ScoreHistoryNeverRises) {
  const DesignObjective f = [](const Design& d) {
    return std::sin(d.pv_kw / 40.0) + 0.001 * d.pv_kw + std::cos(d.bess_kwh / 90.0);
  };
  const auto r = refine(design_a5(), f);
  double last = r.start_score;
  for (double s : r.score_history) {
    EXPECT_LE(s, last);
    last = s;
  }
  EXPECT_EQ(r.score, last);
  EXPECT_EQ(f(r.design), r.score);
}

TEST(Refine, StationaryStartStaysPut) {
  const DesignObjective flat = [](const Design&) { return 3.0; };
  const auto r = refine(design_a5(), flat);
  EXPECT_EQ(r.design, design_a5());
  EXPECT_EQ(r.score, 3.0);
  EXPECT_TRUE(r.converged);
}

TEST(Refine, BoundsAreRespected) {
  StepSchedule sched;
  sched.upper = {100, 100, 100, 100, 100};
  const DesignObjective more_is_better = [](const Design& d) {
    return -(d.pv_kw + d.wt_kw + d.bess_kwh + d.converter_kw);
  };
  const auto r = refine(Design{}, more_is_better, sched);
  EXPECT_EQ(r.design.pv_kw, 100.0);
  EXPECT_EQ(r.design.converter_kw, 100.0);
}

TEST(Refine, IterationCapStopsSearch) {
  StepSchedule sched;
  sched.max_iterations = 3;
  const DesignObjective f = [](const Design& d) { return -d.pv_kw; };
  const auto r = refine(Design{}, f, sched);
  EXPECT_EQ(r.iterations, 3);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.design.pv_kw, 75.0);
}

TEST(Refine, ScenarioObjectiveImprovesOnStart) {
  const std::vector<MetricVector> pool = {evaluate(design_a5(), bundled()),
                                          evaluate(mgsize::testing::grid_only(), bundled()),
                                          evaluate(Design::with_capacities(600, 250, 60, 1000,
                                                                           400, 500),
                                                   bundled())};
  StepSchedule sched;
  sched.max_iterations = 4;
  const auto r = refine(design_a5(), bundled(), Weights::equal(),
                        NormalizationBounds::from_pool(pool), sched);
  EXPECT_LE(r.search.score, r.search.start_score);
  EXPECT_EQ(r.result.metrics, evaluate(r.search.design, bundled()));
}
