#include <algorithm>
#include <atomic>
#include <set>

#include <gtest/gtest.h>

#include "mgsize/error.hpp"
#include "mgsize/optimize/pareto.hpp"
#include "mgsize/optimize/policy_gradient.hpp"

using namespace mgsize;

namespace {

SearchSpace two_action_space() {
  SearchSpace s;
  for (Dimension d : kDimensions) s.range(d) = Range::single(0.0);
  s.range(Dimension::PV) = Range{0, 100, 100};
  return s;
}

SearchSpace small_space() {
  SearchSpace s;
  s.range(Dimension::PV) = Range{0, 300, 50};
  s.range(Dimension::WT) = Range{0, 100, 50};
  s.range(Dimension::DG) = Range::single(0);
  s.range(Dimension::BESS) = Range{0, 400, 100};
  s.range(Dimension::Converter) = Range{100, 300, 100};
  return s;
}

// Design A (no PV) is better in every objective.
MetricVector two_action_metrics(const Design& d) {
  MetricVector m;
  const bool a = d.pv_kw == 0.0;
  m.npc_usd = a ? 1000.0 : 1500.0;
  m.reliability = a ? 1.0 : 0.99;
  m.efficiency_pct = a ? 95.0 : 90.0;
  m.co2_kg_per_yr = a ? 100.0 : 200.0;
  return m;
}

// Trade-offs between size and the other objectives.
MetricVector small_metrics(const Design& d) {
  MetricVector m;
  m.npc_usd = 1e6 + 1300 * d.pv_kw + 2300 * d.wt_kw + 700 * d.bess_kwh + 300 * d.converter_kw;
  m.reliability = 1.0 - 0.01 / (1.0 + 0.01 * d.bess_kwh + 0.001 * d.converter_kw);
  m.efficiency_pct = 95.0 - 0.01 * d.pv_kw + 0.002 * d.bess_kwh;
  m.co2_kg_per_yr = 9e5 - 1000 * d.pv_kw - 1500 * d.wt_kw;
  return m;
}

}  // namespace

TEST(PolicyGradient, LearnsDominantActionForEverySeed) {
  PolicyGradientConfig cfg;
  cfg.max_episodes = 500;
  cfg.final_sweep = false;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto r = policy_gradient_search(two_action_metrics, two_action_space(), cfg, seed);
    EXPECT_GE(r.policy.probabilities(0)[0], 0.9) << "seed " << seed;
  }
}

TEST(PolicyGradient, ZeroLearningRateLeavesPolicyUniform) {
  PolicyGradientConfig cfg;
  cfg.learning_rate = 0.0;
  cfg.max_episodes = 200;
  const auto r = policy_gradient_search(small_metrics, small_space(), cfg, 3);
  for (const auto& z : r.policy.logits) {
    for (double v : z) EXPECT_EQ(v, 0.0);
  }
  EXPECT_EQ(r.episodes, 200);
  EXPECT_FALSE(r.converged);
}

TEST(PolicyGradient, SameSeedSameResult) {
  PolicyGradientConfig cfg;
  cfg.max_episodes = 300;
  const auto a = policy_gradient_search(small_metrics, small_space(), cfg, 42);
  const auto b = policy_gradient_search(small_metrics, small_space(), cfg, 42);
  ASSERT_EQ(a.archive.size(), b.archive.size());
  for (std::size_t i = 0; i < a.archive.size(); ++i) {
    EXPECT_EQ(a.archive[i].lattice_index, b.archive[i].lattice_index);
  }
  EXPECT_EQ(a.policy.logits, b.policy.logits);
}

TEST(PolicyGradient, ArchiveIsDistinctLatticePoints) {
  PolicyGradientConfig cfg;
  cfg.max_episodes = 400;
  const auto space = small_space();
  const auto r = policy_gradient_search(small_metrics, space, cfg, 9);
  std::set<std::size_t> seen;
  for (const auto& e : r.archive) {
    EXPECT_LT(e.lattice_index, space.size());
    EXPECT_EQ(e.design, space.design_at(e.lattice_index));
    EXPECT_EQ(e.metrics, small_metrics(e.design));
    EXPECT_TRUE(seen.insert(e.lattice_index).second);
  }
}

TEST(PolicyGradient, ParetoIsFilteredArchive) {
  PolicyGradientConfig cfg;
  cfg.max_episodes = 400;
  const auto r = policy_gradient_search(small_metrics, small_space(), cfg, 5);
  const auto idx = pareto_indices(metrics_of(r.archive));
  ASSERT_EQ(idx.size(), r.pareto.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    EXPECT_EQ(r.pareto[i].lattice_index, r.archive[idx[i]].lattice_index);
  }
}

TEST(PolicyGradient, FinalSweepCoversModeNeighbourhood) {
  PolicyGradientConfig cfg;
  cfg.max_episodes = 50;
  const auto space = small_space();
  const auto r = policy_gradient_search(small_metrics, space, cfg, 1);
  std::set<std::size_t> seen;
  for (const auto& e : r.archive) seen.insert(e.lattice_index);
  const auto mode = r.policy.mode();
  for (std::size_t d = 0; d < 5; ++d) {
    for (std::size_t k = 0; k < space.ranges[d].count(); ++k) {
      auto c = mode;
      c[d] = k;
      EXPECT_TRUE(seen.count(space.index_of(c))) << d << " " << k;
    }
  }
}

TEST(PolicyGradient, EvaluationBudgetIsHonoured) {
  std::atomic<int> calls{0};
  const Evaluator counted = [&](const Design& d) {
    ++calls;
    return small_metrics(d);
  };
  PolicyGradientConfig cfg;
  cfg.max_evaluations = 10;
  const auto r = policy_gradient_search(counted, small_space(), cfg, 2);
  EXPECT_TRUE(r.budget_exhausted);
  EXPECT_EQ(r.archive.size(), 10u);
  EXPECT_EQ(calls.load(), 10);
}

TEST(PolicyGradient, ConvergesOnTinySpace) {
  PolicyGradientConfig cfg;
  cfg.learning_rate = 0.5;
  const auto r = policy_gradient_search(two_action_metrics, two_action_space(), cfg, 7);
  EXPECT_TRUE(r.converged);
  EXPECT_LT(r.episodes, cfg.max_episodes);
  EXPECT_EQ(r.policy.mode()[0], 0u);
}

TEST(PolicyGradient, RejectsEmptySpaceAndBadWeights) {
  auto s = small_space();
  s.range(Dimension::BESS) = Range{1, 0, 1};
  EXPECT_THROW(policy_gradient_search(small_metrics, s, {}, 1), EmptySearchSpace);
  PolicyGradientConfig cfg;
  cfg.weight_cycle = {Weights{0.5, 0.5, 0.5, 0.5}};
  EXPECT_THROW(policy_gradient_search(small_metrics, small_space(), cfg, 1), InvalidWeights);
}

TEST(PolicyGradient, DefaultWeightCycle) {
  const auto cycle = default_weight_cycle();
  ASSERT_EQ(cycle.size(), 13u);
  EXPECT_EQ(cycle[0], Weights::equal());
  for (const auto& w : cycle) EXPECT_NO_THROW(w.validate());
  EXPECT_EQ(cycle[1], (Weights{0.7, 0.1, 0.1, 0.1}));
}
