#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mgsize/error.hpp"
#include "mgsize/optimize/scalarize.hpp"
#include "mgsize/random.hpp"

using namespace mgsize;
using mgsize::testing::published_row;
using mgsize::testing::published_rows;

TEST(Weights, Validation) {
  EXPECT_NO_THROW(Weights::equal().validate());
  EXPECT_THROW(Weights::of(0.5, 0.5, 0.0, 0.0), InvalidWeights);
  EXPECT_THROW(Weights::of(1.0, 0.0, 0.0, 0.0), InvalidWeights);
  EXPECT_THROW(Weights::of(0.3, 0.3, 0.3, 0.3), InvalidWeights);
  EXPECT_THROW(Weights::of(-0.1, 0.5, 0.3, 0.3), InvalidWeights);
  EXPECT_NO_THROW(Weights::of(0.7, 0.1, 0.1, 0.1));
}

TEST(Weights, Parse) {
  EXPECT_EQ(Weights::parse("0.7, 0.1,0.1 ,0.1"), Weights::of(0.7, 0.1, 0.1, 0.1));
  EXPECT_THROW(Weights::parse("0.5,0.5"), InvalidWeights);
  EXPECT_THROW(Weights::parse("0.25,0.25,0.25,0.25,0"), InvalidWeights);
  EXPECT_THROW(Weights::parse("0.25,0.25,x,0.25"), InvalidWeights);
  EXPECT_THROW(Weights::parse(""), InvalidWeights);
}

TEST(Scalarize, BestInEveryObjectiveScoresZero) {
  std::vector<MetricVector> pool = published_rows();
  pool.push_back(published_row(4.0e6, 1.0, 99.0, -400000));
  const auto scores = scalarize_pool(pool, Weights::equal());
  EXPECT_NEAR(scores.back(), 0.0, 1e-15);
  for (double s : scores) {
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
  }
}

TEST(Scalarize, PublishedRowsEqualWeights) {
  const auto scores = scalarize_pool(published_rows(), Weights::equal());
  const std::array<double, 5> expected = {0.514027155, 0.555533530, 0.674977538, 0.746928070,
                                          0.359278193};
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(scores[i], expected[i], 1e-8);
  EXPECT_EQ(select_best(published_rows(), Weights::equal()), 4u);
  EXPECT_EQ(score_ranks(published_rows(), Weights::equal()),
            (std::vector<std::size_t>{2, 3, 4, 5, 1}));
}

TEST(Scalarize, DominantWeightPicksItsObjective) {
  const double eps = 1e-4;
  const auto rows = published_rows();
  EXPECT_EQ(select_best(rows, Weights::of(1 - 3 * eps, eps, eps, eps)), 0u);
  EXPECT_EQ(select_best(rows, Weights::of(eps, eps, 1 - 3 * eps, eps)), 2u);
  EXPECT_EQ(select_best(rows, Weights::of(eps, eps, eps, 1 - 3 * eps)), 3u);
  const auto best_r = select_best(rows, Weights::of(eps, 1 - 3 * eps, eps, eps));
  EXPECT_EQ(rows[best_r].reliability, 1.0);
}

TEST(Scalarize, InvariantUnderAffineRescaling) {
  Rng rng(12);
  std::vector<MetricVector> pool(40);
  for (auto& m : pool) {
    m = published_row(rng.uniform(4e6, 7e6), rng.uniform(0.99, 1.0), rng.uniform(70, 99),
                      rng.uniform(-4e5, 4e5));
  }
  auto scaled = pool;
  for (auto& m : scaled) {
    m.npc_usd = 3.0 * m.npc_usd + 1e5;
    m.co2_kg_per_yr = 0.5 * m.co2_kg_per_yr - 7.0;
  }
  const Weights w = Weights::of(0.4, 0.2, 0.3, 0.1);
  const auto a = scalarize_pool(pool, w);
  const auto b = scalarize_pool(scaled, w);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-12);
}

TEST(Scalarize, DegenerateMetricContributesNothing) {
  const std::vector<MetricVector> pool = {published_row(1, 1, 90, 5), published_row(2, 1, 90, 5)};
  const auto s = scalarize_pool(pool, Weights::equal());
  EXPECT_EQ(s[0], 0.0);
  EXPECT_DOUBLE_EQ(s[1], 0.25);
}

TEST(Scalarize, BoundsChecks) {
  EXPECT_THROW(NormalizationBounds::from_pool({}), EmptyInput);
  NormalizationBounds b = NormalizationBounds::from_pool(published_rows());
  EXPECT_NO_THROW(b.validate());
  b.min[0] = b.max[0] + 1;
  EXPECT_THROW(b.validate(), DegenerateBounds);
  EXPECT_THROW(scalarize(published_rows()[0], Weights::equal(), b), DegenerateBounds);
  EXPECT_THROW(select_best({}, Weights::equal()), EmptyInput);
}

TEST(Scalarize, TiesGoToFirst) {
  const auto m = published_row(1, 1, 90, 5);
  EXPECT_EQ(select_best(std::vector<MetricVector>{m, m, m}, Weights::equal()), 0u);
}
