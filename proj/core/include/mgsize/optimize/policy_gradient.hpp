#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mgsize/optimize/grid_search.hpp"
#include "mgsize/optimize/scalarize.hpp"

namespace mgsize {

// Independent categorical distribution per dimension, softmax of logits.
struct Policy {
  std::vector<std::vector<double>> logits;  // [dimension][lattice value]

  static Policy uniform(const SearchSpace& space);
  std::vector<double> probabilities(std::size_t dimension) const;
  // Most probable action per dimension; lowest index on ties.
  std::array<std::size_t, 5> mode() const;
};

// Centroid, then for each objective 0.7/0.1, 0.4/0.2 and 0.1/0.3 splits.
std::vector<Weights> default_weight_cycle();

struct PolicyGradientConfig {
  double learning_rate = 0.1;
  int max_episodes = 2000;
  double baseline_decay = 0.99;
  std::vector<Weights> weight_cycle = default_weight_cycle();
  // Stop early once every dimension's most likely action reaches this.
  double convergence_probability = 0.99;
  // Distinct-design evaluation limit; unlimited when empty.
  std::optional<std::size_t> max_evaluations;
  // After training, also evaluate the policy mode and every design that
  // differs from it in exactly one dimension.
  bool final_sweep = true;
};

struct PolicyGradientResult {
  std::vector<EvaluatedDesign> archive;  // distinct designs, first-visit order
  std::vector<EvaluatedDesign> pareto;   // non-dominated subset of the archive, archive order
  Policy policy;
  int episodes = 0;
  bool converged = false;
  bool budget_exhausted = false;
};

// REINFORCE over single-step episodes: sample one action per dimension,
// evaluate, and move the logits along (onehot - pi) scaled by the learning
// rate and a weighted advantage. Each objective's reward is compared with an
// exponential moving average and divided by a running RMS of that deviation;
// the episode's weights come from the cycle in turn.
// Throws EmptySearchSpace.
PolicyGradientResult policy_gradient_search(const Evaluator& evaluator, const SearchSpace& space,
                                            const PolicyGradientConfig& config,
                                            std::uint64_t seed);
PolicyGradientResult policy_gradient_search(const Scenario& scenario, const SearchSpace& space,
                                            const PolicyGradientConfig& config,
                                            std::uint64_t seed);

}  // namespace mgsize
