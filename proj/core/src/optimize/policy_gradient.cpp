#include "mgsize/optimize/policy_gradient.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "mgsize/optimize/pareto.hpp"
#include "mgsize/random.hpp"

namespace mgsize {

namespace {

std::array<double, 4> rewards(const MetricVector& m) {
  return {-m.npc_usd, m.reliability, m.efficiency_pct, -m.co2_kg_per_yr};
}

std::size_t sample(const std::vector<double>& probs, Rng& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    acc += probs[k];
    if (u < acc) return k;
  }
  return probs.size() - 1;
}

// Distinct-design archive with an optional evaluation budget.
class Archive {
 public:
  Archive(const Evaluator& evaluator, const SearchSpace& space,
          std::optional<std::size_t> limit)
      : evaluator_(evaluator), space_(space), limit_(limit) {}

  // Position in the archive, or nullopt once the budget is spent.
  std::optional<std::size_t> visit(const std::array<std::size_t, 5>& coords) {
    const std::size_t index = space_.index_of(coords);
    if (const auto it = seen_.find(index); it != seen_.end()) return it->second;
    if (limit_ && items_.size() >= *limit_) {
      exhausted_ = true;
      return std::nullopt;
    }
    EvaluatedDesign e;
    e.lattice_index = index;
    e.design = space_.design_at(coords);
    e.metrics = evaluator_(e.design);
    check_feasibility(e, std::nullopt);
    items_.push_back(std::move(e));
    seen_.emplace(index, items_.size() - 1);
    return items_.size() - 1;
  }

  const EvaluatedDesign& operator[](std::size_t i) const { return items_[i]; }
  bool exhausted() const { return exhausted_; }
  std::vector<EvaluatedDesign> take() { return std::move(items_); }

 private:
  const Evaluator& evaluator_;
  const SearchSpace& space_;
  std::optional<std::size_t> limit_;
  std::vector<EvaluatedDesign> items_;
  std::unordered_map<std::size_t, std::size_t> seen_;
  bool exhausted_ = false;
};

// Per-objective moving-average baseline with a bias-corrected RMS scale.
class Advantage {
 public:
  explicit Advantage(double decay) : decay_(decay) {}

  std::array<double, 4> operator()(const std::array<double, 4>& r) {
    std::array<double, 4> adv{};
    if (!started_) {
      baseline_ = r;
      started_ = true;
      return adv;
    }
    ++updates_;
    const double correction = 1.0 - std::pow(decay_, updates_);
    for (std::size_t j = 0; j < r.size(); ++j) {
      const double dev = r[j] - baseline_[j];
      mean_sq_[j] = decay_ * mean_sq_[j] + (1.0 - decay_) * dev * dev;
      const double rms = std::sqrt(mean_sq_[j] / correction);
      adv[j] = rms > 0.0 ? dev / rms : 0.0;
      baseline_[j] = decay_ * baseline_[j] + (1.0 - decay_) * r[j];
    }
    return adv;
  }

 private:
  double decay_;
  bool started_ = false;
  int updates_ = 0;
  std::array<double, 4> baseline_{};
  std::array<double, 4> mean_sq_{};
};

}  // namespace

Policy Policy::uniform(const SearchSpace& space) {
  Policy p;
  for (const auto& r : space.ranges) p.logits.emplace_back(r.count(), 0.0);
  return p;
}

std::vector<double> Policy::probabilities(std::size_t dimension) const {
  const auto& z = logits[dimension];
  std::vector<double> p(z.size());
  if (z.empty()) return p;
  const double top = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    p[k] = std::exp(z[k] - top);
    sum += p[k];
  }
  for (double& v : p) v /= sum;
  return p;
}

std::array<std::size_t, 5> Policy::mode() const {
  std::array<std::size_t, 5> a{};
  for (std::size_t d = 0; d < a.size() && d < logits.size(); ++d) {
    const auto& z = logits[d];
    a[d] = static_cast<std::size_t>(std::max_element(z.begin(), z.end()) - z.begin());
  }
  return a;
}

std::vector<Weights> default_weight_cycle() {
  std::vector<Weights> cycle{Weights::equal()};
  for (const auto& [major, minor] : {std::pair{0.7, 0.1}, {0.4, 0.2}, {0.1, 0.3}}) {
    for (std::size_t i = 0; i < 4; ++i) {
      std::array<double, 4> w;
      w.fill(minor);
      w[i] = major;
      cycle.push_back({w[0], w[1], w[2], w[3]});
    }
  }
  return cycle;
}

PolicyGradientResult policy_gradient_search(const Evaluator& evaluator, const SearchSpace& space,
                                            const PolicyGradientConfig& config,
                                            std::uint64_t seed) {
  space.validate();
  for (const auto& w : config.weight_cycle) w.validate();
  const std::vector<Weights> cycle =
      config.weight_cycle.empty() ? std::vector<Weights>{Weights::equal()} : config.weight_cycle;

  PolicyGradientResult result;
  result.policy = Policy::uniform(space);
  Policy& policy = result.policy;
  Archive archive(evaluator, space, config.max_evaluations);
  Advantage advantage(config.baseline_decay);
  Rng rng(seed);

  auto converged = [&] {
    for (std::size_t d = 0; d < policy.logits.size(); ++d) {
      const auto p = policy.probabilities(d);
      if (*std::max_element(p.begin(), p.end()) < config.convergence_probability) return false;
    }
    return true;
  };

  for (int episode = 0; episode < config.max_episodes; ++episode) {
    std::array<std::size_t, 5> action{};
    std::array<std::vector<double>, 5> probs;
    for (std::size_t d = 0; d < action.size(); ++d) {
      probs[d] = policy.probabilities(d);
      action[d] = sample(probs[d], rng);
    }
    const auto slot = archive.visit(action);
    if (!slot) break;
    result.episodes = episode + 1;

    const auto adv = advantage(rewards(archive[*slot].metrics));
    const auto w = cycle[static_cast<std::size_t>(episode) % cycle.size()].as_array();
    double a = 0.0;
    for (std::size_t j = 0; j < adv.size(); ++j) a += w[j] * adv[j];

    if (a != 0.0 && config.learning_rate != 0.0) {
      for (std::size_t d = 0; d < action.size(); ++d) {
        auto& z = policy.logits[d];
        if (z.size() < 2) continue;
        for (std::size_t k = 0; k < z.size(); ++k) {
          const double onehot = k == action[d] ? 1.0 : 0.0;
          z[k] += config.learning_rate * a * (onehot - probs[d][k]);
        }
      }
    }
    if (converged()) {
      result.converged = true;
      break;
    }
  }

  if (config.final_sweep && !archive.exhausted()) {
    const auto best = policy.mode();
    archive.visit(best);
    for (std::size_t d = 0; d < best.size() && !archive.exhausted(); ++d) {
      for (std::size_t k = 0; k < policy.logits[d].size(); ++k) {
        auto variant = best;
        variant[d] = k;
        if (!archive.visit(variant)) break;
      }
    }
  }

  result.budget_exhausted = archive.exhausted();
  result.archive = archive.take();
  const auto metrics = metrics_of(result.archive);
  for (std::size_t i : pareto_indices(metrics)) result.pareto.push_back(result.archive[i]);
  return result;
}

PolicyGradientResult policy_gradient_search(const Scenario& scenario, const SearchSpace& space,
                                            const PolicyGradientConfig& config,
                                            std::uint64_t seed) {
  return policy_gradient_search(scenario_evaluator(scenario), space, config, seed);
}

}  // namespace mgsize
