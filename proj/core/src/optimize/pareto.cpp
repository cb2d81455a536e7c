#include "mgsize/optimize/pareto.hpp"

#include <algorithm>
#include <numeric>

namespace mgsize {

namespace {

bool key_dominates(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  bool strictly = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strictly = true;
  }
  return strictly;
}

}  // namespace

std::array<double, 4> objective_key(const MetricVector& m) {
  return {m.npc_usd, -m.reliability, -m.efficiency_pct, m.co2_kg_per_yr};
}

bool dominates(const MetricVector& a, const MetricVector& b) {
  return key_dominates(objective_key(a), objective_key(b));
}

std::vector<std::size_t> pareto_indices(std::span<const MetricVector> pool) {
  std::vector<std::array<double, 4>> keys;
  keys.reserve(pool.size());
  for (const auto& m : pool) keys.push_back(objective_key(m));

  // After a lexicographic sort nothing can be dominated by a later entry, so
  // each candidate only needs checking against the front built so far.
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  std::vector<std::size_t> front;
  for (std::size_t i : order) {
    const bool dominated = std::any_of(front.begin(), front.end(), [&](std::size_t f) {
      return key_dominates(keys[f], keys[i]);
    });
    if (!dominated) front.push_back(i);
  }
  std::sort(front.begin(), front.end());
  return front;
}

std::vector<MetricVector> pareto_filter(std::span<const MetricVector> pool) {
  std::vector<MetricVector> out;
  for (std::size_t i : pareto_indices(pool)) out.push_back(pool[i]);
  return out;
}

}  // namespace mgsize
