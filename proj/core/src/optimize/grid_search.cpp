#include "mgsize/optimize/grid_search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "mgsize/error.hpp"

namespace mgsize {

Evaluator scenario_evaluator(const Scenario& scenario) {
  return [&scenario](const Design& d) { return evaluate(d, scenario); };
}

void check_feasibility(EvaluatedDesign& e, const std::optional<double>& budget_usd) {
  e.violation_notes = design_problems(e.design);
  if (budget_usd) {
    const double spend = e.metrics.capital_usd + e.metrics.om_usd_per_yr;
    if (spend > *budget_usd) {
      e.violation_notes.push_back(
          fmt::format("cost {:.2f} exceeds budget {:.2f}", spend, *budget_usd));
    }
  }
  e.feasible = e.violation_notes.empty();
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<EvaluatedDesign> grid_search(const Evaluator& evaluator, const SearchSpace& space,
                                         const GridSearchOptions& options) {
  space.validate();
  const std::size_t n = space.size();
  std::vector<EvaluatedDesign> all(n);
  parallel_for(n, options.jobs, [&](std::size_t i) {
    EvaluatedDesign& e = all[i];
    e.lattice_index = i;
    e.design = space.design_at(i);
    e.metrics = evaluator(e.design);
    check_feasibility(e, options.budget_usd);
  });

  std::vector<EvaluatedDesign> out;
  out.reserve(n);
  for (auto& e : all) {
    if (e.feasible || options.keep_infeasible) out.push_back(std::move(e));
  }
  std::stable_sort(out.begin(), out.end(), [](const EvaluatedDesign& a, const EvaluatedDesign& b) {
    return a.metrics.npc_usd < b.metrics.npc_usd;
  });
  return out;
}

std::vector<EvaluatedDesign> grid_search(const Scenario& scenario, const SearchSpace& space,
                                         const GridSearchOptions& options) {
  return grid_search(scenario_evaluator(scenario), space, options);
}

std::vector<MetricVector> metrics_of(const std::vector<EvaluatedDesign>& designs) {
  std::vector<MetricVector> out;
  out.reserve(designs.size());
  for (const auto& e : designs) out.push_back(e.metrics);
  return out;
}

}  // namespace mgsize
