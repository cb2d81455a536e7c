#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "mgsize/metrics.hpp"

namespace mgsize {

// The four objectives in minimization form:
// {npc, -reliability, -efficiency, co2}.
std::array<double, 4> objective_key(const MetricVector& m);

// a dominates b: no worse in every objective and strictly better in one.
bool dominates(const MetricVector& a, const MetricVector& b);

// Indices of the non-dominated entries, ascending. Exact duplicates are all
// kept since none dominates another.
std::vector<std::size_t> pareto_indices(std::span<const MetricVector> pool);

// The non-dominated entries in input order.
std::vector<MetricVector> pareto_filter(std::span<const MetricVector> pool);

}  // namespace mgsize
