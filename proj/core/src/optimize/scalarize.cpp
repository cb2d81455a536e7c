#include "mgsize/optimize/scalarize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "mgsize/error.hpp"

namespace mgsize {

namespace {

std::array<double, 4> natural(const MetricVector& m) {
  return {m.npc_usd, m.reliability, m.efficiency_pct, m.co2_kg_per_yr};
}

// Reliability and efficiency are maximized.
constexpr std::array<bool, 4> kMaximize = {false, true, true, false};

}  // namespace

void Weights::validate() const {
  const auto w = as_array();
  static constexpr std::array<std::string_view, 4> names = {"npc", "reliability", "efficiency",
                                                            "co2"};
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(w[i] > 0.0 && w[i] < 1.0)) {
      throw InvalidWeights(
          fmt::format("weight for {} must lie strictly between 0 and 1, got {}", names[i], w[i]));
    }
  }
  const double sum = w[0] + w[1] + w[2] + w[3];
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InvalidWeights(fmt::format("weights must sum to 1, got {}", sum));
  }
}

Weights Weights::of(double npc, double reliability, double efficiency, double co2) {
  Weights w{npc, reliability, efficiency, co2};
  w.validate();
  return w;
}

Weights Weights::parse(std::string_view text) {
  std::array<double, 4> v{};
  std::size_t n = 0;
  while (true) {
    const std::size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (n == v.size()) throw InvalidWeights("expected exactly 4 weights");
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v[n]);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw InvalidWeights(fmt::format("'{}' is not a number", item));
    }
    ++n;
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  if (n != v.size()) throw InvalidWeights("expected exactly 4 weights");
  return of(v[0], v[1], v[2], v[3]);
}

NormalizationBounds NormalizationBounds::from_pool(std::span<const MetricVector> pool) {
  if (pool.empty()) throw EmptyInput("normalization needs at least one design");
  NormalizationBounds b;
  b.min = natural(pool.front());
  b.max = b.min;
  for (const auto& m : pool) {
    const auto v = natural(m);
    for (std::size_t i = 0; i < v.size(); ++i) {
      b.min[i] = std::min(b.min[i], v[i]);
      b.max[i] = std::max(b.max[i], v[i]);
    }
  }
  return b;
}

void NormalizationBounds::validate() const {
  for (std::size_t i = 0; i < min.size(); ++i) {
    if (!std::isfinite(min[i]) || !std::isfinite(max[i]) || min[i] > max[i]) {
      throw DegenerateBounds(
          fmt::format("normalization bounds [{}, {}] for objective {} are unusable", min[i],
                      max[i], i));
    }
  }
}

double scalarize(const MetricVector& m, const Weights& w, const NormalizationBounds& bounds) {
  w.validate();
  bounds.validate();
  const auto v = natural(m);
  const auto weights = w.as_array();
  double score = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double span = bounds.max[i] - bounds.min[i];
    if (span == 0.0) continue;
    const double n = (v[i] - bounds.min[i]) / span;
    score += weights[i] * (kMaximize[i] ? 1.0 - n : n);
  }
  return score;
}

std::vector<double> scalarize_pool(std::span<const MetricVector> pool, const Weights& w) {
  const auto bounds = NormalizationBounds::from_pool(pool);
  std::vector<double> scores;
  scores.reserve(pool.size());
  for (const auto& m : pool) scores.push_back(scalarize(m, w, bounds));
  return scores;
}

std::size_t select_best(std::span<const MetricVector> pool, const Weights& w) {
  const auto scores = scalarize_pool(pool, w);
  return static_cast<std::size_t>(std::min_element(scores.begin(), scores.end()) -
                                  scores.begin());
}

std::vector<std::size_t> score_ranks(std::span<const MetricVector> pool, const Weights& w) {
  if (pool.empty()) return {};
  const auto scores = scalarize_pool(pool, w);
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  std::vector<std::size_t> rank(pool.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos + 1;
  return rank;
}

}  // namespace mgsize
