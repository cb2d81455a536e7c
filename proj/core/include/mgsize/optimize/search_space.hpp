#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "mgsize/dispatch.hpp"

namespace mgsize {

// The sized dimensions of a design, in lattice order.
enum class Dimension { PV, WT, DG, BESS, Converter };
inline constexpr std::array<Dimension, 5> kDimensions = {
    Dimension::PV, Dimension::WT, Dimension::DG, Dimension::BESS, Dimension::Converter};

std::string_view to_string(Dimension d);
double capacity(const Design& design, Dimension d);
// Sets the capacity and the matching inclusion flag (included iff > 0).
void set_capacity(Design& design, Dimension d, double value);

// [min, max] in steps of `step`; the last point is the largest min + i*step <= max.
struct Range {
  double min = 0.0;
  double max = 0.0;
  double step = 1.0;

  // 0 when the range is empty or malformed.
  std::size_t count() const;
  double value(std::size_t i) const { return min + static_cast<double>(i) * step; }
  static Range single(double v) { return {v, v, 1.0}; }
};

enum class GridCapRule {
  Explicit,           // grid_cap_kw for every design
  MaxDieselCapacity,  // the largest diesel size in the space
};

struct SearchSpace {
  std::array<Range, 5> ranges{};  // indexed by Dimension
  GridCapRule grid_rule = GridCapRule::Explicit;
  double grid_cap_kw = 500.0;

  const Range& range(Dimension d) const { return ranges[static_cast<std::size_t>(d)]; }
  Range& range(Dimension d) { return ranges[static_cast<std::size_t>(d)]; }

  std::size_t size() const;
  double grid_cap() const;
  std::array<std::size_t, 5> coords(std::size_t index) const;
  std::size_t index_of(const std::array<std::size_t, 5>& coords) const;
  Design design_at(std::size_t index) const;
  Design design_at(const std::array<std::size_t, 5>& coords) const;

  // Throws EmptySearchSpace if any dimension has no points.
  void validate() const;

  // PV 0-600/25, WT 0-250/25, DG 0-60/60, BESS 0-1000/50, converter 100-400/25.
  static SearchSpace default_space();
};

// Parses "pv=0:600:25,wt=0:250:25,dg=0:60:60,bess=0:1000:50,conv=100:400:25,grid=500".
// A single number is a one-point range; grid accepts a number or "maxdg".
// Dimensions not mentioned keep the values from `base`. Throws ConfigError.
SearchSpace parse_search_space(std::string_view text,
                               const SearchSpace& base = SearchSpace::default_space());

// Parses "pv=418,wt=123,dg=0,bess=704,conv=255[,grid=500]". Throws ConfigError.
Design parse_design(std::string_view text, double default_grid_cap_kw);
std::string format_design(const Design& d);

}  // namespace mgsize
