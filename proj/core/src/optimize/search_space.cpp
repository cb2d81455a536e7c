#include "mgsize/optimize/search_space.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "mgsize/error.hpp"

namespace mgsize {

std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::PV: return "pv";
    case Dimension::WT: return "wt";
    case Dimension::DG: return "dg";
    case Dimension::BESS: return "bess";
    case Dimension::Converter: return "conv";
  }
  return "?";
}

double capacity(const Design& design, Dimension d) {
  switch (d) {
    case Dimension::PV: return design.pv_kw;
    case Dimension::WT: return design.wt_kw;
    case Dimension::DG: return design.dg_kw;
    case Dimension::BESS: return design.bess_kwh;
    case Dimension::Converter: return design.converter_kw;
  }
  return 0.0;
}

void set_capacity(Design& design, Dimension d, double value) {
  switch (d) {
    case Dimension::PV:
      design.pv_kw = value;
      design.include_pv = value > 0.0;
      break;
    case Dimension::WT:
      design.wt_kw = value;
      design.include_wt = value > 0.0;
      break;
    case Dimension::DG:
      design.dg_kw = value;
      design.include_dg = value > 0.0;
      break;
    case Dimension::BESS:
      design.bess_kwh = value;
      design.include_bess = value > 0.0;
      break;
    case Dimension::Converter:
      design.converter_kw = value;
      break;
  }
}

std::size_t Range::count() const {
  if (!std::isfinite(min) || !std::isfinite(max) || !std::isfinite(step)) return 0;
  if (!(step > 0.0) || min > max || min < 0.0) return 0;
  return static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
}

std::size_t SearchSpace::size() const {
  std::size_t n = 1;
  for (const auto& r : ranges) n *= r.count();
  return n;
}

double SearchSpace::grid_cap() const {
  if (grid_rule == GridCapRule::MaxDieselCapacity) {
    const Range& dg = range(Dimension::DG);
    const std::size_t n = dg.count();
    return n == 0 ? 0.0 : dg.value(n - 1);
  }
  return grid_cap_kw;
}

std::array<std::size_t, 5> SearchSpace::coords(std::size_t index) const {
  std::array<std::size_t, 5> c{};
  // Last dimension varies fastest.
  for (std::size_t i = ranges.size(); i-- > 0;) {
    const std::size_t n = ranges[i].count();
    c[i] = index % n;
    index /= n;
  }
  return c;
}

std::size_t SearchSpace::index_of(const std::array<std::size_t, 5>& c) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < ranges.size(); ++i) index = index * ranges[i].count() + c[i];
  return index;
}

Design SearchSpace::design_at(const std::array<std::size_t, 5>& c) const {
  Design d;
  for (std::size_t i = 0; i < kDimensions.size(); ++i) {
    set_capacity(d, kDimensions[i], ranges[i].value(c[i]));
  }
  d.grid_cap_kw = grid_cap();
  return d;
}

Design SearchSpace::design_at(std::size_t index) const { return design_at(coords(index)); }

void SearchSpace::validate() const {
  std::vector<std::string> empty;
  for (Dimension d : kDimensions) {
    const Range& r = range(d);
    if (r.count() == 0) {
      empty.push_back(fmt::format("{}=[{}:{}:{}]", to_string(d), r.min, r.max, r.step));
    }
  }
  if (!empty.empty()) {
    throw EmptySearchSpace(
        fmt::format("search space has no candidates; empty dimensions: {}", fmt::join(empty, ", ")));
  }
  if (!(grid_cap() >= 0.0)) throw EmptySearchSpace("grid capacity must be >= 0");
}

SearchSpace SearchSpace::default_space() {
  SearchSpace s;
  s.range(Dimension::PV) = {0.0, 600.0, 25.0};
  s.range(Dimension::WT) = {0.0, 250.0, 25.0};
  s.range(Dimension::DG) = {0.0, 60.0, 60.0};
  s.range(Dimension::BESS) = {0.0, 1000.0, 50.0};
  s.range(Dimension::Converter) = {100.0, 400.0, 25.0};
  return s;
}

namespace {

double parse_number(std::string_view text, std::string_view context) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(fmt::format("{}: '{}' is not a number", context, text));
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::pair<std::string_view, std::string_view>> split_assignments(
    std::string_view text) {
  std::vector<std::pair<std::string_view, std::string_view>> out;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(fmt::format("expected key=value, got '{}'", item));
    }
    out.emplace_back(trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
  }
  return out;
}

std::optional<Dimension> dimension_from(std::string_view key) {
  for (Dimension d : kDimensions) {
    if (to_string(d) == key) return d;
  }
  if (key == "converter" || key == "con") return Dimension::Converter;
  if (key == "bes") return Dimension::BESS;
  return std::nullopt;
}

}  // namespace

SearchSpace parse_search_space(std::string_view text, const SearchSpace& base) {
  SearchSpace space = base;
  for (const auto& [key, value] : split_assignments(text)) {
    if (key == "grid") {
      if (value == "maxdg") {
        space.grid_rule = GridCapRule::MaxDieselCapacity;
      } else {
        space.grid_rule = GridCapRule::Explicit;
        space.grid_cap_kw = parse_number(value, "grid");
      }
      continue;
    }
    const auto dim = dimension_from(key);
    if (!dim) throw ConfigError(fmt::format("unknown search dimension '{}'", key));
    std::vector<std::string_view> parts;
    std::string_view rest = value;
    while (true) {
      const std::size_t colon = rest.find(':');
      parts.push_back(rest.substr(0, colon));
      if (colon == std::string_view::npos) break;
      rest = rest.substr(colon + 1);
    }
    Range r;
    if (parts.size() == 1) {
      r = Range::single(parse_number(parts[0], key));
    } else if (parts.size() == 3) {
      r = {parse_number(parts[0], key), parse_number(parts[1], key), parse_number(parts[2], key)};
    } else {
      throw ConfigError(fmt::format("{}: expected min:max:step or a single value", key));
    }
    space.range(*dim) = r;
  }
  return space;
}

Design parse_design(std::string_view text, double default_grid_cap_kw) {
  Design d;
  d.grid_cap_kw = default_grid_cap_kw;
  for (const auto& [key, value] : split_assignments(text)) {
    if (key == "grid") {
      d.grid_cap_kw = parse_number(value, "grid");
      continue;
    }
    const auto dim = dimension_from(key);
    if (!dim) throw ConfigError(fmt::format("unknown design field '{}'", key));
    set_capacity(d, *dim, parse_number(value, key));
  }
  const auto problems = design_problems(d);
  if (!problems.empty()) throw ConfigError("invalid design: " + problems.front());
  return d;
}

std::string format_design(const Design& d) {
  return fmt::format("pv={},wt={},dg={},bess={},conv={},grid={}", d.pv_kw, d.wt_kw, d.dg_kw,
                     d.bess_kwh, d.converter_kw, d.grid_cap_kw);
}

}  // namespace mgsize
