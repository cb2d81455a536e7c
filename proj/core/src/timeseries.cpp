#include "mgsize/timeseries.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <fmt/format.h>

#include "mgsize/error.hpp"
#include "mgsize/random.hpp"

namespace mgsize {

std::string_view to_string(Unit unit) {
  switch (unit) {
    case Unit::kW: return "kW";
    case Unit::kWPerM2: return "kW/m2";
    case Unit::MetersPerSecond: return "m/s";
    case Unit::DollarsPerKWh: return "$/kWh";
    case Unit::Celsius: return "degC";
  }
  return "?";
}

std::optional<Unit> unit_from_string(std::string_view name) {
  for (Unit u : {Unit::kW, Unit::kWPerM2, Unit::MetersPerSecond, Unit::DollarsPerKWh,
                 Unit::Celsius}) {
    if (to_string(u) == name) return u;
  }
  return std::nullopt;
}

bool unit_is_non_negative(Unit unit) { return unit != Unit::Celsius; }

double TimeSeries::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

double TimeSeries::max() const {
  if (values_.empty()) return 0.0;
  return *std::max_element(values_.begin(), values_.end());
}

TimeSeries TimeSeries::scaled(double factor) const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(),
                 [factor](double v) { return v * factor; });
  return TimeSeries(std::move(out), unit_);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r'; };
  while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

TimeSeries parse_timeseries(std::string_view text, Unit unit, std::size_t expected_length,
                            std::string_view source) {
  std::vector<double> values;
  values.reserve(expected_length > 0 ? expected_length : kHoursPerYear);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc() || ptr != line.data() + line.size()) {
      throw ParseError(std::string(source), line_no, "not a number: '" + std::string(line) + "'");
    }
    if (!std::isfinite(v)) {
      throw ParseError(std::string(source), line_no, "non-finite value");
    }
    if (unit_is_non_negative(unit) && v < 0.0) {
      throw ParseError(std::string(source), line_no,
                       fmt::format("negative value {} for unit {}", v, to_string(unit)));
    }
    values.push_back(v);
  }
  if (expected_length != 0 && values.size() != expected_length) {
    throw LengthMismatch(expected_length, values.size());
  }
  return TimeSeries(std::move(values), unit);
}

TimeSeries load_timeseries(const std::filesystem::path& path, Unit unit,
                           std::size_t expected_length) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_timeseries(buf.str(), unit, expected_length, path.string());
}

std::string format_timeseries(const TimeSeries& series, int precision) {
  std::string out;
  out.reserve(series.size() * 20);
  for (double v : series.values()) {
    out += fmt::format("{:.{}g}\n", v, precision);
  }
  return out;
}

void write_timeseries(const std::filesystem::path& path, const TimeSeries& series,
                      int precision) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open for writing: " + path.string());
  out << format_timeseries(series, precision);
}

TimeSeries synthesize_load(std::span<const double> daily_profile, double day_to_day_variability,
                           double hour_to_hour_variability, std::uint64_t seed) {
  if (daily_profile.size() != kHoursPerDay) {
    throw InvalidVariability(
        fmt::format("daily profile needs {} values, got {}", kHoursPerDay, daily_profile.size()));
  }
  for (double v : {day_to_day_variability, hour_to_hour_variability}) {
    if (!(v >= 0.0 && v < 1.0)) {
      throw InvalidVariability(fmt::format("variability {} outside [0, 1)", v));
    }
  }
  for (double p : daily_profile) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw InvalidVariability("daily profile values must be finite and non-negative");
    }
  }

  Rng rng(seed);
  std::vector<double> values;
  values.reserve(kHoursPerYear);
  for (std::size_t day = 0; day < kDaysPerYear; ++day) {
    const double day_factor = 1.0 + rng.uniform(-day_to_day_variability, day_to_day_variability);
    for (std::size_t h = 0; h < kHoursPerDay; ++h) {
      const double hour_factor =
          1.0 + rng.uniform(-hour_to_hour_variability, hour_to_hour_variability);
      values.push_back(daily_profile[h] * day_factor * hour_factor);
    }
  }
  return TimeSeries(std::move(values), Unit::kW);
}

}  // namespace mgsize
