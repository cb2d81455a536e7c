#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mgsize {

inline constexpr std::size_t kHoursPerYear = 8760;
inline constexpr std::size_t kHoursPerDay = 24;
inline constexpr std::size_t kDaysPerYear = 365;

enum class Unit { kW, kWPerM2, MetersPerSecond, DollarsPerKWh, Celsius };

std::string_view to_string(Unit unit);
std::optional<Unit> unit_from_string(std::string_view name);

// Power, irradiance, speed and price series must be non-negative; temperature may not.
bool unit_is_non_negative(Unit unit);

// Hourly series. Hour 0 is Jan 1 00:00, no leap day.
class TimeSeries {
 public:
  TimeSeries() = default;
  TimeSeries(std::vector<double> values, Unit unit) : values_(std::move(values)), unit_(unit) {}

  static TimeSeries constant(double value, Unit unit, std::size_t hours = kHoursPerYear) {
    return TimeSeries(std::vector<double>(hours, value), unit);
  }

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  Unit unit() const noexcept { return unit_; }
  double operator[](std::size_t hour) const { return values_[hour]; }

  double sum() const;
  double max() const;

  // Uniform multiplicative scaling; scaling by exactly 1.0 is bit-identical.
  TimeSeries scaled(double factor) const;

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

 private:
  std::vector<double> values_;
  Unit unit_ = Unit::kW;
};

// Reads one numeric value per line. Blank lines and lines starting with '#'
// are skipped. `expected_length` of 0 disables the length check.
TimeSeries load_timeseries(const std::filesystem::path& path, Unit unit,
                           std::size_t expected_length = kHoursPerYear);

// Parses the same format from an in-memory buffer; `source` names it in errors.
TimeSeries parse_timeseries(std::string_view text, Unit unit, std::size_t expected_length,
                            std::string_view source = "<memory>");

// Writes one value per line with `precision` significant digits. 17 digits
// round-trips every double exactly.
void write_timeseries(const std::filesystem::path& path, const TimeSeries& series,
                      int precision = 17);
std::string format_timeseries(const TimeSeries& series, int precision = 17);

// Tiles `daily_profile` over 365 days. Day d, hour h is
//   profile[h] * (1 + delta_d) * (1 + delta_dh)
// with delta_d ~ U(-day_var, day_var) per day and delta_dh ~ U(-hour_var, hour_var)
// per hour. Deterministic for a fixed seed on every platform.
TimeSeries synthesize_load(std::span<const double> daily_profile, double day_to_day_variability,
                           double hour_to_hour_variability, std::uint64_t seed);

}  // namespace mgsize
