#include "mgsize/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "mgsize/error.hpp"

namespace mgsize {

using nlohmann::json;

namespace {

template <class V>
void fields(V& v, CostData& c) {
  v("capital", c.capital);
  v("replacement", c.replacement);
  v("om", c.om);
  v("lifetime_years", c.lifetime_years);
}

template <class V>
void fields(V& v, PvSpec& s) {
  v("cost", s.cost);
  v("derating", s.derating);
  v("temp_coefficient", s.temp_coefficient);
  v("std_irradiance_kw_m2", s.std_irradiance_kw_m2);
  v("std_cell_temp_c", s.std_cell_temp_c);
  v("annual_degradation", s.annual_degradation);
}

template <class V>
void fields(V& v, WindSpec& s) {
  v("cost", s.cost);
  v("unit_rated_kw", s.unit_rated_kw);
  v("cut_in_ms", s.cut_in_ms);
  v("rated_speed_ms", s.rated_speed_ms);
  v("cut_out_ms", s.cut_out_ms);
  v("hub_height_m", s.hub_height_m);
  v("shear_exponent", s.shear_exponent);
  v("swept_area_m2", s.swept_area_m2);
  v("power_coefficient", s.power_coefficient);
  v("air_density", s.air_density);
  v("speed_exponent", s.speed_exponent);
  v("annual_degradation", s.annual_degradation);
}

template <class V>
void fields(V& v, DieselSpec& s) {
  v("cost", s.cost);
  v("fuel_intercept", s.fuel_intercept);
  v("fuel_slope", s.fuel_slope);
  v("min_load_ratio", s.min_load_ratio);
}

template <class V>
void fields(V& v, BatterySpec& s) {
  v("cost", s.cost);
  v("nominal_voltage", s.nominal_voltage);
  v("roundtrip_efficiency", s.roundtrip_efficiency);
  v("soc_min", s.soc_min);
  v("soc_max", s.soc_max);
  v("capacity_ratio", s.capacity_ratio);
  v("rate_constant", s.rate_constant);
}

template <class V>
void fields(V& v, ConverterSpec& s) {
  v("cost", s.cost);
  v("efficiency", s.efficiency);
  v("fixed_loss_kw", s.fixed_loss_kw);
}

template <class V>
void fields(V& v, Catalog& c) {
  v("pv", c.pv);
  v("wind", c.wind);
  v("diesel", c.diesel);
  v("battery", c.battery);
  v("converter", c.converter);
}

template <class V>
void fields(V& v, Economics& e) {
  v("discount_rate", e.discount_rate);
  v("inflation_rate", e.inflation_rate);
  v("project_years", e.project_years);
  v("fuel_price_per_l", e.fuel_price_per_l);
  v("diesel_emission_kg_per_l", e.diesel_emission_kg_per_l);
}

// Reads fields out of one JSON object and rejects keys nobody asked for.
class Reader {
 public:
  Reader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) throw ConfigError(path_ + ": expected an object");
  }

  const json* find(const std::string& key) {
    used_.insert(key);
    const auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  std::string child(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  void operator()(const std::string& key, double& dst) {
    if (const json* v = find(key)) {
      if (!v->is_number()) throw ConfigError(child(key) + ": expected a number");
      dst = v->get<double>();
    }
  }

  void operator()(const std::string& key, int& dst) {
    if (const json* v = find(key)) {
      if (!v->is_number_integer()) throw ConfigError(child(key) + ": expected an integer");
      dst = v->get<int>();
    }
  }

  void operator()(const std::string& key, std::string& dst) {
    if (const json* v = find(key)) {
      if (!v->is_string()) throw ConfigError(child(key) + ": expected a string");
      dst = v->get<std::string>();
    }
  }

  template <class Struct>
  void operator()(const std::string& key, Struct& dst) {
    if (const json* v = find(key)) {
      Reader sub(*v, child(key));
      fields(sub, dst);
      sub.finish();
    }
  }

  void finish() const {
    for (const auto& [key, value] : obj_.items()) {
      if (!used_.count(key)) throw ConfigError(fmt::format("{}: unknown key", child(key)));
    }
  }

 private:
  const json& obj_;
  std::string path_;
  std::set<std::string> used_;
};

class Writer {
 public:
  explicit Writer(json& obj) : obj_(obj) {}

  void operator()(const std::string& key, const double& v) { obj_[key] = v; }
  void operator()(const std::string& key, const int& v) { obj_[key] = v; }
  void operator()(const std::string& key, const std::string& v) { obj_[key] = v; }

  template <class Struct>
  void operator()(const std::string& key, const Struct& v) {
    json sub = json::object();
    Writer w(sub);
    fields(w, const_cast<Struct&>(v));
    obj_[key] = std::move(sub);
  }

 private:
  json& obj_;
};

template <std::size_t N>
std::array<double, N> number_array(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != N) {
    throw ConfigError(fmt::format("{}: expected an array of {} numbers", path, N));
  }
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!j[i].is_number()) throw ConfigError(fmt::format("{}[{}]: expected a number", path, i));
    out[i] = j[i].get<double>();
  }
  return out;
}

std::uint64_t seed_of(Reader& r, std::uint64_t fallback) {
  if (const json* v = r.find("seed")) {
    if (!v->is_number_unsigned()) throw ConfigError(r.child("seed") + ": expected an unsigned integer");
    return v->get<std::uint64_t>();
  }
  return fallback;
}

enum class SeriesKind { Load, Irradiance, Wind, CellTemp, Price };

// number, {"file": path} or {"synthetic": {...}}.
TimeSeries read_series(const json& j, const std::string& path, SeriesKind kind, Unit unit,
                       const std::filesystem::path& base_dir) {
  if (j.is_number()) return TimeSeries::constant(j.get<double>(), unit);
  Reader r(j, path);
  const json* file = r.find("file");
  const json* synthetic = r.find("synthetic");
  if ((file != nullptr) == (synthetic != nullptr)) {
    throw ConfigError(path + ": give exactly one of \"file\" or \"synthetic\"");
  }
  r.finish();
  if (file) {
    if (!file->is_string()) throw ConfigError(path + ".file: expected a string");
    std::filesystem::path p = file->get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    return load_timeseries(p, unit);
  }

  const std::string spath = path + ".synthetic";
  const json empty = json::object();
  Reader s(synthetic->is_object() ? *synthetic : empty, spath);
  if (!synthetic->is_object() && *synthetic != "bundled") {
    throw ConfigError(spath + ": expected an object or \"bundled\"");
  }
  TimeSeries out;
  switch (kind) {
    case SeriesKind::Load: {
      std::array<double, 24> profile = default_daily_load_profile();
      if (const json* p = s.find("profile")) profile = number_array<24>(*p, s.child("profile"));
      double day = 0.10;
      double hour = 0.10;
      s("day_to_day_variability", day);
      s("hour_to_hour_variability", hour);
      out = synthesize_load(profile, day, hour, seed_of(s, 20240101));
      break;
    }
    case SeriesKind::Irradiance: {
      auto monthly = default_monthly_resource().ghi_kwh_m2_day;
      if (const json* p = s.find("monthly_kwh_m2_day")) {
        monthly = number_array<12>(*p, s.child("monthly_kwh_m2_day"));
      }
      double latitude = site_latitude_deg();
      s("latitude_deg", latitude);
      out = synthesize_irradiance(monthly, latitude, seed_of(s, 20240102));
      break;
    }
    case SeriesKind::Wind: {
      auto monthly = default_monthly_resource().wind_ms;
      if (const json* p = s.find("monthly_ms")) monthly = number_array<12>(*p, s.child("monthly_ms"));
      out = synthesize_wind(monthly, seed_of(s, 20240103));
      break;
    }
    case SeriesKind::CellTemp:
    case SeriesKind::Price:
      throw ConfigError(spath + ": no generator for this series; use a number or a file");
  }
  s.finish();
  return out;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace

Scenario parse_scenario(std::string_view json_text, const std::filesystem::path& base_dir,
                        std::string_view source) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(std::string(source), line_of(json_text, at), e.what());
  }

  // Series that are not given fall back to the bundled ones.
  std::optional<Scenario> bundled;
  auto fallback = [&]() -> const Scenario& {
    if (!bundled) bundled = bundled_scenario();
    return *bundled;
  };

  Scenario s;
  Reader r(doc, "");
  s.name = "central-tilba-synthetic";
  r("name", s.name);

  auto series = [&](const std::string& key, SeriesKind kind, Unit unit,
                    TimeSeries Scenario::*member) {
    const json* v = r.find(key);
    return v ? read_series(*v, key, kind, unit, base_dir) : fallback().*member;
  };
  s.load = series("load", SeriesKind::Load, Unit::kW, &Scenario::load);
  s.irradiance = series("irradiance", SeriesKind::Irradiance, Unit::kWPerM2, &Scenario::irradiance);
  s.wind_speed =
      series("wind_speed", SeriesKind::Wind, Unit::MetersPerSecond, &Scenario::wind_speed);
  if (const json* v = r.find("cell_temp")) {
    s.cell_temp = read_series(*v, "cell_temp", SeriesKind::CellTemp, Unit::Celsius, base_dir);
  }
  r("anemometer_height_m", s.anemometer_height_m);

  if (const json* t = r.find("tariff")) {
    Reader tr(*t, "tariff");
    if (const json* p = tr.find("purchase_price")) {
      s.tariff.purchase_price = read_series(*p, "tariff.purchase_price", SeriesKind::Price,
                                            Unit::DollarsPerKWh, base_dir);
    }
    if (const json* p = tr.find("sellback_price")) {
      s.tariff.sellback_price = read_series(*p, "tariff.sellback_price", SeriesKind::Price,
                                            Unit::DollarsPerKWh, base_dir);
    }
    tr("max_import_kw", s.tariff.max_import_kw);
    tr("max_export_kw", s.tariff.max_export_kw);
    tr("emission_factor_kg_per_kwh", s.tariff.emission_factor_kg_per_kwh);
    tr.finish();
  }
  r("economics", s.economics);
  r("catalog", s.catalog);
  r("reliability_lambda", s.reliability_lambda);
  std::string mode = "net_of_losses";
  r("efficiency_mode", mode);
  if (mode == "net_of_losses") {
    s.efficiency_mode = EfficiencyMode::NetOfLosses;
  } else if (mode == "gross_input") {
    s.efficiency_mode = EfficiencyMode::GrossInput;
  } else {
    throw ConfigError("efficiency_mode: expected \"net_of_losses\" or \"gross_input\"");
  }
  r("pv_output_multiplier", s.pv_output_multiplier);
  r("wind_output_multiplier", s.wind_output_multiplier);
  r.finish();

  validate_scenario(s);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.parent_path(), path.string());
}

std::filesystem::path save_scenario(const Scenario& s, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  json doc = json::object();
  doc["name"] = s.name;
  auto series = [&](const std::string& key, const TimeSeries& ts) {
    const std::string file = key + ".txt";
    write_timeseries(dir / file, ts);
    return json{{"file", file}};
  };
  doc["load"] = series("load", s.load);
  doc["irradiance"] = series("irradiance", s.irradiance);
  doc["wind_speed"] = series("wind_speed", s.wind_speed);
  if (s.cell_temp) doc["cell_temp"] = series("cell_temp", *s.cell_temp);
  doc["anemometer_height_m"] = s.anemometer_height_m;
  doc["tariff"] = {{"purchase_price", series("purchase_price", s.tariff.purchase_price)},
                   {"sellback_price", series("sellback_price", s.tariff.sellback_price)},
                   {"max_import_kw", s.tariff.max_import_kw},
                   {"max_export_kw", s.tariff.max_export_kw},
                   {"emission_factor_kg_per_kwh", s.tariff.emission_factor_kg_per_kwh}};
  Writer w(doc);
  w("economics", s.economics);
  w("catalog", s.catalog);
  doc["reliability_lambda"] = s.reliability_lambda;
  doc["efficiency_mode"] =
      s.efficiency_mode == EfficiencyMode::NetOfLosses ? "net_of_losses" : "gross_input";
  doc["pv_output_multiplier"] = s.pv_output_multiplier;
  doc["wind_output_multiplier"] = s.wind_output_multiplier;

  const auto path = dir / "scenario.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
  return path;
}

}  // namespace mgsize
