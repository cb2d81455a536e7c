#include "mgsize/battery.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "mgsize/error.hpp"

namespace mgsize {

BatteryState BatteryState::at_soc(double q_max, double soc, double capacity_ratio, double soc_min,
                                  double soc_max) {
  const double q = q_max * soc;
  return BatteryState{capacity_ratio * q, (1.0 - capacity_ratio) * q, q_max, soc_min, soc_max};
}

namespace {

// Max constant internal power draining tank 1 to zero in dt, for a tank pair
// measured from its empty point. q1, total >= 0.
double kinetic_bound(double q1, double total, double dt, double k, double c) {
  if (q1 <= 0.0 || total <= 0.0) return 0.0;
  const double e = std::exp(-k * dt);
  const double num = k * q1 * e + total * k * c * (1.0 - e);
  const double den = 1.0 - e + c * (k * dt - 1.0 + e);
  return std::min(num / den, total / dt);
}

}  // namespace

double bess_max_discharge(const BatteryState& s, double dt, const KineticParams& p) {
  if (!(dt > 0.0)) throw BoundViolation("battery time step must be positive");
  const double c = p.capacity_ratio;
  const double q1 = s.q1 - c * s.floor();
  const double total = s.stored() - s.floor();
  return kinetic_bound(q1, total, dt, p.rate_constant, c) * std::sqrt(p.roundtrip_efficiency);
}

double bess_max_charge(const BatteryState& s, double dt, const KineticParams& p) {
  if (!(dt > 0.0)) throw BoundViolation("battery time step must be positive");
  const double c = p.capacity_ratio;
  const double room1 = c * s.ceiling() - s.q1;
  const double room = s.ceiling() - s.stored();
  return kinetic_bound(room1, room, dt, p.rate_constant, c) / std::sqrt(p.roundtrip_efficiency);
}

BatteryState bess_step(const BatteryState& s, double power_kw, double dt, const KineticParams& p) {
  if (!(dt > 0.0)) throw BoundViolation("battery time step must be positive");
  const double eff = std::sqrt(p.roundtrip_efficiency);
  double internal = 0.0;
  if (power_kw > 0.0) {
    const double bound = bess_max_discharge(s, dt, p);
    if (power_kw > bound * (1.0 + 1e-9) + 1e-12) {
      throw BoundViolation(
          fmt::format("discharge {} kW exceeds bound {} kW", power_kw, bound));
    }
    internal = power_kw / eff;
  } else if (power_kw < 0.0) {
    const double bound = bess_max_charge(s, dt, p);
    if (-power_kw > bound * (1.0 + 1e-9) + 1e-12) {
      throw BoundViolation(fmt::format("charge {} kW exceeds bound {} kW", -power_kw, bound));
    }
    internal = power_kw * eff;
  }

  const double k = p.rate_constant;
  const double c = p.capacity_ratio;
  const double e = std::exp(-k * dt);
  const double total = s.stored();
  const double q1 = s.q1 * e + (total * k * c - internal) * (1.0 - e) / k -
                    internal * c * (k * dt - 1.0 + e) / k;
  const double new_total = total - internal * dt;

  BatteryState next = s;
  // Rounding can leave the tanks a hair outside their shares of the SOC window.
  next.q1 = std::clamp(q1, c * s.floor(), c * s.ceiling());
  next.q2 = std::clamp(new_total - next.q1, (1.0 - c) * s.floor(), (1.0 - c) * s.ceiling());
  return next;
}

double stored_energy_delta(double charge_kw, double discharge_kw, double dt,
                           double roundtrip_efficiency) {
  const double eff = std::sqrt(roundtrip_efficiency);
  return (charge_kw * eff - discharge_kw / eff) * dt;
}

}  // namespace mgsize
