#pragma once

#include "mgsize/scenario.hpp"

namespace mgsize {

// Two-tank kinetic battery model (KiBaM). Tank 1 holds charge available to
// the terminals, tank 2 holds bound charge that flows into tank 1 at rate k
// until q1 / (q1 + q2) = c. With Q = q1 + q2 and internal power P (positive
// out of the cell):
//   dq1/dt = -P - k q1 + k c Q,   dQ/dt = -P.
struct KineticParams {
  double rate_constant = 1.0;   // k, 1/hr
  double capacity_ratio = 0.5;  // c
  double roundtrip_efficiency = 0.9;

  static KineticParams from(const BatterySpec& spec) {
    return {spec.rate_constant, spec.capacity_ratio, spec.roundtrip_efficiency};
  }
};

struct BatteryState {
  double q1 = 0.0;  // available charge, kWh
  double q2 = 0.0;  // bound charge, kWh
  double q_max = 0.0;
  double soc_min = 0.2;
  double soc_max = 0.8;

  // Tanks at equilibrium for the given state of charge.
  static BatteryState at_soc(double q_max, double soc, double capacity_ratio, double soc_min = 0.2,
                             double soc_max = 0.8);

  double stored() const noexcept { return q1 + q2; }
  double soc() const noexcept { return q_max > 0.0 ? stored() / q_max : 0.0; }
  double floor() const noexcept { return soc_min * q_max; }
  double ceiling() const noexcept { return soc_max * q_max; }

  friend bool operator==(const BatteryState&, const BatteryState&) = default;
};

// Largest constant terminal power (kW) the battery can deliver for `dt_hours`
// without tank 1 dropping below its share of the soc_min floor:
//   P = (k q1 e + Q k c (1 - e)) / (1 - e + c (k dt - 1 + e)),  e = exp(-k dt)
// evaluated on charge above the floor, capped at the energy above the floor,
// and multiplied by sqrt(eta_RT) for the discharge-side loss.
double bess_max_discharge(const BatteryState& state, double dt_hours, const KineticParams& params);

// Charge-side mirror of bess_max_discharge: the same bound evaluated on the
// headroom below soc_max, divided by sqrt(eta_RT). Result is terminal kW in.
double bess_max_charge(const BatteryState& state, double dt_hours, const KineticParams& params);

// Advances the state by `dt_hours` at constant terminal power `power_kw`
// (positive discharges, negative charges) using the closed-form KiBaM
// solution. Throws BoundViolation if |power_kw| exceeds the matching bound.
BatteryState bess_step(const BatteryState& state, double power_kw, double dt_hours,
                       const KineticParams& params);

// Change in stored energy implied by terminal flows:
//   charge * sqrt(eta) - discharge / sqrt(eta), per hour of dt.
double stored_energy_delta(double charge_kw, double discharge_kw, double dt_hours,
                           double roundtrip_efficiency);

}  // namespace mgsize
