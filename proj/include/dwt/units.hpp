#pragma once

#include <numbers>

namespace dwt {

/// Energy unit attached to a parameter set.
///
/// kNatural: hbar = 1 and energies are in whatever unit the caller picked
/// (usually U, or J when U = 0); times are in hbar / (energy unit).
/// kNanoKelvin: energies are nK * k_B and times are reported in ms.
enum class EnergyUnit { kNatural, kNanoKelvin };

/// Conversion between nK * k_B energies and ms times.
struct PhysicalUnits {
  /// hbar / k_B in nK * ms, from hbar = 1.054571817e-34 J s and k_B = 1.380649e-23 J/K.
  static constexpr double kHbarOverKbNanoKelvinMs = 7.63824;

  /// One natural time unit hbar / (1 nK k_B), in ms.
  static constexpr double ms_per_natural_time() { return kHbarOverKbNanoKelvinMs; }

  static constexpr double natural_time_to_ms(double t) { return t * kHbarOverKbNanoKelvinMs; }
  static constexpr double ms_to_natural_time(double t_ms) { return t_ms / kHbarOverKbNanoKelvinMs; }

  /// Period 2 pi hbar / E, in ms, for an energy splitting in nK * k_B.
  static constexpr double period_ms_from_energy_nK(double energy_nK) {
    return 2.0 * std::numbers::pi * kHbarOverKbNanoKelvinMs / energy_nK;
  }
  static constexpr double energy_nK_from_period_ms(double period_ms) {
    return 2.0 * std::numbers::pi * kHbarOverKbNanoKelvinMs / period_ms;
  }

  /// hbar * omega in nK for an angular frequency omega in rad/s.
  static constexpr double energy_nK_from_angular_frequency(double omega_rad_per_s) {
    return omega_rad_per_s * kHbarOverKbNanoKelvinMs * 1e-3;
  }
};

/// Factor converting natural times to the reporting unit (1, or ms for nK).
constexpr double time_scale(EnergyUnit unit) {
  return unit == EnergyUnit::kNanoKelvin ? PhysicalUnits::ms_per_natural_time() : 1.0;
}

}  // namespace dwt
