#pragma once

#include <cmath>

// Unit conventions used throughout:
//   * hbar = 1; Hamiltonians and rates are angular frequencies in rad/us.
//   * Times in us, lengths in um unless a suffix says otherwise.
//   * Configs quote ordinary frequencies in MHz; convert with mhz_to_angular.
namespace rydion::units {

inline constexpr double pi = 3.14159265358979323846;

// SI constants (CODATA 2018).
inline constexpr double hbar_si = 1.054571817e-34;        // J s
inline constexpr double k_boltzmann_si = 1.380649e-23;    // J / K
inline constexpr double elementary_charge_si = 1.602176634e-19;  // C
inline constexpr double epsilon0_si = 8.8541878128e-12;   // F / m
inline constexpr double atomic_mass_si = 1.66053906660e-27;      // kg
inline constexpr double fine_structure = 7.2973525693e-3;
inline constexpr double rydberg_energy_si = 2.1798723611035e-18;  // J

// e^2 / (4 pi eps0), the Coulomb energy-length product, in J m.
inline constexpr double coulomb_si =
    elementary_charge_si * elementary_charge_si / (4.0 * pi * epsilon0_si);

// Ordinary frequency in MHz -> angular frequency in rad/us.
inline constexpr double mhz_to_angular(double f_mhz) { return 2.0 * pi * f_mhz; }
inline constexpr double angular_to_mhz(double w) { return w / (2.0 * pi); }

// Angular frequency rad/us <-> rad/s.
inline constexpr double per_us_to_per_s(double w) { return w * 1e6; }
inline constexpr double per_s_to_per_us(double w) { return w * 1e-6; }

inline constexpr double um_to_m(double um) { return um * 1e-6; }
inline constexpr double uk_to_k(double uk) { return uk * 1e-6; }

}  // namespace rydion::units
