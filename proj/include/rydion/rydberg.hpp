#pragma once

#include <Eigen/Dense>

#include "rydion/errors.hpp"
#include "rydion/units.hpp"

namespace rydion {

// MW coupling of |s> and |p>, rad/us.
struct MicrowaveField {
  double omega_mw = 0.0;
  double delta_mw = 0.0;

  void validate() const {
    if (omega_mw < 0) throw ConfigError("omega_mw must be >= 0");
  }
};

// A pair of Rydberg ions. The s-p dipole matrix element defaults to a value
// calibrated so that (n=46, Z=2, r=4.2 um) gives V_max = 2pi x 1.9 MHz, and
// scales as n^2/Z from there. dipole_scale multiplies the matrix element
// (< 1 for partially dressed states with reduced dipole moments).
struct RydbergPair {
  int n = 46;
  int z = 2;
  double separation_um = 4.2;
  double dipole_scale = 1.0;
  double dipole_cm = 0.0;  // explicit <s|mu|p> in C m; 0 = use default scaling

  void validate() const;
  double dipole() const;  // C m
  double v_max() const;   // rad/us, mu^2 / (4 pi eps0 r^3 hbar)
};

// V_max for (n, Z, r) with the default dipole scaling, rad/us.
// Anchored at (46, 2, 4.2 um) -> 2pi x 1.9 MHz and ~ n^4 / Z^2 / r^3.
double vmax_scaling(int n, int z, double separation_um);

// Eigen-decomposition of the 2x2 dressing Hamiltonian
//   [[delta_mw, omega_mw/2], [omega_mw/2, 0]]
// in the (|s>, |p>) basis. Phases are fixed so that cs_plus >= 0 and
// cp_minus >= 0; |+> connects continuously to |s> as omega_mw -> 0 at
// delta_mw > 0.
struct DressedStates {
  double energy_plus = 0.0;
  double energy_minus = 0.0;
  double cs_plus = 0.0, cp_plus = 0.0;
  double cs_minus = 0.0, cp_minus = 0.0;
};

Eigen::Matrix2d dressing_hamiltonian(const MicrowaveField& mw);
DressedStates dressed_states(const MicrowaveField& mw);

// Eq.-(2)-style dressed interaction: V = V_max * W^2 / (D^2 + W^2).
double interaction_strength(const MicrowaveField& mw, const RydbergPair& pair);

// First-order dressing requires omega_mw >> V_max; false when the 10x
// guard is violated (callers may warn).
bool dressing_perturbative(const MicrowaveField& mw, const RydbergPair& pair);

// STIRAP laser fields, rad/us. delta is the intermediate-state detuning.
struct StirapFields {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double delta = 0.0;

  void validate() const {
    if (omega1 < 0 || omega2 < 0) throw ConfigError("omega1/2 must be >= 0");
  }
  // Effective two-photon Rabi frequency Omega1*Omega2 / (2*Delta).
  double two_photon_rabi() const { return omega1 * omega2 / (2.0 * delta); }
};

// Single-ion eigensystem of the three-level ladder (|0>, |e>, |r>) with
// couplings (Omega1, Omega2) and detuning Delta on |e>:
//   E_dark = 0 (exact),  E_pm = (Delta +- sqrt(Delta^2 + 4 W^2)) / 2,
// dark vector ~ Omega2 |0> - Omega1 |r> with zero |e> amplitude.
struct StirapEigensystem {
  double e_dark = 0.0;
  double e_plus = 0.0;
  double e_minus = 0.0;
  Eigen::Vector3d dark;   // components on (|0>, |e>, |r>)
  Eigen::Vector3d plus;
  Eigen::Vector3d minus;
};

StirapEigensystem stirap_eigensystem(const StirapFields& f);

// <phi_dark phi_dark | V_dd | phi_+ phi_-> ~ (V_max/2) (W1 W2 / (W1^2+W2^2))^2.
double dark_bright_coupling(const StirapFields& f, double v_max);

// Residual intermediate-state population and dark-state energy shift caused
// by the dark-bright coupling at detuning Delta.
struct DarkLeak {
  double rho_e_max = 0.0;
  double delta_e_max = 0.0;
};
DarkLeak dark_population_leak(double v_max, double delta);

}  // namespace rydion
