#pragma once

#include <vector>

#include "rydion/crystal.hpp"
#include "rydion/gate.hpp"

namespace rydion {

// Dimensionless couplings g_p = 3 W_jk B_jk^(p) / (R_jk nu_p) of a Rydberg
// pair (j, k) to the crystal modes, with B_jk^(p) = (b_j^(p)-b_k^(p)) l_p.
struct PhononCoupling {
  std::vector<double> g;   // per mode
  double w_jk = 0.0;       // interaction at the pair separation, rad/us
  double r_jk_um = 0.0;
  int j = 0, k = 0;
};

PhononCoupling coupling_constants(const ModeSpectrum& modes,
                                  const IonCrystal& crystal, int j, int k,
                                  double w_jk);

// Thermal occupation factor coth(hbar nu / (2 kB T)); 1 at T = 0.
double thermal_coth(double nu_rad_us, double temperature_uk);

// The Magnus-expansion coherence exponent G(t), its bound G_max, and the
// phase corrections of the traced evolution operator.
struct CoherenceReport {
  std::vector<double> g;
  std::vector<double> t_us;
  std::vector<double> exponent;     // G(t)
  std::vector<double> phase_osc;    // phi(t) = sum g^2 sin(nu t)
  double g_max = 0.0;               // 2 sum g^2 coth
  double phase_coefficient = 0.0;   // W - sum g^2 nu  (Phi(t) = coeff * t)
  double temperature_uk = 0.0;
  double w_jk = 0.0;
  int j = 0, k = 0;

  double coherence(std::size_t i) const;  // exp(-G(t_i))
};

CoherenceReport coherence_exponent(const PhononCoupling& coupling,
                                   const ModeSpectrum& modes,
                                   double temperature_uk,
                                   const std::vector<double>& t_grid_us);

// G_max for a crystal with two adjacent centre ions excited; used for the
// saturation-with-N analysis.
double g_max_adjacent_pair(const IonCrystal& crystal, double w_jk,
                           double temperature_uk);

// Motional-coupling gate error 1 - exp(-G(tau_g)) at the gate time of the
// chosen convention, plus the oscillatory and static phase corrections.
struct MotionalError {
  double gate_time_us = 0.0;
  double g_at_gate = 0.0;
  double coherence_error = 0.0;   // 1 - C(tau_g)
  double phase_osc_error = 0.0;   // |phi(tau_g)|
  double phase_shift_error = 0.0; // |sum g^2 nu| * tau_g
};

MotionalError motional_gate_error(
    const IonCrystal& crystal, int j, int k, double v, double temperature_uk,
    GateTimeConvention convention = GateTimeConvention::pi_over_v);

}  // namespace rydion
