#include "rydion/phonon.hpp"

#include <cmath>

namespace rydion {

PhononCoupling coupling_constants(const ModeSpectrum& modes,
                                  const IonCrystal& crystal, int j, int k,
                                  double w_jk) {
  crystal.validate();
  const int n = crystal.n_ions;
  if (j == k || j < 0 || k < 0 || j >= n || k >= n)
    throw ConfigError("coupling_constants needs distinct ion indices in range");

  const auto pos = equilibrium_positions(crystal);
  PhononCoupling out;
  out.j = j;
  out.k = k;
  out.w_jk = w_jk;
  out.r_jk_um = std::abs(pos[j] - pos[k]);
  const double r_m = units::um_to_m(out.r_jk_um);
  const double w_si = units::per_us_to_per_s(w_jk);

  out.g.resize(n);
  for (int p = 0; p < n; ++p) {
    const double b_diff = modes.vectors(j, p) - modes.vectors(k, p);
    const double l_m = modes.lengths_nm[p] * 1e-9;
    const double nu_si = units::per_us_to_per_s(modes.frequencies[p]);
    out.g[p] = 3.0 * w_si * b_diff * l_m / (r_m * nu_si);
  }
  return out;
}

double thermal_coth(double nu_rad_us, double temperature_uk) {
  if (temperature_uk < 0) throw ConfigError("temperature must be >= 0");
  if (temperature_uk == 0.0) return 1.0;
  const double nu_si = units::per_us_to_per_s(nu_rad_us);
  const double x = units::hbar_si * nu_si /
                   (2.0 * units::k_boltzmann_si *
                    units::uk_to_k(temperature_uk));
  return 1.0 / std::tanh(x);
}

double CoherenceReport::coherence(std::size_t i) const {
  return std::exp(-exponent.at(i));
}

CoherenceReport coherence_exponent(const PhononCoupling& coupling,
                                   const ModeSpectrum& modes,
                                   double temperature_uk,
                                   const std::vector<double>& t_grid_us) {
  const std::size_t np = coupling.g.size();
  if (np != modes.frequencies.size())
    throw ConfigError("coupling/mode count mismatch");

  CoherenceReport rep;
  rep.g = coupling.g;
  rep.t_us = t_grid_us;
  rep.temperature_uk = temperature_uk;
  rep.w_jk = coupling.w_jk;
  rep.j = coupling.j;
  rep.k = coupling.k;

  std::vector<double> coth(np);
  double sum_g2nu = 0.0;
  for (std::size_t p = 0; p < np; ++p) {
    coth[p] = thermal_coth(modes.frequencies[p], temperature_uk);
    rep.g_max += 2.0 * coupling.g[p] * coupling.g[p] * coth[p];
    sum_g2nu += coupling.g[p] * coupling.g[p] * modes.frequencies[p];
  }
  rep.phase_coefficient = coupling.w_jk - sum_g2nu;

  rep.exponent.resize(t_grid_us.size());
  rep.phase_osc.resize(t_grid_us.size());
  for (std::size_t i = 0; i < t_grid_us.size(); ++i) {
    const double t = t_grid_us[i];
    double g_of_t = 0.0, phi = 0.0;
    for (std::size_t p = 0; p < np; ++p) {
      const double g2 = coupling.g[p] * coupling.g[p];
      const double nut = modes.frequencies[p] * t;
      g_of_t += g2 * coth[p] * (1.0 - std::cos(nut));
      phi += g2 * std::sin(nut);
    }
    rep.exponent[i] = g_of_t;
    rep.phase_osc[i] = phi;
  }
  return rep;
}

double g_max_adjacent_pair(const IonCrystal& crystal, double w_jk,
                           double temperature_uk) {
  const ModeSpectrum modes = mode_spectrum(crystal);
  const int mid = crystal.n_ions / 2;
  const auto coupling =
      coupling_constants(modes, crystal, mid - 1, mid, w_jk);
  double g_max = 0.0;
  for (std::size_t p = 0; p < coupling.g.size(); ++p)
    g_max += 2.0 * coupling.g[p] * coupling.g[p] *
             thermal_coth(modes.frequencies[p], temperature_uk);
  return g_max;
}

MotionalError motional_gate_error(const IonCrystal& crystal, int j, int k,
                                  double v, double temperature_uk,
                                  GateTimeConvention convention) {
  const ModeSpectrum modes = mode_spectrum(crystal);
  const auto coupling = coupling_constants(modes, crystal, j, k, v);
  const double tau = gate_time_for(v, convention);
  const auto rep =
      coherence_exponent(coupling, modes, temperature_uk, {0.0, tau});

  MotionalError err;
  err.gate_time_us = tau;
  err.g_at_gate = rep.exponent.back();
  err.coherence_error = 1.0 - std::exp(-rep.exponent.back());
  err.phase_osc_error = std::abs(rep.phase_osc.back());
  err.phase_shift_error = std::abs(coupling.w_jk - rep.phase_coefficient) * tau;
  return err;
}

}  // namespace rydion
