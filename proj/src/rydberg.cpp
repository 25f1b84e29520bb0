#include "rydion/rydberg.hpp"

#include <cmath>

namespace rydion {

namespace {

// Calibration anchor: (n=46, Z=2, r=4.2 um) -> V_max = 2pi x 1.9 MHz.
constexpr int kRefN = 46;
constexpr int kRefZ = 2;
constexpr double kRefSeparationUm = 4.2;
const double kRefVmax = units::mhz_to_angular(1.9);

// <s|mu|p> at the anchor, from V_max = mu^2 / (4 pi eps0 r^3 hbar).
double reference_dipole() {
  const double r3 = std::pow(units::um_to_m(kRefSeparationUm), 3);
  const double v_rad_s = units::per_us_to_per_s(kRefVmax);
  return std::sqrt(v_rad_s * units::hbar_si * r3 *
                   (units::elementary_charge_si * units::elementary_charge_si /
                    units::coulomb_si));
}

}  // namespace

void RydbergPair::validate() const {
  if (n < 10) throw ConfigError("principal quantum number must be >= 10");
  if (z < 1) throw ConfigError("core charge Z must be >= 1");
  if (separation_um <= 0) throw ConfigError("ion separation must be > 0");
  if (dipole_scale <= 0) throw ConfigError("dipole_scale must be > 0");
  if (v_max() <= 0) throw NumericalError("V_max must be positive");
}

double RydbergPair::dipole() const {
  if (dipole_cm > 0) return dipole_cm * dipole_scale;
  // mu ~ n^2 / Z relative to the anchor.
  const double scale = (static_cast<double>(n) * n / z) /
                       (static_cast<double>(kRefN) * kRefN / kRefZ);
  return reference_dipole() * scale * dipole_scale;
}

double RydbergPair::v_max() const {
  const double mu = dipole();
  const double r3 = std::pow(units::um_to_m(separation_um), 3);
  const double v_rad_s = units::coulomb_si /
                         (units::elementary_charge_si *
                          units::elementary_charge_si) *
                         mu * mu / (r3 * units::hbar_si);
  return units::per_s_to_per_us(v_rad_s);
}

double vmax_scaling(int n, int z, double separation_um) {
  RydbergPair pair;
  pair.n = n;
  pair.z = z;
  pair.separation_um = separation_um;
  pair.validate();
  return pair.v_max();
}

Eigen::Matrix2d dressing_hamiltonian(const MicrowaveField& mw) {
  Eigen::Matrix2d h;
  h << mw.delta_mw, mw.omega_mw / 2.0, mw.omega_mw / 2.0, 0.0;
  return h;
}

DressedStates dressed_states(const MicrowaveField& mw) {
  mw.validate();
  const double d = mw.delta_mw, w = mw.omega_mw;
  if (d == 0.0 && w == 0.0)
    throw ConfigError("dressing undefined: omega_mw and delta_mw both zero");
  const double r = std::hypot(d, w);
  DressedStates out;
  out.energy_plus = (d + r) / 2.0;
  out.energy_minus = (d - r) / 2.0;
  // Two algebraically equivalent eigenvector forms; pick the one that stays
  // well-conditioned for the sign of delta_mw.
  if (d >= 0) {
    const double norm = std::hypot(d + r, w);
    out.cs_plus = (d + r) / norm;
    out.cp_plus = w / norm;
    out.cs_minus = -w / norm;
    out.cp_minus = (d + r) / norm;
  } else {
    const double norm = std::hypot(w, r - d);
    out.cs_plus = w / norm;
    out.cp_plus = (r - d) / norm;
    out.cs_minus = -(r - d) / norm;
    out.cp_minus = w / norm;
  }
  return out;
}

double interaction_strength(const MicrowaveField& mw, const RydbergPair& pair) {
  mw.validate();
  pair.validate();
  if (mw.omega_mw == 0.0) return 0.0;
  const double w2 = mw.omega_mw * mw.omega_mw;
  const double d2 = mw.delta_mw * mw.delta_mw;
  return pair.v_max() * w2 / (d2 + w2);
}

bool dressing_perturbative(const MicrowaveField& mw, const RydbergPair& pair) {
  return mw.omega_mw >= 10.0 * pair.v_max();
}

StirapEigensystem stirap_eigensystem(const StirapFields& f) {
  f.validate();
  const double w2 = f.omega1 * f.omega1 + f.omega2 * f.omega2;
  if (w2 == 0.0) throw ConfigError("stirap eigensystem undefined: both fields zero");
  const double w = std::sqrt(w2);
  const double root = std::sqrt(f.delta * f.delta + 4.0 * w2);

  StirapEigensystem out;
  out.e_dark = 0.0;
  out.e_plus = (f.delta + root) / 2.0;
  out.e_minus = (f.delta - root) / 2.0;
  out.dark = Eigen::Vector3d(f.omega2 / w, 0.0, -f.omega1 / w);
  Eigen::Vector3d vp(f.omega1, out.e_plus, f.omega2);
  Eigen::Vector3d vm(f.omega1, out.e_minus, f.omega2);
  out.plus = vp / vp.norm();
  out.minus = vm / vm.norm();
  return out;
}

double dark_bright_coupling(const StirapFields& f, double v_max) {
  const double w2 = f.omega1 * f.omega1 + f.omega2 * f.omega2;
  if (w2 <= 0.0) throw ConfigError("dark-bright coupling needs a nonzero field");
  const double x = f.omega1 * f.omega2 / w2;
  return 0.5 * v_max * x * x;
}

DarkLeak dark_population_leak(double v_max, double delta) {
  if (delta <= 0.0) throw ConfigError("detuning required");
  DarkLeak leak;
  leak.rho_e_max = v_max * v_max / (16.0 * delta * delta);
  leak.delta_e_max = v_max * v_max / (32.0 * delta);
  return leak;
}

}  // namespace rydion
