#pragma once

#include <Eigen/Dense>
#include <vector>

#include "rydion/errors.hpp"
#include "rydion/units.hpp"

namespace rydion {

enum class CrystalKind { equal_spaced, harmonic_1d };

// A 1D ion crystal: either an idealised ring of equally spaced ions
// (periodic boundary conditions, plane-wave modes) or ions in a harmonic
// axial potential. Lengths are scaled by l = (e^2/(4 pi eps0 M w^2))^(1/3)
// and frequencies by the trap frequency w.
struct IonCrystal {
  CrystalKind kind = CrystalKind::harmonic_1d;
  int n_ions = 2;
  double spacing_um = 5.0;     // equal_spaced: neighbour spacing a
  double omega_trap = 0.0;     // rad/us, axial trap frequency
  double mass_amu = 88.0;
  double xi = 1.0;             // equal_spaced axial confinement, units of w^2

  void validate() const;
  double mass_kg() const { return mass_amu * units::atomic_mass_si; }
  double length_scale_um() const;  // l above
};

// Dimensionless equilibrium positions of N ions in a harmonic trap
// (Coulomb balance u_m = sum_{n<m} (u_m-u_n)^-2 - sum_{n>m} (u_m-u_n)^-2),
// solved by damped Newton iteration; residual < 1e-12.
std::vector<double> equilibrium_positions_scaled(int n_ions);

// Physical positions in um. equal_spaced crystals are j*a by definition.
std::vector<double> equilibrium_positions(const IonCrystal& crystal);

// Trap frequency (rad/us) for which the central spacing of an N-ion
// harmonic crystal equals the requested distance.
double trap_frequency_for_central_spacing(int n_ions, double spacing_um,
                                          double mass_amu);

// Dynamical (Hessian) matrix in units of M w^2. Harmonic: the standard
// axial form from the scaled equilibrium positions. Equal-spaced: ring
// convention with periodic distances, consistent with plane-wave modes.
Eigen::MatrixXd hessian(const IonCrystal& crystal);

struct ModeSpectrum {
  std::vector<double> frequencies;   // nu_p, rad/us, ascending
  Eigen::MatrixXd vectors;           // column p = orthonormal mode vector
  std::vector<double> lengths_nm;    // l_p = sqrt(hbar / (2 M nu_p))

  void validate() const;
};

ModeSpectrum mode_spectrum(const IonCrystal& crystal);

// Closed-form ring dispersion nu_q for q = 2 pi j_q / (a N). The published
// form carries "+" on the cosine lattice sum; direct diagonalisation of the
// circulant ring Hessian gives "-". Both are available; the Hessian
// spectrum is the ground truth used by the coherence pipeline.
enum class DispersionSign { printed_plus, circulant_minus };
double ring_dispersion(int j_q, const IonCrystal& crystal,
                       DispersionSign sign = DispersionSign::printed_plus);

// sum_{m>=1} cos(m x) / m^3, truncated at 10^6 terms (tail < 1e-12).
double clausen3(double x);

}  // namespace rydion
