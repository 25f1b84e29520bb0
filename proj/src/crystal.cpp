#include "rydion/crystal.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace rydion {

namespace {

// Riemann zeta(3).
constexpr double kZeta3 = 1.2020569031595943;

Eigen::VectorXd coulomb_forces(const Eigen::VectorXd& u) {
  const int n = static_cast<int>(u.size());
  Eigen::VectorXd f = u;
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      if (k == m) continue;
      const double d = u[m] - u[k];
      f[m] -= (d > 0 ? 1.0 : -1.0) / (d * d);
    }
  }
  return f;
}

Eigen::MatrixXd harmonic_hessian_scaled(const Eigen::VectorXd& u) {
  const int n = static_cast<int>(u.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    double diag = 1.0;
    for (int k = 0; k < n; ++k) {
      if (k == m) continue;
      const double inv3 = 1.0 / std::pow(std::abs(u[m] - u[k]), 3);
      diag += 2.0 * inv3;
      h(m, k) = -2.0 * inv3;
    }
    h(m, m) = diag;
  }
  return h;
}

}  // namespace

void IonCrystal::validate() const {
  if (n_ions < 2) throw ConfigError("crystal needs at least 2 ions");
  if (mass_amu <= 0) throw ConfigError("mass must be positive");
  if (kind == CrystalKind::equal_spaced) {
    if (spacing_um <= 0) throw ConfigError("spacing must be positive");
    if (omega_trap <= 0 || xi <= 0)
      throw ConfigError("equal_spaced crystal needs omega_trap > 0 and xi > 0");
  } else {
    if (omega_trap <= 0) throw ConfigError("harmonic crystal needs omega_trap > 0");
  }
}

double IonCrystal::length_scale_um() const {
  const double w_si = units::per_us_to_per_s(omega_trap);
  const double l_m =
      std::cbrt(units::coulomb_si / (mass_kg() * w_si * w_si));
  return l_m * 1e6;
}

std::vector<double> equilibrium_positions_scaled(int n_ions) {
  if (n_ions < 2) throw ConfigError("need at least 2 ions");
  const int n = n_ions;
  // Linear seed with the known central-spacing scale ~ 2.018 N^-0.559.
  Eigen::VectorXd u(n);
  const double d0 = 2.018 / std::pow(n, 0.559);
  for (int j = 0; j < n; ++j) u[j] = d0 * (j - 0.5 * (n - 1));

  double fn = coulomb_forces(u).norm();
  for (int it = 0; it < 200; ++it) {
    if (fn < 1e-12) break;
    const Eigen::VectorXd f = coulomb_forces(u);
    const Eigen::VectorXd step = harmonic_hessian_scaled(u).ldlt().solve(f);
    double alpha = 1.0;
    for (int half = 0; half < 60; ++half) {
      Eigen::VectorXd trial = u - alpha * step;
      std::sort(trial.begin(), trial.end());
      const double tn = coulomb_forces(trial).norm();
      if (tn < fn) {
        u = trial;
        fn = tn;
        break;
      }
      alpha /= 2.0;
      if (half == 59)
        throw NumericalError("equilibrium position line search stalled", fn);
    }
  }
  if (fn >= 1e-12)
    throw NumericalError("equilibrium positions did not converge", fn);

  // Symmetrise about the centre (the potential is even).
  for (int j = 0; j < n / 2; ++j) {
    const double v = 0.5 * (u[n - 1 - j] - u[j]);
    u[j] = -v;
    u[n - 1 - j] = v;
  }
  if (n % 2 == 1) u[n / 2] = 0.0;
  return {u.begin(), u.end()};
}

std::vector<double> equilibrium_positions(const IonCrystal& crystal) {
  crystal.validate();
  std::vector<double> out(crystal.n_ions);
  if (crystal.kind == CrystalKind::equal_spaced) {
    for (int j = 0; j < crystal.n_ions; ++j) out[j] = j * crystal.spacing_um;
    return out;
  }
  const auto u = equilibrium_positions_scaled(crystal.n_ions);
  const double l = crystal.length_scale_um();
  for (int j = 0; j < crystal.n_ions; ++j) out[j] = u[j] * l;
  return out;
}

double trap_frequency_for_central_spacing(int n_ions, double spacing_um,
                                          double mass_amu) {
  if (spacing_um <= 0) throw ConfigError("spacing must be positive");
  const auto u = equilibrium_positions_scaled(n_ions);
  const int mid = n_ions / 2;
  const double du = u[mid] - u[mid - 1];
  const double l_m = units::um_to_m(spacing_um) / du;
  const double m_kg = mass_amu * units::atomic_mass_si;
  const double w_si = std::sqrt(units::coulomb_si / (m_kg * l_m * l_m * l_m));
  return units::per_s_to_per_us(w_si);
}

Eigen::MatrixXd hessian(const IonCrystal& crystal) {
  crystal.validate();
  const int n = crystal.n_ions;
  if (crystal.kind == CrystalKind::harmonic_1d) {
    const auto u = equilibrium_positions_scaled(n);
    return harmonic_hessian_scaled(
        Eigen::Map<const Eigen::VectorXd>(u.data(), n));
  }
  // Ring with periodic distances, spacing in units of the length scale.
  const double a = crystal.spacing_um / crystal.length_scale_um();
  const double a3 = a * a * a;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    double diag = crystal.xi;
    for (int k = 0; k < n; ++k) {
      if (k == m) continue;
      const int d = std::min(std::abs(k - m), n - std::abs(k - m));
      const double inv3 = 2.0 / (a3 * d * d * d);
      diag += inv3;
      h(m, k) -= inv3;
    }
    h(m, m) = diag;
  }
  return h;
}

void ModeSpectrum::validate() const {
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    if (frequencies[i] <= 0)
      throw NumericalError("mode frequency not positive", frequencies[i]);
    if (i > 0 && frequencies[i] < frequencies[i - 1])
      throw NumericalError("mode frequencies not sorted");
  }
  const Eigen::MatrixXd g = vectors.transpose() * vectors;
  const double err =
      (g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).norm();
  if (err > 1e-10)
    throw NumericalError("mode vectors not orthonormal", err);
}

ModeSpectrum mode_spectrum(const IonCrystal& crystal) {
  const Eigen::MatrixXd h = hessian(crystal);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  if (es.info() != Eigen::Success)
    throw NumericalError("Hessian eigensolver failed");

  ModeSpectrum modes;
  const int n = crystal.n_ions;
  modes.vectors = es.eigenvectors();
  modes.frequencies.resize(n);
  modes.lengths_nm.resize(n);
  for (int p = 0; p < n; ++p) {
    const double lambda = es.eigenvalues()[p];
    if (lambda <= 0)
      throw NumericalError("unstable crystal: non-positive mode", lambda);
    const double nu = crystal.omega_trap * std::sqrt(lambda);
    modes.frequencies[p] = nu;
    const double nu_si = units::per_us_to_per_s(nu);
    modes.lengths_nm[p] =
        std::sqrt(units::hbar_si / (2.0 * crystal.mass_kg() * nu_si)) * 1e9;
  }
  return modes;
}

double clausen3(double x) {
  // cos(m x) by recurrence; truncation tail is below 1/(2 * 10^12).
  constexpr long kTerms = 1000000;
  const double c1 = std::cos(x);
  double sum = 0.0;
  double prev = 1.0, cur = c1;
  for (long m = 1; m <= kTerms; ++m) {
    sum += cur / (static_cast<double>(m) * m * m);
    const double next = 2.0 * c1 * cur - prev;
    prev = cur;
    cur = next;
  }
  return sum;
}

double ring_dispersion(int j_q, const IonCrystal& crystal,
                       DispersionSign sign) {
  crystal.validate();
  if (crystal.kind != CrystalKind::equal_spaced)
    throw ConfigError("ring dispersion applies to equal_spaced crystals");
  const int n = crystal.n_ions;
  if (j_q < 0 || j_q >= n) throw ConfigError("j_q out of range [0, N-1]");
  const double a = crystal.spacing_um / crystal.length_scale_um();
  const double a3 = a * a * a;
  const double qa = 2.0 * units::pi * j_q / n;
  const double lattice = clausen3(qa);
  const double s = sign == DispersionSign::printed_plus ? 1.0 : -1.0;
  const double nu2 = crystal.xi + 4.0 * kZeta3 / a3 + s * 4.0 * lattice / a3;
  if (nu2 <= 0) throw NumericalError("dispersion gives non-positive mode", nu2);
  return crystal.omega_trap * std::sqrt(nu2);
}

}  // namespace rydion
