#include "rydion/gate.hpp"

#include <cmath>

#include "rydion/units.hpp"

namespace rydion {

namespace {

constexpr int iq1 = 0, iq0 = 1;

// Composite Simpson on a uniform grid with an odd number of points.
double simpson(const std::vector<double>& t, const std::vector<double>& y) {
  const std::size_t n = t.size();
  if (n < 3 || n % 2 == 0)
    throw ConfigError("Simpson quadrature needs an odd number of points");
  const double h = (t.back() - t.front()) / static_cast<double>(n - 1);
  double sum = y.front() + y.back();
  for (std::size_t i = 1; i + 1 < n; ++i) sum += y[i] * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// Embed a 2x2 qubit-space matrix (basis |0>, |1>) into the 6-level space.
Operator embed_qubit(const Eigen::Matrix2cd& u) {
  Matrix m = Matrix::Identity(kLevels, kLevels);
  m(iq0, iq0) = u(0, 0);
  m(iq0, iq1) = u(0, 1);
  m(iq1, iq0) = u(1, 0);
  m(iq1, iq1) = u(1, 1);
  return Operator(std::move(m));
}

double qubit_population(const Matrix& rho, int a, int b) {
  const int i = (a == 0 ? iq0 : iq1) * kLevels + (b == 0 ? iq0 : iq1);
  return std::real(rho(i, i));
}

double wrap_angle(double a) {
  while (a > units::pi) a -= 2.0 * units::pi;
  while (a <= -units::pi) a += 2.0 * units::pi;
  return a;
}

}  // namespace

double gate_time(double v_max) {
  if (v_max <= 0) throw ConfigError("gate_time requires V > 0");
  return 8.0 * units::pi / (3.0 * v_max);
}

double gate_time_for(double v, GateTimeConvention convention) {
  if (v <= 0) throw ConfigError("gate time requires V > 0");
  return convention == GateTimeConvention::stirap_area ? gate_time(v)
                                                       : units::pi / v;
}

Operator bell_rotation() {
  // |0><-'| + i |1><+'| with |-'> = (-|0>+|1>)/sqrt2, |+'> = (|0>+|1>)/sqrt2.
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd u;
  u << Complex(-s, 0), Complex(s, 0), Complex(0, s), Complex(0, s);
  return tensor(Operator::identity(kLevels), embed_qubit(u));
}

Operator analyzer_pulse(double theta) {
  // exp(-i (pi/4)(cos(theta) sx + sin(theta) sy))
  //   = (1/sqrt2) [[1, -i e^{-i theta}], [-i e^{i theta}, 1]]
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd u;
  u(0, 0) = s;
  u(1, 1) = s;
  u(0, 1) = -Complex(0, 1) * std::exp(Complex(0, -theta)) * s;
  u(1, 0) = -Complex(0, 1) * std::exp(Complex(0, theta)) * s;
  return embed_qubit(u);
}

GateResult run_gate(const GateParams& params) {
  GateParams p = params;
  p.pair.validate();
  const double v = interaction_strength(p.mw, p.pair);

  if (p.pulse.duration <= 0) {
    if (v <= 0) throw ConfigError("gate needs V > 0 or an explicit duration");
    p.pulse.duration = gate_time(v);
  }
  p.pulse.shape = PulseShape::double_stirap_sinusoid;
  p.pulse.validate();
  if (p.grid_points < 3 || p.grid_points % 2 == 0)
    throw ConfigError("grid_points must be odd and >= 3");

  // (|0>+|1>)(|0>+|1>)/2 as a pure state.
  Vector plus = Vector::Zero(kLevels);
  plus[iq0] = 1.0 / std::sqrt(2.0);
  plus[iq1] = 1.0 / std::sqrt(2.0);
  const DensityState rho0 = DensityState::pure(tensor(plus, plus));

  std::vector<double> grid(p.grid_points);
  for (int i = 0; i < p.grid_points; ++i)
    grid[i] = p.pulse.duration * i / (p.grid_points - 1);

  const Trajectory traj = evolve(rho0, p.scheme, p.pulse, p.mw, p.pair,
                                 p.noise, grid, p.ode);

  GateResult result;
  result.t_us = grid;
  const Vector r = rydberg_state_vector(p.mw);
  const Vector rr = tensor(r, r);
  result.rr_population.reserve(grid.size());
  for (const auto& st : traj.states)
    result.rr_population.push_back(std::real(rr.adjoint() * st.rho * rr));
  result.phi = v * simpson(grid, result.rr_population);
  result.final_state = traj.states.back();

  std::vector<double> phases(p.analyzer_points);
  for (int i = 0; i < p.analyzer_points; ++i)
    phases[i] = 2.0 * units::pi * i / p.analyzer_points;
  const ParityResult parity = parity_oscillation(result.final_state, phases);
  result.parity_phases = parity.phases;
  result.parity = parity.parity;
  result.population = parity.population;
  result.coherence = parity.coherence;
  result.fidelity = parity.fidelity;
  return result;
}

ConditionalPhaseScan conditional_phase_scan(const GateResult& result,
                                            const std::vector<double>& phases) {
  if (phases.size() < 5)
    throw ConfigError("conditional phase scan needs >= 5 analyzer phases");
  ConditionalPhaseScan scan;
  scan.phases = phases;
  const Matrix& rho = result.final_state.rho;
  const Operator id = Operator::identity(kLevels);
  for (double th : phases) {
    const Operator u = tensor(id, analyzer_pulse(th));
    const Matrix rot = u.matrix() * rho * u.matrix().adjoint();
    const double p00 = qubit_population(rot, 0, 0);
    const double p01 = qubit_population(rot, 0, 1);
    const double p10 = qubit_population(rot, 1, 0);
    const double p11 = qubit_population(rot, 1, 1);
    scan.p0_given_ion1_0.push_back(p00 / std::max(p00 + p01, 1e-300));
    scan.p0_given_ion1_1.push_back(p10 / std::max(p10 + p11, 1e-300));
  }
  const HarmonicFit f0 = fit_harmonic(phases, scan.p0_given_ion1_0, 1);
  const HarmonicFit f1 = fit_harmonic(phases, scan.p0_given_ion1_1, 1);
  scan.contrast_0 = f0.amplitude;
  scan.contrast_1 = f1.amplitude;
  if (f0.amplitude < 0.05 || f1.amplitude < 0.05)
    throw NumericalError("conditional-phase fit failed: contrast < 0.05",
                         std::min(f0.amplitude, f1.amplitude));
  scan.phase_ion1_0 = f0.phase;
  scan.phase_ion1_1 = f1.phase;
  scan.phase_difference = wrap_angle(f0.phase - f1.phase);
  return scan;
}

ParityResult parity_oscillation(const DensityState& state,
                                const std::vector<double>& phases) {
  if (state.dim != kLevels * kLevels)
    throw ConfigError("parity analysis expects a two-ion state");
  if (phases.size() < 5)
    throw ConfigError("parity oscillation needs >= 5 analyzer phases");

  const Operator rot = bell_rotation();
  const Matrix bell = rot.matrix() * state.rho * rot.matrix().adjoint();

  ParityResult out;
  out.phases = phases;
  out.population = qubit_population(bell, 0, 0) + qubit_population(bell, 1, 1);
  for (double th : phases) {
    const Operator a = analyzer_pulse(th);
    const Operator u = tensor(a, a);
    const Matrix m = u.matrix() * bell * u.matrix().adjoint();
    out.parity.push_back(qubit_population(m, 0, 0) + qubit_population(m, 1, 1) -
                         qubit_population(m, 0, 1) - qubit_population(m, 1, 0));
  }
  const HarmonicFit fit = fit_harmonic(phases, out.parity, 2);
  out.coherence = fit.amplitude;
  out.fidelity = (out.population + out.coherence) / 2.0;
  return out;
}

HarmonicFit fit_harmonic(const std::vector<double>& theta,
                         const std::vector<double>& y, int harmonic) {
  if (theta.size() != y.size() || theta.size() < 3)
    throw ConfigError("fit_harmonic needs matched series of >= 3 points");
  Eigen::Matrix3d ata = Eigen::Matrix3d::Zero();
  Eigen::Vector3d atb = Eigen::Vector3d::Zero();
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const Eigen::Vector3d row(1.0, std::cos(harmonic * theta[i]),
                              std::sin(harmonic * theta[i]));
    ata += row * row.transpose();
    atb += row * y[i];
  }
  const Eigen::Vector3d c = ata.ldlt().solve(atb);
  HarmonicFit fit;
  fit.offset = c[0];
  fit.amplitude = std::hypot(c[1], c[2]);
  fit.phase = std::atan2(c[2], c[1]);
  return fit;
}

}  // namespace rydion
