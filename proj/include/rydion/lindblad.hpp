#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rydion/integrator.hpp"
#include "rydion/qcore.hpp"
#include "rydion/rydberg.hpp"

namespace rydion {

enum class PulseShape { constant, double_stirap_sinusoid };

// Time-dependent Rabi envelopes on [0, T]. The double-STIRAP shape is the
// counterintuitive ordering (Stokes leads): Omega1 = max * sin(pi t / T),
// Omega2 = max * |cos(pi t / T)|; full transfer at T/2, return at T.
struct PulseSchedule {
  PulseShape shape = PulseShape::constant;
  double omega1_max = 0.0;  // rad/us
  double omega2_max = 0.0;  // rad/us
  double delta = 0.0;       // intermediate-state detuning, rad/us
  double duration = 0.0;    // us

  double omega1(double t) const;
  double omega2(double t) const;
  void validate() const;
};

PulseSchedule double_stirap_schedule(double omega1_max, double omega2_max,
                                     double delta, double duration);

// Stochastic imperfections. Laser linewidths enter as pure-dephasing
// collapse operators (gamma1 on the |0>-|e> leg, gamma2 on |e>-|s>);
// MW power fluctuation is quasi-static Gaussian sampling of omega_mw.
struct NoiseModel {
  double gamma1 = 0.0;  // rad/us
  double gamma2 = 0.0;  // rad/us
  double mw_fractional_sigma = 0.0;
  int shots = 200;
  std::uint64_t seed = 0;

  void validate() const;
};

struct Trajectory {
  std::vector<double> times;  // us, strictly increasing
  std::vector<DensityState> states;
  std::map<std::string, std::vector<double>> observables;
  OdeStats stats;

  void validate_states(double trace_tol = 1e-8, double herm_tol = 1e-10,
                       double eig_floor = -1e-8) const;
};

// Total Hamiltonian at time t (dense, Hermitian). One ion: 6x6; two ions:
// (H_L + H_MW) x I + I x (H_L + H_MW) + H_I on 36 dims, with the flip-flop
// interaction H_I = 2 V_max (|sp><ps| + |ps><sp|) whose dressed-pair
// expectation reproduces V(delta_mw, omega_mw).
//
// Rotating frame: the UV two-photon frequency tracks the dressed |+>
// resonance, so the s/p block is offset by -E_+(mw); the addressed Rydberg
// state sits at zero energy like |0>.
Operator build_hamiltonian(double t, const PulseSchedule& pulse,
                           const MicrowaveField& mw, const RydbergPair& pair,
                           int ions);

// Decay operators sqrt(Gamma_x/2) |q1><x| and sqrt(Gamma_x/2) |g><x| for
// x in {e, s, p}, plus the two laser-dephasing operators per ion, all
// embedded in the full space. Zero-rate operators are omitted.
std::vector<Operator> collapse_operators(const LevelScheme& scheme,
                                         const NoiseModel& noise, int ions);

struct EvolveOptions {
  double rtol = 1e-8;
  double atol = 1e-10;
  double max_step = 0.0;  // 0 = automatic
};

// Integrate the Lindblad master equation over the given sample grid.
// With mw_fractional_sigma > 0 the result is the quasi-static shot average
// over Gaussian omega_mw samples (the laser frame keeps tracking the
// nominal dressed resonance). sigma == 0 runs exactly one trajectory.
Trajectory evolve(const DensityState& rho0, const LevelScheme& scheme,
                  const PulseSchedule& pulse, const MicrowaveField& mw,
                  const RydbergPair& pair, const NoiseModel& noise,
                  const std::vector<double>& grid,
                  const EvolveOptions& opts = {});

// The single-ion Rydberg state addressed by the two-photon drive: the
// dressed |+> for omega_mw > 0, bare |s> otherwise. 6-component vector.
Vector rydberg_state_vector(const MicrowaveField& mw);

// One- and two-ion Rabi oscillations between |0> and |r> under constant
// drive, as in the tunable-blockade experiment.
struct RabiPanel {
  std::string label;
  MicrowaveField mw;
  double omega1 = 0.0;  // rad/us
  double omega2 = 0.0;  // rad/us
};

struct RabiSettings {
  LevelScheme scheme;
  RydbergPair pair;
  NoiseModel noise;
  double delta = 0.0;    // intermediate detuning, rad/us
  double span_us = 6.0;
  int points = 361;
  EvolveOptions ode;
};

struct RabiCurves {
  std::string label;
  std::vector<double> t_us;
  std::vector<double> p_single;     // one-ion |r> population
  std::vector<double> p_rr;         // two-ion |rr> population
  std::vector<double> p_symmetric;  // (|0r> + |r0>)/sqrt(2) population
  std::vector<double> p_return;     // two-ion |00> return probability
  double interaction = 0.0;         // V for this panel, rad/us
};

RabiCurves rabi_experiment(const RabiSettings& settings, const RabiPanel& panel);

// Damped-sinusoid fit y ~ c0 + (c1 cos wt + c2 sin wt) exp(-g t), used to
// extract oscillation frequencies from simulated curves.
struct OscillationFit {
  double omega = 0.0;     // rad per unit t
  double contrast = 0.0;  // hypot(c1, c2)
  double decay = 0.0;
  double offset = 0.0;
  double rms_residual = 0.0;
};

OscillationFit fit_oscillation(const std::vector<double>& t,
                               const std::vector<double>& y);

}  // namespace rydion
