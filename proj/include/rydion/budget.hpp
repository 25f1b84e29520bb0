#pragma once

#include <string>
#include <vector>

#include "rydion/gate.hpp"
#include "rydion/phonon.hpp"

namespace rydion {

enum class ErrorSource {
  rydberg_decay,
  laser_linewidth,
  intermediate_scattering,
  nonadiabatic,
  mw_fluctuation,
  minus_state_coupling,
  polarisability,
  motional,
};

std::string error_source_name(ErrorSource s);
ErrorSource error_source_from_name(const std::string& name);

// Motional-coupling inputs for the budget (computed via the phonon module).
struct MotionalScenario {
  int n_ions = 2;
  double central_spacing_um = 4.2;
  double temperature_uk = 12.7;
  double interaction = 0.0;  // rad/us; 0 = use the gate interaction strength
};

struct ScenarioParams {
  std::string label = "custom";
  GateParams gate;
  MotionalScenario motional;
  double polarisability_error = 0.0;   // scenario scalar (bound from analysis)
  double minus_state_bound = 1e-4;
};

struct BudgetEntry {
  std::string source;
  double contribution = 0.0;
  std::string method;  // "simulated" or "analytic_scaling"
};

struct ErrorBudget {
  std::string scenario;
  std::vector<BudgetEntry> entries;
  double total = 0.0;             // simple sum of the entries
  double joint_infidelity = 0.0;  // 1 - F of the all-sources-on run
  double base_fidelity = 0.0;
};

// Fidelity gain from switching one stochastic source off (clamped at 0).
// The non-adiabatic entry is the residual infidelity with every stochastic
// source off, since adiabaticity has no on/off rate.
double simulated_contribution(ErrorSource source, const ScenarioParams& params);

// Parameters entering the analytic scaling monomials.
struct ScalingParams {
  int n = 46;
  double r_um = 4.2;
  double gamma_l = 0.0;        // rad/us
  double delta = 0.0;          // rad/us
  double omega_max = 0.0;      // rad/us
  double delta_omega_mw = 0.0; // absolute MW fluctuation, rad/us
  int n_ions = 2;
};

// contribution_to = contribution_from * monomial(to) / monomial(from).
double scaling_extrapolate(ErrorSource source, const ScalingParams& from,
                           const ScalingParams& to, double contribution_from);

// Full per-source table plus totals; simulated entries via toggle-off runs,
// motional via the phonon pipeline, bounds entered as analytic scalars.
// Contributions are combined by simple summation; the joint single-run
// infidelity is reported alongside for comparison.
ErrorBudget budget_report(const ScenarioParams& params);

}  // namespace rydion
