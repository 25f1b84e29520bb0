#include "rydion/budget.hpp"

#include <array>
#include <cmath>

namespace rydion {

namespace {

constexpr std::array<const char*, 8> kSourceNames = {
    "rydberg_decay",   "laser_linewidth", "intermediate_scattering",
    "nonadiabatic",    "mw_fluctuation",  "minus_state_coupling",
    "polarisability",  "motional"};

GateParams with_source_off(ErrorSource source, GateParams g) {
  switch (source) {
    case ErrorSource::rydberg_decay:
      g.scheme.gamma_s = 0.0;
      g.scheme.gamma_p = 0.0;
      break;
    case ErrorSource::laser_linewidth:
      g.noise.gamma1 = 0.0;
      g.noise.gamma2 = 0.0;
      break;
    case ErrorSource::intermediate_scattering:
      g.scheme.gamma_e = 0.0;
      break;
    case ErrorSource::mw_fluctuation:
      g.noise.mw_fractional_sigma = 0.0;
      break;
    case ErrorSource::nonadiabatic:
      g.scheme = LevelScheme{};
      g.noise.gamma1 = 0.0;
      g.noise.gamma2 = 0.0;
      g.noise.mw_fractional_sigma = 0.0;
      break;
    default:
      throw ConfigError("source has no toggle-off simulation: " +
                        error_source_name(source));
  }
  return g;
}

double motional_contribution(const ScenarioParams& params) {
  const MotionalScenario& m = params.motional;
  IonCrystal crystal;
  crystal.kind = CrystalKind::harmonic_1d;
  crystal.n_ions = m.n_ions;
  crystal.mass_amu = 88.0;
  crystal.omega_trap = trap_frequency_for_central_spacing(
      m.n_ions, m.central_spacing_um, crystal.mass_amu);
  const double v = m.interaction > 0
                       ? m.interaction
                       : interaction_strength(params.gate.mw, params.gate.pair);
  const int mid = m.n_ions / 2;
  const auto err = motional_gate_error(crystal, mid - 1, mid, v,
                                       m.temperature_uk,
                                       GateTimeConvention::pi_over_v);
  return err.coherence_error;
}

}  // namespace

std::string error_source_name(ErrorSource s) {
  return kSourceNames[static_cast<std::size_t>(s)];
}

ErrorSource error_source_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kSourceNames.size(); ++i)
    if (name == kSourceNames[i]) return static_cast<ErrorSource>(i);
  throw ConfigError("unknown error source: '" + name + "'");
}

double simulated_contribution(ErrorSource source,
                              const ScenarioParams& params) {
  if (source == ErrorSource::nonadiabatic) {
    const GateResult ideal = run_gate(with_source_off(source, params.gate));
    return std::max(0.0, 1.0 - ideal.fidelity);
  }
  const GateResult base = run_gate(params.gate);
  const GateResult off = run_gate(with_source_off(source, params.gate));
  const double diff = off.fidelity - base.fidelity;
  if (diff < -1e-4)
    throw NumericalError("toggle-off decreased fidelity beyond tolerance",
                         diff);
  return std::max(0.0, diff);
}

double scaling_extrapolate(ErrorSource source, const ScalingParams& from,
                           const ScalingParams& to,
                           double contribution_from) {
  auto monomial = [&](const ScalingParams& p) -> double {
    const double n = p.n, r = p.r_um;
    switch (source) {
      case ErrorSource::rydberg_decay:
        return std::pow(n, -7.0) * std::pow(r, 3.0);
      case ErrorSource::laser_linewidth:
        return p.gamma_l * std::pow(n, -4.0) * std::pow(r, 3.0);
      case ErrorSource::intermediate_scattering:
        return std::pow(p.delta, -2.0) * std::pow(n, 4.0) * std::pow(r, -3.0);
      case ErrorSource::nonadiabatic: {
        const double gap = p.omega_max - p.delta / 2.0;
        if (gap <= 0) throw ConfigError("scaling needs omega_max > delta/2");
        return std::pow(gap, -2.0) * std::pow(n, 4.0) * std::pow(r, -3.0);
      }
      case ErrorSource::mw_fluctuation:
        return p.delta_omega_mw * std::pow(n, -4.0) * std::pow(r, 3.0);
      case ErrorSource::motional:
        return std::pow(static_cast<double>(p.n_ions), 1.0 / 12.0);
      default:
        throw ConfigError("no scaling law for source: " +
                          error_source_name(source));
    }
  };
  const double mf = monomial(from);
  if (mf == 0) throw ConfigError("scaling monomial vanishes for 'from' params");
  return contribution_from * monomial(to) / mf;
}

ErrorBudget budget_report(const ScenarioParams& params) {
  ErrorBudget budget;
  budget.scenario = params.label;

  const GateResult base = run_gate(params.gate);
  budget.base_fidelity = base.fidelity;
  budget.joint_infidelity = std::max(0.0, 1.0 - base.fidelity);

  auto toggle = [&](ErrorSource s) {
    const GateResult off = run_gate(with_source_off(s, params.gate));
    const double diff = std::max(0.0, off.fidelity - base.fidelity);
    budget.entries.push_back({error_source_name(s), diff, "simulated"});
  };
  toggle(ErrorSource::rydberg_decay);
  toggle(ErrorSource::laser_linewidth);
  toggle(ErrorSource::intermediate_scattering);
  {
    const GateResult ideal =
        run_gate(with_source_off(ErrorSource::nonadiabatic, params.gate));
    budget.entries.push_back({error_source_name(ErrorSource::nonadiabatic),
                              std::max(0.0, 1.0 - ideal.fidelity),
                              "simulated"});
  }
  toggle(ErrorSource::mw_fluctuation);
  budget.entries.push_back({error_source_name(ErrorSource::minus_state_coupling),
                            params.minus_state_bound, "analytic_scaling"});
  budget.entries.push_back({error_source_name(ErrorSource::polarisability),
                            params.polarisability_error, "analytic_scaling"});
  budget.entries.push_back({error_source_name(ErrorSource::motional),
                            motional_contribution(params), "analytic_scaling"});

  budget.total = 0.0;
  for (const auto& e : budget.entries) budget.total += e.contribution;
  return budget;
}

}  // namespace rydion
