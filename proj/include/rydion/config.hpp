#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rydion/budget.hpp"
#include "rydion/crystal.hpp"
#include "rydion/gate.hpp"

namespace rydion {

// Parsed run configuration. Config files are JSON with schema_version 1;
// ordinary frequencies are quoted in MHz (keys *_mhz) or kHz (*_khz) and
// converted to angular rad/us on load; lifetimes (keys tau_*_us) convert to
// rates 1/tau. Unknown keys anywhere are rejected.
struct RunConfig {
  int schema_version = 1;
  std::uint64_t seed = 0;

  LevelScheme scheme;
  RydbergPair pair;
  MicrowaveField mw;
  NoiseModel noise;
  EvolveOptions ode;

  struct RabiSection {
    bool present = false;
    double delta = 0.0;  // rad/us
    double span_us = 6.0;
    int points = 361;
    std::vector<RabiPanel> panels;
  } rabi;

  struct GateSection {
    bool present = false;
    double omega1_max = 0.0;  // rad/us
    double omega2_max = 0.0;
    double delta = 0.0;
    double duration_us = 0.0;  // 0 = 8 pi / (3 V)
    int grid_points = 401;
    int analyzer_points = 24;
  } gate;

  struct PhononSection {
    bool present = false;
    IonCrystal crystal;
    double central_spacing_um = 0.0;  // harmonic: sets omega_trap when > 0
    double interaction = 0.0;         // rad/us
    std::vector<double> temperatures_uk;
    GateTimeConvention convention = GateTimeConvention::pi_over_v;
    double t_max_us = 2.0;
    int points = 400;
    std::vector<int> n_sweep;
  } phonons;

  struct BbrSection {
    bool present = false;
    int l = 0;
    int n_min = 30;
    int n_max = 90;
    std::vector<double> temperatures_k;
    int tb_n = 46;
    double tb_min_k = 1.0;
    double tb_max_k = 400.0;
    int tb_points = 80;
  } bbr;

  struct BudgetSection {
    bool present = false;
    std::string scenario = "custom";
    double polarisability = 0.0;
    double minus_state_bound = 1e-4;
    MotionalScenario motional;
  } budget;
};

RunConfig parse_config_text(const std::string& json_text);
RunConfig load_config(const std::string& path);

// Gate parameters assembled from the shared and gate sections.
GateParams gate_params_from(const RunConfig& config);

// Budget scenario assembled from the shared, gate, and budget sections.
ScenarioParams scenario_from(const RunConfig& config);

}  // namespace rydion
