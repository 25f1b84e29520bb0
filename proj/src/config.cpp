#include "rydion/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "rydion/units.hpp"

namespace rydion {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& path) {
  if (!obj.is_object()) throw ConfigError(path + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key()))
      throw ConfigError("unknown key '" + path + "." + it.key() + "'");
  }
}

double get_number(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number())
    throw ConfigError("missing or non-numeric '" + path + "." + key + "'");
  return it->get<double>();
}

double opt_number(const json& obj, const char* key, double def) {
  const auto it = obj.find(key);
  if (it == obj.end()) return def;
  if (!it->is_number()) throw ConfigError(std::string("non-numeric '") + key + "'");
  return it->get<double>();
}

int opt_int(const json& obj, const char* key, int def) {
  const auto it = obj.find(key);
  if (it == obj.end()) return def;
  if (!it->is_number_integer())
    throw ConfigError(std::string("non-integer '") + key + "'");
  return it->get<int>();
}

double positive(double v, const std::string& what) {
  if (v <= 0) throw ConfigError(what + " must be positive");
  return v;
}

double angular_mhz(const json& obj, const char* key, double def_mhz) {
  return units::mhz_to_angular(opt_number(obj, key, def_mhz));
}

// One decay rate from either gamma_<x>_mhz (angular 2pi*MHz) or tau_<x>_us.
double decay_rate(const json& obj, const std::string& gamma_key,
                  const std::string& tau_key, double def_rate,
                  const std::string& path) {
  const bool has_gamma = obj.contains(gamma_key);
  const bool has_tau = obj.contains(tau_key);
  if (has_gamma && has_tau)
    throw ConfigError(path + ": give " + gamma_key + " or " + tau_key +
                      ", not both");
  if (has_gamma)
    return units::mhz_to_angular(get_number(obj, gamma_key.c_str(), path));
  if (has_tau)
    return 1.0 / positive(get_number(obj, tau_key.c_str(), path), tau_key);
  return def_rate;
}

LevelScheme parse_levels(const json& obj) {
  check_keys(obj,
             {"gamma_e_mhz", "tau_e_us", "gamma_s_mhz", "tau_s_us",
              "gamma_p_mhz", "tau_p_us"},
             "levels");
  LevelScheme scheme;
  scheme.gamma_e =
      decay_rate(obj, "gamma_e_mhz", "tau_e_us", units::mhz_to_angular(4.5),
                 "levels");
  scheme.gamma_s = decay_rate(obj, "gamma_s_mhz", "tau_s_us", 1.0 / 3.5, "levels");
  scheme.gamma_p = decay_rate(obj, "gamma_p_mhz", "tau_p_us", 1.0 / 12.0, "levels");
  scheme.validate();
  return scheme;
}

RydbergPair parse_pair(const json& obj) {
  check_keys(obj, {"n", "z", "separation_um", "dipole_scale", "dipole_cm"},
             "pair");
  RydbergPair pair;
  pair.n = opt_int(obj, "n", 46);
  pair.z = opt_int(obj, "z", 2);
  pair.separation_um = opt_number(obj, "separation_um", 4.2);
  pair.dipole_scale = opt_number(obj, "dipole_scale", 1.0);
  pair.dipole_cm = opt_number(obj, "dipole_cm", 0.0);
  pair.validate();
  return pair;
}

MicrowaveField parse_mw(const json& obj, const std::string& path) {
  check_keys(obj, {"omega_mw_mhz", "delta_mw_mhz"}, path);
  MicrowaveField mw;
  mw.omega_mw = angular_mhz(obj, "omega_mw_mhz", 0.0);
  mw.delta_mw = angular_mhz(obj, "delta_mw_mhz", 0.0);
  mw.validate();
  return mw;
}

NoiseModel parse_noise(const json& obj) {
  check_keys(obj,
             {"linewidth1_khz", "linewidth2_khz", "mw_fractional_sigma",
              "shots"},
             "noise");
  NoiseModel noise;
  noise.gamma1 = units::mhz_to_angular(opt_number(obj, "linewidth1_khz", 0.0) * 1e-3);
  noise.gamma2 = units::mhz_to_angular(opt_number(obj, "linewidth2_khz", 0.0) * 1e-3);
  noise.mw_fractional_sigma = opt_number(obj, "mw_fractional_sigma", 0.0);
  noise.shots = opt_int(obj, "shots", 200);
  noise.validate();
  return noise;
}

}  // namespace

RunConfig parse_config_text(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  check_keys(root,
             {"schema_version", "seed", "levels", "pair", "mw", "noise", "ode",
              "rabi", "gate", "phonons", "bbr", "budget"},
             "config");

  RunConfig cfg;
  cfg.schema_version = opt_int(root, "schema_version", -1);
  if (cfg.schema_version != 1)
    throw ConfigError("config must declare schema_version 1");
  if (root.contains("seed")) {
    if (!root["seed"].is_number_unsigned())
      throw ConfigError("seed must be a nonnegative integer");
    cfg.seed = root["seed"].get<std::uint64_t>();
  }
  if (root.contains("levels")) cfg.scheme = parse_levels(root["levels"]);
  if (root.contains("pair")) cfg.pair = parse_pair(root["pair"]);
  if (root.contains("mw")) cfg.mw = parse_mw(root["mw"], "mw");
  if (root.contains("noise")) cfg.noise = parse_noise(root["noise"]);
  cfg.noise.seed = cfg.seed;

  if (root.contains("ode")) {
    const json& o = root["ode"];
    check_keys(o, {"rtol", "atol", "max_step_us"}, "ode");
    cfg.ode.rtol = positive(opt_number(o, "rtol", 1e-8), "ode.rtol");
    cfg.ode.atol = positive(opt_number(o, "atol", 1e-10), "ode.atol");
    cfg.ode.max_step = opt_number(o, "max_step_us", 0.0);
  }

  if (root.contains("rabi")) {
    const json& o = root["rabi"];
    check_keys(o, {"delta_mhz", "span_us", "points", "panels"}, "rabi");
    cfg.rabi.present = true;
    cfg.rabi.delta = positive(angular_mhz(o, "delta_mhz", 0.0), "rabi.delta_mhz");
    cfg.rabi.span_us = positive(opt_number(o, "span_us", 6.0), "rabi.span_us");
    cfg.rabi.points = opt_int(o, "points", 361);
    if (cfg.rabi.points < 16) throw ConfigError("rabi.points must be >= 16");
    if (!o.contains("panels") || !o["panels"].is_array() || o["panels"].empty())
      throw ConfigError("rabi.panels must be a non-empty array");
    for (const auto& pj : o["panels"]) {
      check_keys(pj,
                 {"label", "omega_mw_mhz", "delta_mw_mhz", "omega1_mhz",
                  "omega2_mhz"},
                 "rabi.panels[]");
      RabiPanel panel;
      if (!pj.contains("label") || !pj["label"].is_string())
        throw ConfigError("rabi panel needs a string label");
      panel.label = pj["label"].get<std::string>();
      panel.mw.omega_mw = angular_mhz(pj, "omega_mw_mhz", 0.0);
      panel.mw.delta_mw = angular_mhz(pj, "delta_mw_mhz", 0.0);
      panel.omega1 = positive(angular_mhz(pj, "omega1_mhz", 0.0), "omega1_mhz");
      panel.omega2 = positive(angular_mhz(pj, "omega2_mhz", 0.0), "omega2_mhz");
      panel.mw.validate();
      cfg.rabi.panels.push_back(std::move(panel));
    }
  }

  if (root.contains("gate")) {
    const json& o = root["gate"];
    check_keys(o,
               {"omega1_max_mhz", "omega2_max_mhz", "delta_mhz", "duration_us",
                "grid_points", "analyzer_points"},
               "gate");
    cfg.gate.present = true;
    cfg.gate.omega1_max =
        positive(angular_mhz(o, "omega1_max_mhz", 0.0), "gate.omega1_max_mhz");
    cfg.gate.omega2_max =
        positive(angular_mhz(o, "omega2_max_mhz", 0.0), "gate.omega2_max_mhz");
    cfg.gate.delta = angular_mhz(o, "delta_mhz", 0.0);
    cfg.gate.duration_us = opt_number(o, "duration_us", 0.0);
    cfg.gate.grid_points = opt_int(o, "grid_points", 401);
    cfg.gate.analyzer_points = opt_int(o, "analyzer_points", 24);
  }

  if (root.contains("phonons")) {
    const json& o = root["phonons"];
    check_keys(o,
               {"kind", "n_ions", "mass_amu", "spacing_um", "xi", "trap_mhz",
                "central_spacing_um", "interaction_mhz", "temperatures_uk",
                "gate_time_convention", "t_max_us", "points", "n_sweep"},
               "phonons");
    cfg.phonons.present = true;
    IonCrystal& c = cfg.phonons.crystal;
    const std::string kind = o.value("kind", "harmonic_1d");
    if (kind == "harmonic_1d") {
      c.kind = CrystalKind::harmonic_1d;
    } else if (kind == "equal_spaced") {
      c.kind = CrystalKind::equal_spaced;
    } else {
      throw ConfigError("phonons.kind must be harmonic_1d or equal_spaced");
    }
    c.n_ions = opt_int(o, "n_ions", 2);
    c.mass_amu = opt_number(o, "mass_amu", 88.0);
    c.spacing_um = opt_number(o, "spacing_um", 5.0);
    c.xi = opt_number(o, "xi", 1.0);
    c.omega_trap = angular_mhz(o, "trap_mhz", 0.0);
    cfg.phonons.central_spacing_um = opt_number(o, "central_spacing_um", 0.0);
    if (c.kind == CrystalKind::harmonic_1d && cfg.phonons.central_spacing_um > 0)
      c.omega_trap = trap_frequency_for_central_spacing(
          c.n_ions, cfg.phonons.central_spacing_um, c.mass_amu);
    c.validate();
    cfg.phonons.interaction =
        positive(angular_mhz(o, "interaction_mhz", 0.0), "interaction_mhz");
    if (o.contains("temperatures_uk")) {
      for (const auto& v : o["temperatures_uk"])
        cfg.phonons.temperatures_uk.push_back(v.get<double>());
    } else {
      cfg.phonons.temperatures_uk = {100.0};
    }
    const std::string conv = o.value("gate_time_convention", "pi_over_v");
    if (conv == "pi_over_v") {
      cfg.phonons.convention = GateTimeConvention::pi_over_v;
    } else if (conv == "stirap_area") {
      cfg.phonons.convention = GateTimeConvention::stirap_area;
    } else {
      throw ConfigError("gate_time_convention must be pi_over_v or stirap_area");
    }
    cfg.phonons.t_max_us = positive(opt_number(o, "t_max_us", 2.0), "t_max_us");
    cfg.phonons.points = opt_int(o, "points", 400);
    if (o.contains("n_sweep"))
      for (const auto& v : o["n_sweep"])
        cfg.phonons.n_sweep.push_back(v.get<int>());
  }

  if (root.contains("bbr")) {
    const json& o = root["bbr"];
    check_keys(o,
               {"l", "n_min", "n_max", "temperatures_k", "tb_n", "tb_min_k",
                "tb_max_k", "tb_points"},
               "bbr");
    cfg.bbr.present = true;
    cfg.bbr.l = opt_int(o, "l", 0);
    cfg.bbr.n_min = opt_int(o, "n_min", 30);
    cfg.bbr.n_max = opt_int(o, "n_max", 90);
    if (cfg.bbr.n_min < 1 || cfg.bbr.n_max < cfg.bbr.n_min)
      throw ConfigError("bbr n range invalid");
    if (o.contains("temperatures_k")) {
      for (const auto& v : o["temperatures_k"])
        cfg.bbr.temperatures_k.push_back(v.get<double>());
    } else {
      cfg.bbr.temperatures_k = {100.0, 200.0, 300.0};
    }
    cfg.bbr.tb_n = opt_int(o, "tb_n", 46);
    cfg.bbr.tb_min_k = opt_number(o, "tb_min_k", 1.0);
    cfg.bbr.tb_max_k = opt_number(o, "tb_max_k", 400.0);
    cfg.bbr.tb_points = opt_int(o, "tb_points", 80);
    if (cfg.bbr.tb_points < 2) throw ConfigError("bbr.tb_points must be >= 2");
  }

  if (root.contains("budget")) {
    const json& o = root["budget"];
    check_keys(o,
               {"scenario", "polarisability", "minus_state_bound", "motional"},
               "budget");
    cfg.budget.present = true;
    cfg.budget.scenario = o.value("scenario", "custom");
    cfg.budget.polarisability = opt_number(o, "polarisability", 0.0);
    cfg.budget.minus_state_bound = opt_number(o, "minus_state_bound", 1e-4);
    if (o.contains("motional")) {
      const json& m = o["motional"];
      check_keys(m,
                 {"n_ions", "central_spacing_um", "temperature_uk",
                  "interaction_mhz"},
                 "budget.motional");
      cfg.budget.motional.n_ions = opt_int(m, "n_ions", 2);
      cfg.budget.motional.central_spacing_um =
          opt_number(m, "central_spacing_um", 4.2);
      cfg.budget.motional.temperature_uk = opt_number(m, "temperature_uk", 12.7);
      cfg.budget.motional.interaction = angular_mhz(m, "interaction_mhz", 0.0);
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

GateParams gate_params_from(const RunConfig& config) {
  if (!config.gate.present)
    throw ConfigError("config has no 'gate' section");
  GateParams p;
  p.scheme = config.scheme;
  p.pair = config.pair;
  p.mw = config.mw;
  p.noise = config.noise;
  p.ode = config.ode;
  p.pulse.shape = PulseShape::double_stirap_sinusoid;
  p.pulse.omega1_max = config.gate.omega1_max;
  p.pulse.omega2_max = config.gate.omega2_max;
  p.pulse.delta = config.gate.delta;
  p.pulse.duration = config.gate.duration_us;
  p.grid_points = config.gate.grid_points;
  p.analyzer_points = config.gate.analyzer_points;
  return p;
}

ScenarioParams scenario_from(const RunConfig& config) {
  if (!config.budget.present)
    throw ConfigError("config has no 'budget' section");
  ScenarioParams s;
  s.label = config.budget.scenario;
  s.gate = gate_params_from(config);
  s.motional = config.budget.motional;
  s.polarisability_error = config.budget.polarisability;
  s.minus_state_bound = config.budget.minus_state_bound;
  return s;
}

}  // namespace rydion
