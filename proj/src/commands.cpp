#include "rydion/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "json.hpp"
#include "rydion/bbr.hpp"
#include "rydion/units.hpp"

namespace rydion {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kSchemaVersion = 1;

RunConfig load_for(const CommandOptions& opts) {
  RunConfig cfg = load_config(opts.config_path);
  if (opts.seed_given) {
    cfg.seed = opts.seed;
    cfg.noise.seed = opts.seed;
  }
  return cfg;
}

bool want_csv(const CommandOptions& o) {
  return o.format == "csv" || o.format == "both";
}
bool want_json(const CommandOptions& o) {
  return o.format == "json" || o.format == "both";
}

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void write_csv(const CommandOptions& opts, const std::string& name,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  if (!want_csv(opts)) return;
  fs::create_directories(opts.out_dir);
  const fs::path path = fs::path(opts.out_dir) / name;
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  for (std::size_t i = 0; i < header.size(); ++i)
    out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << fmt_g(row[i]);
    out << "\n";
  }
  std::cout << "wrote " << path.string() << "\n";
}

void write_json(const CommandOptions& opts, const std::string& name,
                json report) {
  if (!want_json(opts)) return;
  fs::create_directories(opts.out_dir);
  const fs::path path = fs::path(opts.out_dir) / name;
  report["schema_version"] = kSchemaVersion;
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << report.dump(2) << "\n";
  std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

void cmd_rabi(const CommandOptions& opts) {
  const RunConfig cfg = load_for(opts);
  if (!cfg.rabi.present) throw ConfigError("config has no 'rabi' section");

  RabiSettings settings;
  settings.scheme = cfg.scheme;
  settings.pair = cfg.pair;
  settings.noise = cfg.noise;
  settings.delta = cfg.rabi.delta;
  settings.span_us = cfg.rabi.span_us;
  settings.points = cfg.rabi.points;
  settings.ode = cfg.ode;

  json panels_report = json::object();
  for (const auto& panel : cfg.rabi.panels) {
    const RabiCurves curves = rabi_experiment(settings, panel);

    std::vector<std::vector<double>> rows;
    rows.reserve(curves.t_us.size());
    for (std::size_t i = 0; i < curves.t_us.size(); ++i)
      rows.push_back({curves.t_us[i] * 1e3, curves.p_single[i], curves.p_rr[i],
                      curves.p_symmetric[i], curves.p_return[i]});
    write_csv(opts, "rabi_" + panel.label + ".csv",
              {"t_ns", "p_single", "p_rr", "p_symmetric", "p_return"}, rows);

    const OscillationFit single = fit_oscillation(curves.t_us, curves.p_single);
    const OscillationFit collective =
        fit_oscillation(curves.t_us, curves.p_return);
    const OscillationFit symmetric =
        fit_oscillation(curves.t_us, curves.p_symmetric);

    // |rr> population at the first single-ion excitation peak.
    std::size_t peak = 0;
    for (std::size_t i = 1; i < curves.t_us.size(); ++i) {
      if (curves.p_single[i] > curves.p_single[peak]) peak = i;
      if (curves.p_single[i] < 0.5 * curves.p_single[peak] &&
          curves.p_single[peak] > 0.2)
        break;  // past the first maximum
    }

    json pj;
    pj["single_mhz"] = units::angular_to_mhz(single.omega);
    pj["collective_mhz"] = units::angular_to_mhz(collective.omega);
    pj["symmetric_mhz"] = units::angular_to_mhz(symmetric.omega);
    pj["ratio"] = collective.omega / single.omega;
    pj["rr_at_first_peak"] = curves.p_rr[peak];
    pj["first_peak_t_ns"] = curves.t_us[peak] * 1e3;
    pj["interaction_mhz"] = units::angular_to_mhz(curves.interaction);
    pj["v_over_vmax"] = curves.interaction / cfg.pair.v_max();
    panels_report[panel.label] = pj;
  }

  json report;
  report["seed"] = cfg.seed;
  report["panels"] = panels_report;
  write_json(opts, "rabi_summary.json", report);
}

void cmd_gate(const CommandOptions& opts) {
  const RunConfig cfg = load_for(opts);
  GateParams params = gate_params_from(cfg);
  if (!dressing_perturbative(params.mw, params.pair))
    std::cerr << "warning: omega_mw < 10 V_max; first-order dressing is "
                 "marginal\n";
  const GateResult result = run_gate(params);

  std::vector<std::vector<double>> rr_rows;
  for (std::size_t i = 0; i < result.t_us.size(); ++i)
    rr_rows.push_back({result.t_us[i] * 1e3, result.rr_population[i]});
  write_csv(opts, "gate_rr.csv", {"t_ns", "p_rr"}, rr_rows);

  std::vector<std::vector<double>> parity_rows;
  for (std::size_t i = 0; i < result.parity_phases.size(); ++i)
    parity_rows.push_back({result.parity_phases[i], result.parity[i]});
  write_csv(opts, "gate_parity.csv", {"theta_rad", "parity"}, parity_rows);

  std::vector<double> phases;
  for (int i = 0; i < 17; ++i)
    phases.push_back(2.0 * units::pi * i / 17.0);
  const ConditionalPhaseScan scan = conditional_phase_scan(result, phases);
  std::vector<std::vector<double>> cond_rows;
  for (std::size_t i = 0; i < phases.size(); ++i)
    cond_rows.push_back(
        {phases[i], scan.p0_given_ion1_0[i], scan.p0_given_ion1_1[i]});
  write_csv(opts, "gate_conditional.csv",
            {"theta_rad", "p0_given_ion1_0", "p0_given_ion1_1"}, cond_rows);

  json report;
  report["seed"] = cfg.seed;
  report["fidelity"] = result.fidelity;
  report["population"] = result.population;
  report["coherence"] = result.coherence;
  report["phi_rad"] = result.phi;
  report["conditional_phase_difference_rad"] = scan.phase_difference;
  report["gate_time_ns"] = result.t_us.back() * 1e3;
  report["interaction_mhz"] =
      units::angular_to_mhz(interaction_strength(params.mw, params.pair));
  write_json(opts, "gate_report.json", report);
}

void cmd_phonons(const CommandOptions& opts) {
  const RunConfig cfg = load_for(opts);
  if (!cfg.phonons.present) throw ConfigError("config has no 'phonons' section");
  const auto& ph = cfg.phonons;
  const IonCrystal& crystal = ph.crystal;

  const ModeSpectrum modes = mode_spectrum(crystal);
  std::vector<std::vector<double>> mode_rows;
  for (std::size_t p = 0; p < modes.frequencies.size(); ++p)
    mode_rows.push_back({static_cast<double>(p),
                         units::angular_to_mhz(modes.frequencies[p]),
                         modes.lengths_nm[p]});
  write_csv(opts, "phonon_modes.csv", {"mode_index", "nu_mhz", "length_nm"},
            mode_rows);

  const int mid = crystal.n_ions / 2;
  const auto coupling =
      coupling_constants(modes, crystal, mid - 1, mid, ph.interaction);

  std::vector<double> grid(ph.points);
  for (int i = 0; i < ph.points; ++i)
    grid[i] = ph.t_max_us * i / (ph.points - 1);

  std::vector<std::vector<double>> coh_rows;
  json temps_report = json::object();
  for (double t_uk : ph.temperatures_uk) {
    const CoherenceReport rep =
        coherence_exponent(coupling, modes, t_uk, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
      coh_rows.push_back(
          {grid[i] * 1e3, t_uk, rep.exponent[i], rep.coherence(i)});
    const auto err = motional_gate_error(crystal, mid - 1, mid,
                                         ph.interaction, t_uk, ph.convention);
    json tj;
    tj["g_max"] = rep.g_max;
    tj["gate_time_ns"] = err.gate_time_us * 1e3;
    tj["g_at_gate"] = err.g_at_gate;
    tj["coherence_error"] = err.coherence_error;
    tj["phase_osc_error_rad"] = err.phase_osc_error;
    tj["phase_shift_error_rad"] = err.phase_shift_error;
    temps_report[fmt_g(t_uk)] = tj;
  }
  write_csv(opts, "phonon_coherence.csv",
            {"t_ns", "temperature_uk", "g_exponent", "coherence"}, coh_rows);

  if (!ph.n_sweep.empty()) {
    std::vector<std::vector<double>> gmax_rows;
    for (int n : ph.n_sweep) {
      IonCrystal c = crystal;
      c.n_ions = n;
      if (c.kind == CrystalKind::harmonic_1d && ph.central_spacing_um > 0)
        c.omega_trap = trap_frequency_for_central_spacing(
            n, ph.central_spacing_um, c.mass_amu);
      for (double t_uk : ph.temperatures_uk)
        gmax_rows.push_back({static_cast<double>(n), t_uk,
                             g_max_adjacent_pair(c, ph.interaction, t_uk)});
    }
    write_csv(opts, "phonon_gmax_vs_n.csv",
              {"n_ions", "temperature_uk", "g_max"}, gmax_rows);
  }

  json report;
  report["seed"] = cfg.seed;
  report["n_ions"] = crystal.n_ions;
  report["trap_mhz"] = units::angular_to_mhz(crystal.omega_trap);
  report["pair_distance_um"] = coupling.r_jk_um;
  report["interaction_mhz"] = units::angular_to_mhz(ph.interaction);
  report["temperatures"] = temps_report;
  write_json(opts, "phonon_report.json", report);
}

void cmd_bbr(const CommandOptions& opts) {
  const RunConfig cfg = load_for(opts);
  if (!cfg.bbr.present) throw ConfigError("config has no 'bbr' section");
  const auto& bb = cfg.bbr;

  if (bb.n_min < 20)
    std::cerr << "warning: semiclassical BBR rate assumes n >> 1; n < 20 "
                 "requested\n";

  std::vector<std::vector<double>> n_rows;
  json peaks = json::object();
  for (double t_k : bb.temperatures_k) {
    int n_peak = bb.n_min;
    double best = -1.0;
    for (int n = bb.n_min; n <= bb.n_max; ++n) {
      BbrQuery q;
      q.n = n;
      q.l = bb.l;
      q.temperature_k = t_k;
      const double rate = ionisation_rate(q);
      n_rows.push_back({static_cast<double>(n), t_k, rate});
      if (rate > best) {
        best = rate;
        n_peak = n;
      }
    }
    json pj;
    pj["n_at_max"] = n_peak;
    pj["max_rate_per_s"] = best;
    peaks[fmt_g(t_k)] = pj;
  }
  write_csv(opts, "bbr_n_sweep.csv", {"n", "temperature_k", "rate_per_s"},
            n_rows);

  std::vector<std::vector<double>> t_rows;
  for (int i = 0; i < bb.tb_points; ++i) {
    const double t_k =
        bb.tb_min_k + (bb.tb_max_k - bb.tb_min_k) * i / (bb.tb_points - 1);
    BbrQuery q;
    q.n = bb.tb_n;
    q.l = bb.l;
    q.temperature_k = t_k;
    t_rows.push_back({t_k, ionisation_rate(q)});
  }
  write_csv(opts, "bbr_t_sweep.csv", {"temperature_k", "rate_per_s"}, t_rows);

  json report;
  report["seed"] = cfg.seed;
  report["l"] = bb.l;
  report["threshold_omega_rad_s"] = omega_threshold(bb.tb_n);
  report["peaks"] = peaks;
  write_json(opts, "bbr_report.json", report);
}

void cmd_budget(const CommandOptions& opts) {
  const RunConfig cfg = load_for(opts);
  const ScenarioParams scenario = scenario_from(cfg);
  const ErrorBudget budget = budget_report(scenario);

  std::vector<std::vector<double>> rows;
  json entries = json::object();
  for (const auto& e : budget.entries) {
    entries[e.source] = {{"contribution", e.contribution},
                         {"method", e.method}};
  }

  if (want_csv(opts)) {
    fs::create_directories(opts.out_dir);
    const fs::path path = fs::path(opts.out_dir) / "budget.csv";
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << "source,contribution,method\n";
    for (const auto& e : budget.entries)
      out << e.source << "," << fmt_g(e.contribution) << "," << e.method
          << "\n";
    std::cout << "wrote " << path.string() << "\n";
  }

  json report;
  report["seed"] = cfg.seed;
  report["scenario"] = budget.scenario;
  report["entries"] = entries;
  report["total"] = budget.total;
  report["base_fidelity"] = budget.base_fidelity;
  report["joint_infidelity"] = budget.joint_infidelity;
  report["note"] =
      "total is the simple sum of per-source contributions; compare with "
      "joint_infidelity from the all-sources-on run";
  write_json(opts, "budget_report.json", report);
}

}  // namespace rydion
