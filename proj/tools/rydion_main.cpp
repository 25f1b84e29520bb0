#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "rydion/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rydion: Rydberg-ion entangling gate simulation toolkit"};
  app.require_subcommand(1);

  rydion::CommandOptions opts;
  const char* env_out = std::getenv("RYDION_OUT");
  if (env_out) opts.out_dir = env_out;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opts.config_path, "config file (JSON)")
        ->required();
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--seed", opts.seed, "RNG seed (overrides config)")
        ->each([&](const std::string&) { opts.seed_given = true; });
    cmd->add_option("--format", opts.format, "csv | json | both")
        ->check(CLI::IsMember({"csv", "json", "both"}));
  };

  auto* rabi = app.add_subcommand("rabi", "one- and two-ion Rabi oscillations");
  auto* gate = app.add_subcommand("gate", "double-STIRAP controlled-phase gate");
  auto* phonons = app.add_subcommand("phonons", "crystal modes and coherence");
  auto* bbr = app.add_subcommand("bbr", "black-body ionisation rates");
  auto* budget = app.add_subcommand("budget", "gate error budget");
  for (auto* cmd : {rabi, gate, phonons, bbr, budget}) add_common(cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (rabi->parsed()) rydion::cmd_rabi(opts);
    if (gate->parsed()) rydion::cmd_gate(opts);
    if (phonons->parsed()) rydion::cmd_phonons(opts);
    if (bbr->parsed()) rydion::cmd_bbr(opts);
    if (budget->parsed()) rydion::cmd_budget(opts);
  } catch (const rydion::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const rydion::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
