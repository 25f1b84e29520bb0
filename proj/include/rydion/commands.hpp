#pragma once

#include <string>

#include "rydion/config.hpp"

namespace rydion {

struct CommandOptions {
  std::string config_path;
  std::string out_dir = "./out";
  std::uint64_t seed = 0;
  bool seed_given = false;  // CLI --seed overrides the config seed
  std::string format = "both";  // csv | json | both
};

// Each command loads the config, runs its experiment, and writes CSV curve
// files plus a JSON report into out_dir. They throw ConfigError /
// NumericalError; the CLI maps those to exit codes 2 / 3.
void cmd_rabi(const CommandOptions& opts);
void cmd_gate(const CommandOptions& opts);
void cmd_phonons(const CommandOptions& opts);
void cmd_bbr(const CommandOptions& opts);
void cmd_budget(const CommandOptions& opts);

}  // namespace rydion
