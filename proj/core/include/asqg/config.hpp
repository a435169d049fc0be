#pragma once

#include <stdexcept>
#include <string>

#include "asqg/solver.hpp"

namespace asqg {

struct ConfigError : std::runtime_error {
  int line;  // 1-based, 0 when not tied to a line
  std::string key;
  ConfigError(int line_, std::string key_, const std::string& what_)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_
                                     : what_),
        line(line_),
        key(std::move(key_)) {}
};

/// Key-value simulation config. Keys: grid, alpha, beta, mu, nu,
/// velocity_law, t_end, dt | cfl_factor, initial_condition,
/// diagnostics_every, seed. Unknown keys are hard errors.
SimulationConfig parse_config(const std::string& text);

std::string config_echo(const SimulationConfig& c);

}  // namespace asqg
