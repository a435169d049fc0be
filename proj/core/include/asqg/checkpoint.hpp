#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "asqg/solver.hpp"

namespace asqg {

struct CheckpointError : std::runtime_error {
  enum class Kind { MagicMismatch, VersionMismatch, Truncated, Io } kind;
  CheckpointError(Kind k, const std::string& what_)
      : std::runtime_error(what_), kind(k) {}
};

/// Binary checkpoint: magic "ASQG", u32 version, u32 n1, u32 n2, f64
/// t/alpha/beta/mu/nu, then n1*n2 little-endian f64 real-space samples,
/// row-major with x2 as the outer index.
std::vector<std::uint8_t> save_checkpoint(const SolverState& state,
                                          const SimulationConfig& config);
struct LoadedCheckpoint {
  SolverState state{0, SpectralField(nullptr), 0};
  double alpha = 0, beta = 0, mu = 0, nu = 0;
  /// Raw payload as stored; bitwise identical to what save wrote.
  std::vector<double> samples;
};
LoadedCheckpoint load_checkpoint(const std::vector<std::uint8_t>& bytes);

void write_checkpoint_file(const std::string& path, const SolverState& state,
                           const SimulationConfig& config);
LoadedCheckpoint read_checkpoint_file(const std::string& path);

}  // namespace asqg
