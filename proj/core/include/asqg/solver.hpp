#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "asqg/norms.hpp"
#include "asqg/operators.hpp"
#include "asqg/random_field.hpp"

namespace asqg {

enum class VelocityLaw { Sqg, Pm };

struct PlaneWaveIC {
  int k1 = 1, k2 = 0;
  double amplitude = 1.0;
};
struct RandomIC {
  std::uint64_t seed = 0;
  int kmax = 8;
  double amplitude = 1.0;
  SpectrumProfile profile = SpectrumProfile::Decaying;
  double decay_rate = 4.0;
};
struct CheckpointIC {
  std::string path;
};

struct InitialCondition {
  enum class Kind { PlaneWave, Random, Checkpoint } kind = Kind::PlaneWave;
  PlaneWaveIC plane_wave;
  RandomIC random;
  CheckpointIC checkpoint;
};

struct SimulationConfig {
  int n1 = 64, n2 = 64;
  double alpha = 0.5, beta = 0.75;  // in (0,1]
  double mu = 1.0, nu = 1.0;
  VelocityLaw velocity_law = VelocityLaw::Sqg;
  double t_end = 1.0;
  std::optional<double> dt;          // exactly one of dt / cfl_factor
  std::optional<double> cfl_factor;
  InitialCondition initial_condition;
  int diagnostics_every = 1;

  void validate() const;  // throws std::invalid_argument
};

struct SolverState {
  double t = 0;
  SpectralField theta;
  std::int64_t step_index = 0;
};

struct DiagnosticsRecord {
  double t = 0;
  double l2 = 0, lp4 = 0, lp8 = 0, linf = 0;
  double h1 = 0, h2 = 0;
  double diss_alpha = 0, diss_beta = 0;  // ||L^a_{x1} theta||^2, ||L^b_{x2} theta||^2
  double A = 0, B = 0;
  double besov = 0;
  double energy_residual = 0;
  // Not serialized; carried for the dissipation-gradient monitor.
  GradNorms grad{};
  bool finite() const;
};

enum class AdmissibilityRegime { LowAlpha, HighAlphaLargeBeta, HighAlphaSmallBeta, None };

struct AdmissibilityVerdict {
  bool admissible = false;
  AdmissibilityRegime regime = AdmissibilityRegime::None;
  double threshold = 0;
};

/// Global-regularity condition on the dissipation exponents:
/// beta > 1/(2a+1) for a <= 1/2, beta > (1-a)/(2a) for a > 1/2.
AdmissibilityVerdict check_admissibility(double alpha, double beta);
std::string regime_name(AdmissibilityRegime r);

/// dealias(u . grad theta), derivatives spectral, products in real space.
SpectralField nonlinear_term(const SpectralField& theta, VelocityLaw law);

struct BlowUpError : std::runtime_error {
  double t;
  explicit BlowUpError(double t_)
      : std::runtime_error("solution lost finiteness at t=" + std::to_string(t_)),
        t(t_) {}
};

/// One integrating-factor RK4 step: exact exponential for the linear symbol
/// mu|k1|^{2a} + nu|k2|^{2b}, classical RK4 stages for the transport term.
SolverState step(const SolverState& state, double dt, const SimulationConfig& config);

double cfl_dt(const SolverState& state, const SimulationConfig& config);

struct RunResult {
  SimulationConfig config;
  AdmissibilityVerdict admissibility;
  bool admissibility_applicable = true;  // false when alpha or beta == 1
  std::vector<DiagnosticsRecord> records;
  bool blew_up = false;
  double blow_up_time = 0;
  double theta0_l2 = 0;
  double theta0_linf = 0;
  /// max over the run of |  ||theta||^2 + 2 int dissipation - ||theta0||^2 |
  /// (trapezoid time quadrature).
  double max_energy_defect = 0;
  SolverState final_state{0, SpectralField(nullptr), 0};
};

RunResult run(const SimulationConfig& config);
SolverState make_initial_state(const SimulationConfig& config);

struct DissipationCheck {
  bool pass = false;
  double ratio_axis1 = 0;  // lhs/rhs of the axis-1 frequency-Holder bound
  double ratio_axis2 = 0;
};

/// Checks ||d1 theta||^{2(a+1)} <= ||theta0||^{2a} ||L^a_{x1} d1 theta||^2
/// and the axis-2 analogue, the torus form behind B >= C^{-1} A^gamma with
/// gamma = min(a,b)+1.
DissipationCheck verify_dissipation_relation(const DiagnosticsRecord& record,
                                             double theta0_l2, double alpha,
                                             double beta, double slack = 1e-9);

}  // namespace asqg
