#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asqg/random_field.hpp"

namespace asqg {

enum class CaseId {
  InterpL2A,    // ||L^s_{xi} f||_2 <= ||f||^{1-s/(d+1)} ||L^d_{xi} di f||^{s/(d+1)}
  InterpL2B,    // ||L^g_{xi} f||_2 <= ||f||^{1-g/r} ||L^r_{xi} f||^{g/r}
  InterpLinfA,  // ||di f||_{2(g+1)} <= C ||f||_inf^{g/(g+1)} ||L^g_{xi} di f||^{1/(g+1)}
  InterpLinfB,  // ||L^d_{xi} f||_{2(r+1)/d} <= C ||f||_inf^{1-d/(r+1)} ||L^r_{xi} di f||^{d/(r+1)}
  TripleMixed,  // int |f g h| <= C ||f||_{Lq_x2 Lp_x1} ...
  TripleL2,     // p = q = 2 special case
  Commutator,   // || L^s(fg) - g L^s f - f L^s g ||_p <= C ||g||_inf ||L^s f||_p
  LogSobolev,   // ||f||_inf <= C (1 + ||f||_2 + ||f||_B ln(e + ||L^s f||_2))
  AnisoLinf     // ||h||_inf <= C ||h||_2^{1-...} ||L^d1_{x1}h||^{1/(2d1)} ||L^d2_{x2}h||^{1/(2d2)}
};

std::string case_name(CaseId id);
std::optional<CaseId> case_from_name(const std::string& name);

struct SamplePolicy {
  ZeroModePolicy strip = ZeroModePolicy::Keep;
  SpectrumProfile profile = SpectrumProfile::Flat;
  double decay_rate = 0.0;
  /// kmax as a fraction of the grid size (products stay alias-free for the
  /// commutator case at 1/5).
  double kmax_fraction = 1.0 / 3.0;
};

struct InequalityCase {
  CaseId id;
  /// Fixed inequality parameters; campaign samples draw any absent parameter
  /// uniformly from the inequality's valid range.
  std::map<std::string, double> params;
  SamplePolicy policy;

  static InequalityCase make(CaseId id);  // default policy per case
};

/// Validates a fully-specified parameter set against the inequality's range.
void validate_params(CaseId id, const std::map<std::string, double>& params);

struct EvalResult {
  double lhs = 0;
  std::vector<double> rhs_factors;  // with exponents already applied
  double rhs = 0;                   // product of the factors
  double ratio = 0;                 // lhs / rhs for non-degenerate samples
  bool degenerate = false;          // rhs == 0 and lhs == 0
  bool violation = false;           // rhs == 0 with lhs > 0
};

EvalResult eval_case(const InequalityCase& c,
                     const std::map<std::string, double>& params,
                     const std::vector<SpectralField>& fields);

/// Number of input fields the case consumes (1, 2 or 3).
int case_arity(CaseId id);

struct ResolutionStats {
  int resolution = 0;
  int samples = 0;
  double max_ratio = 0;
  double mean_ratio = 0;
  double q50 = 0, q90 = 0, q99 = 0;
  int degenerate = 0;
  int violations = 0;
};

struct InequalityReport {
  CaseId id;
  int samples_per_resolution = 0;
  std::vector<ResolutionStats> per_resolution;
  double max_ratio = 0;
  int degenerate = 0;
  int violations = 0;
  /// (max ratio at finest resolution) / (max ratio at coarsest).
  double resolution_stability = 0;
};

InequalityReport run_campaign(const InequalityCase& c, int samples,
                              const std::vector<int>& resolutions,
                              std::uint64_t seed);

struct LogSobolevCheck {
  double lhs = 0;          // ||f||_inf
  double rhs_with_C1 = 0;  // 1 + ||f||_2 + besov(f) ln(e + ||L^sigma f||_2)
  double implied_C = 0;
};

LogSobolevCheck log_sobolev_check(const SpectralField& f, double sigma);

}  // namespace asqg
