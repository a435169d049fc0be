#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace asqg {

/// Closed-form nonnegative coefficient preset: constant, polynomial in t,
/// or piecewise-constant. Evaluable at any t with an exact integral.
class CoeffFn {
 public:
  static CoeffFn constant(double c);
  static CoeffFn polynomial(std::vector<double> coeffs);  // sum c_i t^i
  static CoeffFn piecewise(std::vector<double> breakpoints,
                           std::vector<double> values);  // values.size()==breaks.size()+1

  double operator()(double t) const;
  double integral(double a, double b) const;
  bool nonnegative_on(double T, int grid = 1024) const;

 private:
  enum class Kind { Constant, Polynomial, Piecewise } kind_ = Kind::Constant;
  std::vector<double> data_;    // poly coeffs or piecewise values
  std::vector<double> breaks_;  // piecewise breakpoints
};

/// Hypotheses of the logarithmic Gronwall inequality:
///   A' + B <= [l + m ln(A+e) + n (ln(A+B+e))^alpha](A+e) + f,
///   B >= C1 A^gamma,   n <= K (A+B+e)^beta.
struct GronwallProblem {
  CoeffFn l, m, n, f;
  double alpha = 1.5;  // log power, > 1 in the certified estimate (alpha <= 1 accepted)
  double gamma = 2.0;  // > 1
  double beta = 0.0;   // in [0, (gamma-1)/gamma), strict
  double C1 = 1.0;     // > 0
  double K = 0.0;      // >= 0
  double T = 1.0;

  void validate() const;  // throws std::invalid_argument
};

/// Explicit boundedness certificate assembled from the proof construction:
/// transformed variables A1 = A+e+sigma, B1 = A+B+e+sigma, the comparison
/// function F, and the Gronwall-integrated bound X(t).
struct GronwallCertificate {
  bool ok = false;
  std::string failure;

  double sigma = 0;
  double theta1 = 0, theta2 = 0;
  double C2 = 1, C3 = 1;
  double Cstar = 0;      // absorbed Young-splitting remainder
  double C_absorbed = 0; // 1 + Cstar, the constant term in the final ODE
  double X0 = 0;         // ln(e + sigma), i.e. the A(0)=0 baseline

  // Bound evaluation (log domain to avoid overflow of e^X):
  //   A(t) <= exp(X(t)),  int_0^t B <= 2 X(t) exp(X(t)).
  double X(double t, double A0) const;
  double A_bound_log(double t, double A0) const { return X(t, A0); }
  double B_integral_bound_log(double t, double A0) const;

  GronwallProblem problem;  // retained for coefficient integrals
};

GronwallCertificate build_certificate(const GronwallProblem& problem);

struct TrajectorySample {
  double t = 0;
  double A = 0;
  double B = 0;
  double Aprime = 0;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  bool truncated = false;  // overflow before T
};

struct TrajectoryVerdict {
  bool hypotheses_ok = false;
  bool bound_ok = false;
  double margin = 0;  // min over samples of (A_bound - A)/A_bound
};

TrajectoryVerdict verify_trajectory(const GronwallProblem& problem,
                                    const GronwallCertificate& cert,
                                    const Trajectory& traj);

enum class TrajectoryMode { Saturating, Decaying, RandomCoefficient };

/// Integrates A' = RHS(problem, A, B) - B with B = C1 A^gamma by classical
/// RK4 at dt = 1e-4; deterministic in seed (seed picks A(0)).
Trajectory synth_trajectory(const GronwallProblem& problem, TrajectoryMode mode,
                            std::uint64_t seed);

}  // namespace asqg
