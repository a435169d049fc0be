#include "asqg/gronwall.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace asqg {
namespace {

constexpr double kE = 2.718281828459045;
constexpr int kGridPoints = 400;       // verification grid density (frozen)
constexpr double kA1Cap = 1e12;        // "for all sufficiently large" surrogate
constexpr double kB1Cap = 1e16;
constexpr double kC2Cap = 1e9;

double pow_pos(double base, double p) {
  return base <= 0.0 ? 0.0 : std::pow(base, p);
}

}  // namespace

CoeffFn CoeffFn::constant(double c) {
  CoeffFn f;
  f.kind_ = Kind::Constant;
  f.data_ = {c};
  return f;
}

CoeffFn CoeffFn::polynomial(std::vector<double> coeffs) {
  CoeffFn f;
  f.kind_ = Kind::Polynomial;
  f.data_ = std::move(coeffs);
  if (f.data_.empty()) f.data_.push_back(0.0);
  return f;
}

CoeffFn CoeffFn::piecewise(std::vector<double> breakpoints,
                           std::vector<double> values) {
  if (values.size() != breakpoints.size() + 1) {
    throw std::invalid_argument("piecewise coefficient needs breaks+1 values");
  }
  if (!std::is_sorted(breakpoints.begin(), breakpoints.end())) {
    throw std::invalid_argument("piecewise breakpoints must be ascending");
  }
  CoeffFn f;
  f.kind_ = Kind::Piecewise;
  f.breaks_ = std::move(breakpoints);
  f.data_ = std::move(values);
  return f;
}

double CoeffFn::operator()(double t) const {
  switch (kind_) {
    case Kind::Constant:
      return data_[0];
    case Kind::Polynomial: {
      double v = 0;
      for (auto it = data_.rbegin(); it != data_.rend(); ++it) v = v * t + *it;
      return v;
    }
    case Kind::Piecewise: {
      const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
      return data_[size_t(it - breaks_.begin())];
    }
  }
  return 0;
}

double CoeffFn::integral(double a, double b) const {
  if (b < a) return -integral(b, a);
  switch (kind_) {
    case Kind::Constant:
      return data_[0] * (b - a);
    case Kind::Polynomial: {
      double va = 0, vb = 0;
      for (size_t i = data_.size(); i-- > 0;) {
        const double c = data_[i] / double(i + 1);
        va = va * a + c;
        vb = vb * b + c;
      }
      return vb * b - va * a;
    }
    case Kind::Piecewise: {
      double acc = 0;
      double lo = a;
      for (size_t i = 0; i < breaks_.size() && lo < b; ++i) {
        if (breaks_[i] <= lo) continue;
        const double hi = std::min(breaks_[i], b);
        acc += data_[i] * (hi - lo);
        lo = hi;
      }
      if (lo < b) acc += data_.back() * (b - lo);
      return acc;
    }
  }
  return 0;
}

bool CoeffFn::nonnegative_on(double T, int grid) const {
  for (int i = 0; i <= grid; ++i) {
    if ((*this)(T * double(i) / double(grid)) < 0.0) return false;
  }
  return true;
}

void GronwallProblem::validate() const {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (!(gamma > 1.0)) throw std::invalid_argument("gamma must exceed 1");
  if (!(beta >= 0.0) || !(beta < (gamma - 1.0) / gamma)) {
    throw std::invalid_argument("beta must lie in [0, (gamma-1)/gamma)");
  }
  if (!(C1 > 0.0)) throw std::invalid_argument("C1 must be positive");
  if (!(K >= 0.0)) throw std::invalid_argument("K must be nonnegative");
  if (!(T > 0.0)) throw std::invalid_argument("T must be positive");
  for (const CoeffFn* c : {&l, &m, &n, &f}) {
    if (!c->nonnegative_on(T)) {
      throw std::invalid_argument("coefficient function negative on [0,T]");
    }
  }
}

namespace {

// The two pointwise inequalities the proof quantifies over "sufficiently
// large" arguments, checked on log-spaced grids capped at kA1Cap / kB1Cap.
bool proof_conditions_hold(double sigma, double C1, double C2, double C3,
                           double alpha, double gamma, double theta1,
                           double theta2) {
  const double lead_a = C2 * std::pow(C1, theta1) /
                        std::pow(2.0, (gamma - 1.0) * theta1);
  const double lo_a = kE + sigma;
  if (lo_a >= kA1Cap) return false;
  const double step_a = std::log(kA1Cap / lo_a) / double(kGridPoints - 1);
  for (int i = 0; i < kGridPoints; ++i) {
    const double A1 = lo_a * std::exp(step_a * double(i));
    const double lhs =
        lead_a * std::pow(A1, gamma * theta1 - theta2) + C3 * std::log(A1);
    const double base =
        std::log(C1) - (gamma - 1.0) * std::log(2.0) + gamma * std::log(A1);
    if (lhs < pow_pos(base, alpha)) return false;
  }
  const double lead_b = C2 * theta1 *
                        std::pow(C1 / std::pow(2.0, gamma - 1.0), theta2 / gamma);
  const double lo_b = std::max(
      C1 * std::pow(lo_a, gamma) / std::pow(2.0, gamma - 1.0), 1e-6);
  if (lo_b >= kB1Cap) return false;
  const double step_b = std::log(kB1Cap / lo_b) / double(kGridPoints - 1);
  for (int i = 0; i < kGridPoints; ++i) {
    const double B1 = lo_b * std::exp(step_b * double(i));
    const double lhs = lead_b * std::pow(B1, theta1 - theta2 / gamma);
    if (lhs < alpha * pow_pos(std::log(B1), alpha - 1.0)) return false;
  }
  return true;
}

}  // namespace

GronwallCertificate build_certificate(const GronwallProblem& problem) {
  problem.validate();
  GronwallCertificate cert;
  cert.problem = problem;
  const double gamma = problem.gamma, beta = problem.beta, alpha = problem.alpha;

  // theta1 midpoint of (beta/(gamma-1), 1-beta); the interval is nonempty
  // exactly when beta < (gamma-1)/gamma.
  cert.theta1 = 0.5 * (beta / (gamma - 1.0) + 1.0 - beta);
  cert.theta2 = beta + cert.theta1;
  cert.C3 = 1.0;

  const double sigma_floor =
      std::max(std::pow(2.0 / problem.C1, 1.0 / (gamma - 1.0)) - kE, 0.0);

  // C2 = 1 first; if no sigma below the cap closes the pointwise conditions,
  // escalate C2 (a larger C2 only loosens the final bound through Cstar, so
  // soundness is preserved).
  bool found = false;
  for (double C2 = 1.0; C2 <= kC2Cap; C2 *= 4.0) {
    auto ok = [&](double s) {
      return proof_conditions_hold(s, problem.C1, C2, cert.C3, alpha, gamma,
                                   cert.theta1, cert.theta2);
    };
    if (ok(sigma_floor)) {
      cert.sigma = sigma_floor;
      cert.C2 = C2;
      found = true;
      break;
    }
    // Coarse log scan for a passing sigma, then bisect down to the boundary.
    double hi = -1;
    for (double s = std::max(sigma_floor, 1.0); s <= kA1Cap; s *= 2.0) {
      if (ok(s)) {
        hi = s;
        break;
      }
    }
    if (hi < 0) continue;
    double lo = std::max(sigma_floor, hi / 2.0);
    for (int i = 0; i < 80; ++i) {
      const double mid = 0.5 * (lo + hi);
      (ok(mid) ? hi : lo) = mid;
    }
    cert.sigma = hi;
    cert.C2 = C2;
    found = true;
    break;
  }
  if (!found) {
    cert.ok = false;
    cert.failure =
        "no sigma below 1e12 satisfies the pointwise proof conditions "
        "(exponent configuration outside the effective range)";
    return cert;
  }

  // Absorbed remainder of the Young splitting C2*K*x^theta2 <= x/2 + Cstar,
  // maximized numerically over the grid.
  double cstar = 0;
  const double lo_x = 1e-6, hi_x = kB1Cap;
  const double step_x = std::log(hi_x / lo_x) / double(kGridPoints - 1);
  for (int i = 0; i < kGridPoints; ++i) {
    const double x = lo_x * std::exp(step_x * double(i));
    cstar = std::max(cstar,
                     cert.C2 * problem.K * std::pow(x, cert.theta2) - 0.5 * x);
  }
  cert.Cstar = cstar;
  cert.C_absorbed = 1.0 + cstar;
  cert.X0 = std::log(kE + cert.sigma);
  cert.ok = true;
  return cert;
}

double GronwallCertificate::X(double t, double A0) const {
  const double growth =
      problem.m.integral(0, t) + C3 * problem.n.integral(0, t);
  const double forcing = C_absorbed * t + problem.l.integral(0, t) +
                         problem.f.integral(0, t);
  return std::exp(growth) * (std::log(A0 + kE + sigma) + forcing);
}

double GronwallCertificate::B_integral_bound_log(double t, double A0) const {
  const double x = X(t, A0);
  return std::log(2.0) + std::log(x) + x;
}

TrajectoryVerdict verify_trajectory(const GronwallProblem& problem,
                                    const GronwallCertificate& cert,
                                    const Trajectory& traj) {
  if (!cert.ok) throw std::invalid_argument("cannot verify with a failed certificate");
  TrajectoryVerdict v;
  v.hypotheses_ok = true;
  v.bound_ok = true;
  v.margin = 1.0;
  const auto& s = traj.samples;
  if (s.empty()) return v;

  // Reject trajectories whose A' entries disagree with the A differences.
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    const double dt = s[i + 1].t - s[i].t;
    if (!(dt > 0)) throw std::invalid_argument("trajectory times must increase");
    const double fd = (s[i + 1].A - s[i].A) / dt;
    const double mid = 0.5 * (s[i].Aprime + s[i + 1].Aprime);
    const double scale = std::max({std::abs(fd), std::abs(mid), 1e-9});
    if (std::abs(fd - mid) > 0.01 * scale) {
      throw std::invalid_argument("trajectory derivative samples inconsistent");
    }
  }

  const double A0 = s.front().A;
  constexpr double slack = 1e-9;
  double b_cum = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    const double t = s[i].t, A = s[i].A, B = s[i].B;
    const double nval = problem.n(t);
    const double logA = std::log(A + kE);
    const double logAB = std::log(A + B + kE);
    const double rhs =
        (problem.l(t) + problem.m(t) * logA +
         nval * std::pow(logAB, problem.alpha)) *
            (A + kE) +
        problem.f(t);
    if (s[i].Aprime + B > rhs + slack * (1.0 + std::abs(rhs))) {
      v.hypotheses_ok = false;
    }
    const double bfloor = problem.C1 * std::pow(A, problem.gamma);
    if (B < bfloor - slack * (1.0 + bfloor)) v.hypotheses_ok = false;
    const double ncap = problem.K * std::pow(A + B + kE, problem.beta);
    if (nval > ncap + slack * (1.0 + ncap)) v.hypotheses_ok = false;

    if (i > 0) b_cum += 0.5 * (s[i].B + s[i - 1].B) * (s[i].t - s[i - 1].t);
    const double x = cert.X(t, A0);
    const double log_a = A > 0 ? std::log(A) : -1e300;
    if (log_a > x) v.bound_ok = false;
    if (b_cum > 0 && std::log(b_cum) > cert.B_integral_bound_log(t, A0)) {
      v.bound_ok = false;
    }
    v.margin = std::min(v.margin, 1.0 - std::exp(log_a - x));
  }
  return v;
}

Trajectory synth_trajectory(const GronwallProblem& problem, TrajectoryMode mode,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  double A0 = 0;
  switch (mode) {
    case TrajectoryMode::Saturating:
      A0 = 10.0 * u;
      break;
    case TrajectoryMode::Decaying:
      A0 = 0.5 + 10.0 * u;
      break;
    case TrajectoryMode::RandomCoefficient:
      A0 = std::exp(std::log(1e-2) + u * std::log(1e4));  // [1e-2, 1e2]
      break;
  }

  const bool decaying = mode == TrajectoryMode::Decaying;
  auto bval = [&](double A) { return problem.C1 * std::pow(A, problem.gamma); };
  auto deriv = [&](double t, double A) {
    const double B = bval(A);
    if (decaying) return -B;  // pure dissipation, closed-form comparison case
    const double rhs = (problem.l(t) + problem.m(t) * std::log(A + kE) +
                        problem.n(t) *
                            std::pow(std::log(A + B + kE), problem.alpha)) *
                           (A + kE) +
                       problem.f(t);
    return rhs - B;
  };

  Trajectory traj;
  const double dt = 1e-4;
  const auto steps = static_cast<long>(std::ceil(problem.T / dt - 1e-9));
  double A = A0, t = 0;
  traj.samples.push_back({0, A0, bval(A0), deriv(0, A0)});
  for (long i = 0; i < steps; ++i) {
    const double h = std::min(dt, problem.T - t);
    const double k1 = deriv(t, A);
    const double k2 = deriv(t + 0.5 * h, A + 0.5 * h * k1);
    const double k3 = deriv(t + 0.5 * h, A + 0.5 * h * k2);
    const double k4 = deriv(t + h, A + h * k3);
    A += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += h;
    if (A < 0) A = 0;  // dissipation cannot push A below zero
    if (!std::isfinite(A) || A > 1e150) {
      traj.truncated = true;
      break;
    }
    traj.samples.push_back({t, A, bval(A), deriv(t, A)});
  }
  return traj;
}

}  // namespace asqg
