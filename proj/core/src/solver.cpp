#include "asqg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "asqg/checkpoint.hpp"

namespace asqg {

void SimulationConfig::validate() const {
  if (n1 < 8 || n2 < 8 || n1 % 2 || n2 % 2) {
    throw std::invalid_argument("grid sizes must be even and >= 8");
  }
  if (!(alpha > 0.0 && alpha <= 1.0) || !(beta > 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("alpha and beta must lie in (0,1]");
  }
  if (mu < 0.0 || nu < 0.0) {
    throw std::invalid_argument("mu and nu must be nonnegative");
  }
  if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
  if (dt.has_value() == cfl_factor.has_value()) {
    throw std::invalid_argument("exactly one of dt and cfl_factor must be set");
  }
  if (dt && !(*dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (cfl_factor && !(*cfl_factor > 0.0)) {
    throw std::invalid_argument("cfl_factor must be positive");
  }
  if (diagnostics_every < 1) {
    throw std::invalid_argument("diagnostics_every must be >= 1");
  }
  if (initial_condition.kind == InitialCondition::Kind::PlaneWave &&
      !(initial_condition.plane_wave.amplitude > 0.0)) {
    throw std::invalid_argument("initial amplitude must be positive");
  }
  if (initial_condition.kind == InitialCondition::Kind::Random &&
      !(initial_condition.random.amplitude > 0.0)) {
    throw std::invalid_argument("initial amplitude must be positive");
  }
}

bool DiagnosticsRecord::finite() const {
  for (double v : {t, l2, lp4, lp8, linf, h1, h2, diss_alpha, diss_beta, A, B,
                   besov, energy_residual}) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

AdmissibilityVerdict check_admissibility(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("admissibility requires alpha, beta in (0,1)");
  }
  AdmissibilityVerdict v;
  v.threshold = alpha <= 0.5 ? 1.0 / (2.0 * alpha + 1.0)
                             : (1.0 - alpha) / (2.0 * alpha);
  v.admissible = beta > v.threshold;
  if (!v.admissible) {
    v.regime = AdmissibilityRegime::None;
  } else if (alpha <= 0.5) {
    v.regime = AdmissibilityRegime::LowAlpha;
  } else if (beta > alpha) {
    v.regime = AdmissibilityRegime::HighAlphaLargeBeta;
  } else {
    v.regime = AdmissibilityRegime::HighAlphaSmallBeta;
  }
  return v;
}

std::string regime_name(AdmissibilityRegime r) {
  switch (r) {
    case AdmissibilityRegime::LowAlpha: return "low-alpha";
    case AdmissibilityRegime::HighAlphaLargeBeta: return "high-alpha-large-beta";
    case AdmissibilityRegime::HighAlphaSmallBeta: return "high-alpha-small-beta";
    case AdmissibilityRegime::None: return "none";
  }
  return "none";
}

SpectralField nonlinear_term(const SpectralField& theta, VelocityLaw law) {
  auto [u1, u2] = law == VelocityLaw::Sqg ? velocity_sqg(theta) : velocity_pm(theta);
  SpectralField d1 = apply_multiplier(theta, OperatorSpec::derivative(1));
  SpectralField d2 = apply_multiplier(theta, OperatorSpec::derivative(2));
  const auto u1r = from_spectral(u1);
  const auto u2r = from_spectral(u2);
  const auto d1r = from_spectral(d1);
  const auto d2r = from_spectral(d2);
  std::vector<double> w(u1r.size());
  for (size_t i = 0; i < w.size(); ++i) w[i] = u1r[i] * d1r[i] + u2r[i] * d2r[i];
  return dealias(to_spectral(theta.grid, w));
}

namespace {

std::vector<double> linear_symbol(const Grid& g, const SimulationConfig& c) {
  std::vector<double> L(g.size());
  for (int i2 = 0; i2 < g.n2(); ++i2) {
    for (int i1 = 0; i1 < g.n1(); ++i1) {
      const double a1 = std::abs(double(g.k1(i1)));
      const double a2 = std::abs(double(g.k2(i2)));
      L[g.idx(i1, i2)] = c.mu * std::pow(a1, 2.0 * c.alpha) +
                         c.nu * std::pow(a2, 2.0 * c.beta);
    }
  }
  return L;
}

using CVec = std::vector<std::complex<double>>;

CVec rhs_nonlinear(const SpectralField& base, const CVec& coeffs,
                   VelocityLaw law) {
  SpectralField f(base.grid, true);
  f.coeffs = coeffs;
  SpectralField nl = nonlinear_term(f, law);
  for (auto& c : nl.coeffs) c = -c;
  return std::move(nl.coeffs);
}

bool finite(const CVec& v) {
  for (const auto& c : v) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

}  // namespace

SolverState step(const SolverState& state, double dt, const SimulationConfig& config) {
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
  const Grid& g = *state.theta.grid;
  const auto L = linear_symbol(g, config);
  const size_t n = L.size();
  std::vector<double> E(n), E2(n);
  for (size_t i = 0; i < n; ++i) {
    E[i] = std::exp(-0.5 * dt * L[i]);
    E2[i] = E[i] * E[i];
  }
  const auto& th = state.theta.coeffs;
  const VelocityLaw law = config.velocity_law;

  const CVec k1 = rhs_nonlinear(state.theta, th, law);
  CVec a(n), b(n), c(n);
  for (size_t i = 0; i < n; ++i) a[i] = E[i] * (th[i] + 0.5 * dt * k1[i]);
  const CVec k2 = rhs_nonlinear(state.theta, a, law);
  for (size_t i = 0; i < n; ++i) b[i] = E[i] * th[i] + 0.5 * dt * k2[i];
  const CVec k3 = rhs_nonlinear(state.theta, b, law);
  for (size_t i = 0; i < n; ++i) c[i] = E2[i] * th[i] + dt * E[i] * k3[i];
  const CVec k4 = rhs_nonlinear(state.theta, c, law);

  SolverState next{state.t + dt, SpectralField(state.theta.grid, true),
                   state.step_index + 1};
  auto& out = next.theta.coeffs;
  for (size_t i = 0; i < n; ++i) {
    out[i] = E2[i] * th[i] +
             dt / 6.0 *
                 (E2[i] * k1[i] + 2.0 * E[i] * (k2[i] + k3[i]) + k4[i]);
  }
  if (!finite(out)) throw BlowUpError(state.t);
  next.theta = dealias(next.theta);
  return next;
}

double cfl_dt(const SolverState& state, const SimulationConfig& config) {
  if (!config.cfl_factor) {
    throw std::invalid_argument("cfl_dt: cfl_factor not configured");
  }
  auto [u1, u2] = config.velocity_law == VelocityLaw::Sqg
                      ? velocity_sqg(state.theta)
                      : velocity_pm(state.theta);
  double umax = 1e-8;
  for (double v : from_spectral(u1)) umax = std::max(umax, std::abs(v));
  for (double v : from_spectral(u2)) umax = std::max(umax, std::abs(v));
  const double dx = Grid::length / std::max(config.n1, config.n2);
  return std::clamp(*config.cfl_factor * dx / umax, 1e-7, 1e-1);
}

SolverState make_initial_state(const SimulationConfig& config) {
  auto grid = Grid::make(config.n1, config.n2);
  SolverState s{0.0, SpectralField(grid, true), 0};
  const auto& ic = config.initial_condition;
  switch (ic.kind) {
    case InitialCondition::Kind::PlaneWave: {
      const auto& pw = ic.plane_wave;
      s.theta.at_k(pw.k1, pw.k2) = 0.5 * pw.amplitude;
      s.theta.at_k(-pw.k1, -pw.k2) = 0.5 * pw.amplitude;
      break;
    }
    case InitialCondition::Kind::Random: {
      const auto& rc = ic.random;
      s.theta = random_band_limited_field(grid, rc.seed, rc.kmax, rc.profile,
                                         rc.decay_rate, ZeroModePolicy::Keep);
      // Rescale so ||theta0||_inf equals the requested amplitude.
      double m = 0;
      for (double v : from_spectral(s.theta)) m = std::max(m, std::abs(v));
      const double scale = rc.amplitude / m;
      for (auto& c : s.theta.coeffs) c *= scale;
      break;
    }
    case InitialCondition::Kind::Checkpoint: {
      auto loaded = read_checkpoint_file(ic.checkpoint.path);
      if (loaded.state.theta.grid->n1() != config.n1 ||
          loaded.state.theta.grid->n2() != config.n2) {
        throw std::invalid_argument("checkpoint grid does not match config");
      }
      s = std::move(loaded.state);
      break;
    }
  }
  s.theta = dealias(s.theta);
  return s;
}

namespace {

DiagnosticsRecord diagnose(const SolverState& s, const SimulationConfig& cfg) {
  DiagnosticsRecord r;
  r.t = s.t;
  r.l2 = norm(s.theta, NormSpec::lebesgue(2));
  r.lp4 = norm(s.theta, NormSpec::lebesgue(4));
  r.lp8 = norm(s.theta, NormSpec::lebesgue(8));
  r.linf = norm(s.theta, NormSpec::sup());
  r.h1 = norm(s.theta, NormSpec::sobolev(1));
  r.h2 = norm(s.theta, NormSpec::sobolev(2));
  const double da = norm(s.theta, NormSpec::directional(1, cfg.alpha));
  const double db = norm(s.theta, NormSpec::directional(2, cfg.beta));
  r.diss_alpha = da * da;
  r.diss_beta = db * db;
  r.grad = grad_norms(s.theta, cfg.alpha, cfg.beta);
  r.A = r.grad.A;
  r.B = r.grad.B_alpha + r.grad.B_beta;
  r.besov = norm(s.theta, NormSpec::besov());
  return r;
}

double dissipation_rate(const SpectralField& theta, const SimulationConfig& cfg) {
  const double da = norm(theta, NormSpec::directional(1, cfg.alpha));
  const double db = norm(theta, NormSpec::directional(2, cfg.beta));
  return cfg.mu * da * da + cfg.nu * db * db;
}

}  // namespace

RunResult run(const SimulationConfig& config) {
  config.validate();
  RunResult res;
  res.config = config;
  res.admissibility_applicable = config.alpha < 1.0 && config.beta < 1.0;
  if (res.admissibility_applicable) {
    res.admissibility = check_admissibility(config.alpha, config.beta);
  }
  SolverState s = make_initial_state(config);
  res.theta0_l2 = norm(s.theta, NormSpec::lebesgue(2));
  res.theta0_linf = norm(s.theta, NormSpec::sup());
  const double E0 = res.theta0_l2 * res.theta0_l2;

  double diss_integral = 0;  // trapezoid of 2*(mu*dissa + nu*dissb)
  double prev_rate = dissipation_rate(s.theta, config);

  DiagnosticsRecord rec = diagnose(s, config);
  rec.energy_residual = 0;
  res.records.push_back(rec);
  double prev_rec_energy = 0.5 * rec.l2 * rec.l2;
  double prev_rec_t = 0;
  double prev_rec_da = rec.diss_alpha, prev_rec_db = rec.diss_beta;

  while (s.t < config.t_end - 1e-14) {
    double dt = config.dt ? *config.dt : cfl_dt(s, config);
    dt = std::min(dt, config.t_end - s.t);
    SolverState next{0, SpectralField(nullptr), 0};
    try {
      next = step(s, dt, config);
    } catch (const BlowUpError& e) {
      res.blew_up = true;
      res.blow_up_time = e.t;
      break;
    }
    const double rate = dissipation_rate(next.theta, config);
    diss_integral += dt * (prev_rate + rate);  // already includes the factor 2
    prev_rate = rate;
    s = std::move(next);

    const bool due = s.step_index % config.diagnostics_every == 0 ||
                     s.t >= config.t_end - 1e-14;
    if (due) {
      DiagnosticsRecord r = diagnose(s, config);
      const double energy = 0.5 * r.l2 * r.l2;
      const double dtr = r.t - prev_rec_t;
      r.energy_residual = std::abs(
          (energy - prev_rec_energy) / dtr +
          config.mu * 0.5 * (r.diss_alpha + prev_rec_da) +
          config.nu * 0.5 * (r.diss_beta + prev_rec_db));
      if (!r.finite()) {
        res.blew_up = true;
        res.blow_up_time = s.t;
        break;
      }
      res.records.push_back(r);
      prev_rec_energy = energy;
      prev_rec_t = r.t;
      prev_rec_da = r.diss_alpha;
      prev_rec_db = r.diss_beta;
      const double defect = std::abs(r.l2 * r.l2 + diss_integral - E0);
      res.max_energy_defect = std::max(res.max_energy_defect, defect);
    }
  }
  res.final_state = std::move(s);
  return res;
}

DissipationCheck verify_dissipation_relation(const DiagnosticsRecord& record,
                                             double theta0_l2, double alpha,
                                             double beta, double slack) {
  DissipationCheck out;
  const auto& gn = record.grad;
  const double lhs1 = std::pow(gn.gx1_sq, alpha + 1.0);
  const double rhs1 = std::pow(theta0_l2 * theta0_l2, alpha) * gn.d1a_sq;
  const double lhs2 = std::pow(gn.gx2_sq, beta + 1.0);
  const double rhs2 = std::pow(theta0_l2 * theta0_l2, beta) * gn.d2b_sq;
  out.ratio_axis1 = rhs1 > 0 ? lhs1 / rhs1 : (lhs1 > 0 ? inf : 0.0);
  out.ratio_axis2 = rhs2 > 0 ? lhs2 / rhs2 : (lhs2 > 0 ? inf : 0.0);
  const bool ok1 = lhs1 <= rhs1 * (1.0 + slack);
  const bool ok2 = lhs2 <= rhs2 * (1.0 + slack);
  // Aggregate coercivity B >= A^gamma / (theta0-dependent factor).
  const double B_lower = rhs1 > 0 || rhs2 > 0
                             ? (gn.d1a_sq + gn.d2b_sq)
                             : 0.0;
  const bool ok3 = record.B * (1.0 + slack) >= B_lower;
  out.pass = ok1 && ok2 && ok3;
  return out;
}

}  // namespace asqg
