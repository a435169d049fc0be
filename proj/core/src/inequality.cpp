#include "asqg/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "asqg/norms.hpp"
#include "asqg/operators.hpp"

namespace asqg {
namespace {

struct CaseNameEntry {
  CaseId id;
  const char* name;
};

constexpr CaseNameEntry case_table[] = {
    {CaseId::InterpL2A, "interp-l2-a"},
    {CaseId::InterpL2B, "interp-l2-b"},
    {CaseId::InterpLinfA, "interp-linf-a"},
    {CaseId::InterpLinfB, "interp-linf-b"},
    {CaseId::TripleMixed, "triple-mixed"},
    {CaseId::TripleL2, "triple-l2"},
    {CaseId::Commutator, "commutator"},
    {CaseId::LogSobolev, "log-sobolev"},
    {CaseId::AnisoLinf, "aniso-linf"},
};

double get(const std::map<std::string, double>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw std::invalid_argument("missing parameter '" + key + "'");
  }
  return it->second;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("parameter out of range: " + what);
}

int get_axis(const std::map<std::string, double>& params) {
  const double a = get(params, "axis");
  require(a == 1.0 || a == 2.0, "axis must be 1 or 2");
  return int(a);
}

double l2_of(const SpectralField& f) {
  return std::sqrt(Grid::measure) * f.coeff_l2();
}

// splitmix64; decorrelates per-sample and per-slot seeds.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::string case_name(CaseId id) {
  for (const auto& e : case_table) {
    if (e.id == id) return e.name;
  }
  throw std::logic_error("unknown case id");
}

std::optional<CaseId> case_from_name(const std::string& name) {
  for (const auto& e : case_table) {
    if (name == e.name) return e.id;
  }
  return std::nullopt;
}

int case_arity(CaseId id) {
  switch (id) {
    case CaseId::TripleMixed:
    case CaseId::TripleL2:
      return 3;
    case CaseId::Commutator:
      return 2;
    default:
      return 1;
  }
}

InequalityCase InequalityCase::make(CaseId id) {
  InequalityCase c;
  c.id = id;
  switch (id) {
    case CaseId::InterpL2A:
    case CaseId::InterpL2B:
      // Constant-1 cases; flat spectrum exercises the worst case.
      c.policy.profile = SpectrumProfile::Flat;
      break;
    case CaseId::Commutator:
      c.policy.profile = SpectrumProfile::Decaying;
      c.policy.decay_rate = 2.0;
      c.policy.kmax_fraction = 1.0 / 5.0;  // products stay alias-free
      break;
    default:
      c.policy.profile = SpectrumProfile::Decaying;
      c.policy.decay_rate = 2.0;
      break;
  }
  return c;
}

void validate_params(CaseId id, const std::map<std::string, double>& params) {
  switch (id) {
    case CaseId::InterpL2A: {
      get_axis(params);
      const double s = get(params, "s"), d = get(params, "delta");
      require(d >= 0.0, "delta >= 0");
      require(s >= 0.0 && s <= d + 1.0, "0 <= s <= delta+1");
      break;
    }
    case CaseId::InterpL2B: {
      get_axis(params);
      const double g = get(params, "gamma"), r = get(params, "rho");
      require(r > 0.0, "rho > 0");
      require(g >= 0.0 && g <= r, "0 <= gamma <= rho");
      break;
    }
    case CaseId::InterpLinfA: {
      get_axis(params);
      require(get(params, "gamma") > 0.0, "gamma > 0");
      break;
    }
    case CaseId::InterpLinfB: {
      get_axis(params);
      const double d = get(params, "delta"), r = get(params, "rho");
      require(r > 0.0, "rho > 0");
      require(d > 0.0 && d <= r + 1.0, "0 < delta <= rho+1");
      break;
    }
    case CaseId::TripleMixed: {
      const double p = get(params, "p"), q = get(params, "q");
      const double g1 = get(params, "gamma1"), g2 = get(params, "gamma2");
      require(p >= 2.0 && q >= 2.0, "p, q >= 2");
      require(g1 > 1.0 / p && g1 <= 1.0, "gamma1 in (1/p, 1]");
      require(g2 > 1.0 / q && g2 <= 1.0, "gamma2 in (1/q, 1]");
      break;
    }
    case CaseId::TripleL2: {
      const double g1 = get(params, "gamma1"), g2 = get(params, "gamma2");
      require(g1 > 0.5 && g1 <= 1.0, "gamma1 in (1/2, 1]");
      require(g2 > 0.5 && g2 <= 1.0, "gamma2 in (1/2, 1]");
      break;
    }
    case CaseId::Commutator: {
      const double s = get(params, "s");
      require(s > 0.0 && s < 1.0, "s in (0,1)");
      if (params.count("p")) require(get(params, "p") == 2.0, "only p = 2 is exact");
      break;
    }
    case CaseId::LogSobolev:
      require(get(params, "sigma") > 1.0, "sigma > 1");
      break;
    case CaseId::AnisoLinf: {
      const double d1 = get(params, "delta1"), d2 = get(params, "delta2");
      require(d1 > 0.0 && d2 > 0.0, "delta1, delta2 > 0");
      require(1.0 / d1 + 1.0 / d2 < 2.0, "1/delta1 + 1/delta2 < 2");
      break;
    }
  }
}

namespace {

EvalResult finish(double lhs, std::vector<double> factors) {
  EvalResult r;
  r.lhs = lhs;
  r.rhs_factors = std::move(factors);
  r.rhs = 1.0;
  for (double f : r.rhs_factors) r.rhs *= f;
  if (r.rhs == 0.0) {
    r.degenerate = lhs == 0.0;
    r.violation = lhs > 0.0;
    r.ratio = 0.0;
  } else {
    r.ratio = r.lhs / r.rhs;
  }
  return r;
}

double directional_norm(const SpectralField& f, int axis, double s) {
  return norm(f, NormSpec::directional(axis, s));
}

}  // namespace

EvalResult eval_case(const InequalityCase& c,
                     const std::map<std::string, double>& params,
                     const std::vector<SpectralField>& fields) {
  validate_params(c.id, params);
  if (int(fields.size()) != case_arity(c.id)) {
    throw std::invalid_argument("case needs " + std::to_string(case_arity(c.id)) +
                                " fields, got " + std::to_string(fields.size()));
  }
  const SpectralField& f = fields[0];
  switch (c.id) {
    case CaseId::InterpL2A: {
      const int ax = get_axis(params);
      const double s = get(params, "s"), d = get(params, "delta");
      const double th = s / (d + 1.0);
      const double lhs = directional_norm(f, ax, s);
      return finish(lhs, {std::pow(l2_of(f), 1.0 - th),
                          std::pow(directional_norm(f, ax, d + 1.0), th)});
    }
    case CaseId::InterpL2B: {
      const int ax = get_axis(params);
      const double g = get(params, "gamma"), r = get(params, "rho");
      const double th = g / r;
      const double lhs = directional_norm(f, ax, g);
      return finish(lhs, {std::pow(l2_of(f), 1.0 - th),
                          std::pow(directional_norm(f, ax, r), th)});
    }
    case CaseId::InterpLinfA: {
      const int ax = get_axis(params);
      const double g = get(params, "gamma");
      const SpectralField df = apply_multiplier(f, OperatorSpec::derivative(ax));
      const double lhs = norm(df, NormSpec::lebesgue(2.0 * (g + 1.0)));
      return finish(lhs,
                    {std::pow(norm(f, NormSpec::sup()), g / (g + 1.0)),
                     std::pow(directional_norm(f, ax, g + 1.0), 1.0 / (g + 1.0))});
    }
    case CaseId::InterpLinfB: {
      const int ax = get_axis(params);
      const double d = get(params, "delta"), r = get(params, "rho");
      const double th = d / (r + 1.0);
      const SpectralField lf = apply_multiplier(f, OperatorSpec::directional(ax, d));
      const double lhs = norm(lf, NormSpec::lebesgue(2.0 * (r + 1.0) / d));
      return finish(lhs,
                    {std::pow(norm(f, NormSpec::sup()), 1.0 - th),
                     std::pow(directional_norm(f, ax, r + 1.0), th)});
    }
    case CaseId::TripleMixed:
    case CaseId::TripleL2: {
      const double p = c.id == CaseId::TripleL2 ? 2.0 : get(params, "p");
      const double q = c.id == CaseId::TripleL2 ? 2.0 : get(params, "q");
      const double g1 = get(params, "gamma1"), g2 = get(params, "gamma2");
      const SpectralField& g = fields[1];
      const SpectralField& h = fields[2];
      const auto fr = from_spectral(f), gr = from_spectral(g), hr = from_spectral(h);
      double acc = 0;
      for (size_t i = 0; i < fr.size(); ++i) acc += std::abs(fr[i] * gr[i] * hr[i]);
      const double lhs = Grid::measure * acc / double(fr.size());
      const double e1 = 1.0 / (g1 * p), e2 = 1.0 / (g2 * q);
      return finish(lhs, {norm(f, NormSpec::mixed(p, q)),
                          std::pow(l2_of(g), 1.0 - e1),
                          std::pow(directional_norm(g, 1, g1), e1),
                          std::pow(l2_of(h), 1.0 - e2),
                          std::pow(directional_norm(h, 2, g2), e2)});
    }
    case CaseId::Commutator: {
      const double s = get(params, "s");
      const SpectralField& g = fields[1];
      const auto fr = from_spectral(f), gr = from_spectral(g);
      const SpectralField lsf = apply_multiplier(f, OperatorSpec::fractional(s));
      const SpectralField lsg = apply_multiplier(g, OperatorSpec::fractional(s));
      const auto lsfr = from_spectral(lsf), lsgr = from_spectral(lsg);
      std::vector<double> fg(fr.size()), cross(fr.size());
      for (size_t i = 0; i < fr.size(); ++i) {
        fg[i] = fr[i] * gr[i];
        cross[i] = gr[i] * lsfr[i] + fr[i] * lsgr[i];
      }
      SpectralField comm =
          apply_multiplier(to_spectral(f.grid, fg), OperatorSpec::fractional(s));
      const SpectralField cross_hat = to_spectral(f.grid, cross);
      for (size_t i = 0; i < comm.coeffs.size(); ++i) {
        comm.coeffs[i] -= cross_hat.coeffs[i];
      }
      const double lhs = l2_of(comm);
      return finish(lhs, {norm(g, NormSpec::sup()), l2_of(lsf)});
    }
    case CaseId::LogSobolev: {
      const auto chk = log_sobolev_check(f, get(params, "sigma"));
      return finish(chk.lhs, {chk.rhs_with_C1});
    }
    case CaseId::AnisoLinf: {
      const double d1 = get(params, "delta1"), d2 = get(params, "delta2");
      const double e1 = 1.0 / (2.0 * d1), e2 = 1.0 / (2.0 * d2);
      const double lhs = norm(f, NormSpec::sup());
      return finish(lhs, {std::pow(l2_of(f), 1.0 - e1 - e2),
                          std::pow(directional_norm(f, 1, d1), e1),
                          std::pow(directional_norm(f, 2, d2), e2)});
    }
  }
  throw std::logic_error("unreachable case id");
}

LogSobolevCheck log_sobolev_check(const SpectralField& f, double sigma) {
  if (!(sigma > 1.0)) throw std::invalid_argument("log-sobolev requires sigma > 1");
  LogSobolevCheck out;
  out.lhs = norm(f, NormSpec::sup());
  const double hs = norm(f, NormSpec::sobolev(sigma));
  out.rhs_with_C1 = 1.0 + l2_of(f) +
                    norm(f, NormSpec::besov()) * std::log(std::exp(1.0) + hs);
  out.implied_C = out.lhs / out.rhs_with_C1;
  return out;
}

namespace {

// Draws any parameter the case leaves unspecified, uniformly over the
// inequality's valid range. Deterministic in (seed, sample): parameter draws are
// shared across resolutions so stability ratios compare like for like.
std::map<std::string, double> sample_params(const InequalityCase& c,
                                            std::mt19937_64& rng) {
  auto p = c.params;
  auto need = [&](const char* k) { return !p.count(k); };
  auto axis = [&] {
    if (need("axis")) p["axis"] = u01(rng) < 0.5 ? 1.0 : 2.0;
  };
  switch (c.id) {
    case CaseId::InterpL2A:
      axis();
      if (need("delta")) p["delta"] = 0.1 + 0.9 * u01(rng);
      if (need("s")) p["s"] = (p["delta"] + 1.0) * u01(rng);
      break;
    case CaseId::InterpL2B:
      axis();
      if (need("rho")) p["rho"] = 0.2 + 1.8 * u01(rng);
      if (need("gamma")) p["gamma"] = p["rho"] * u01(rng);
      break;
    case CaseId::InterpLinfA:
      axis();
      if (need("gamma")) p["gamma"] = 0.2 + 0.8 * u01(rng);
      break;
    case CaseId::InterpLinfB:
      axis();
      if (need("rho")) p["rho"] = 0.2 + 1.3 * u01(rng);
      if (need("delta")) p["delta"] = 0.3 + (p["rho"] + 0.7) * u01(rng);
      break;
    case CaseId::TripleMixed:
      if (need("p")) p["p"] = 2.0 + 4.0 * u01(rng);
      if (need("q")) p["q"] = 2.0 + 4.0 * u01(rng);
      if (need("gamma1"))
        p["gamma1"] = 1.0 / p["p"] + (1.0 - 1.0 / p["p"]) * (0.05 + 0.95 * u01(rng));
      if (need("gamma2"))
        p["gamma2"] = 1.0 / p["q"] + (1.0 - 1.0 / p["q"]) * (0.05 + 0.95 * u01(rng));
      break;
    case CaseId::TripleL2:
      if (need("gamma1")) p["gamma1"] = 0.5 + 0.5 * (0.05 + 0.95 * u01(rng));
      if (need("gamma2")) p["gamma2"] = 0.5 + 0.5 * (0.05 + 0.95 * u01(rng));
      break;
    case CaseId::Commutator:
      if (need("s")) p["s"] = 0.05 + 0.9 * u01(rng);
      break;
    case CaseId::LogSobolev:
      if (need("sigma")) p["sigma"] = 1.1 + 1.9 * u01(rng);
      break;
    case CaseId::AnisoLinf:
      if (need("delta1")) p["delta1"] = 1.1 + 0.9 * u01(rng);
      if (need("delta2")) p["delta2"] = 1.1 + 0.9 * u01(rng);
      break;
  }
  return p;
}

// Directional inequalities need the corresponding zero modes removed: on the
// torus the homogeneous right-hand seminorms annihilate them (the discrete
// stand-in for decay at infinity on the whole space).
ZeroModePolicy slot_policy(const InequalityCase& c, int slot,
                           const std::map<std::string, double>& params) {
  switch (c.id) {
    case CaseId::InterpL2A:
    case CaseId::InterpL2B:
    case CaseId::InterpLinfA:
    case CaseId::InterpLinfB:
      return get(params, "axis") == 1.0 ? ZeroModePolicy::StripX1
                                        : ZeroModePolicy::StripX2;
    case CaseId::TripleMixed:
    case CaseId::TripleL2:
      if (slot == 1) return ZeroModePolicy::StripX1;
      if (slot == 2) return ZeroModePolicy::StripX2;
      return ZeroModePolicy::Keep;
    case CaseId::Commutator:
      return ZeroModePolicy::Keep;
    case CaseId::LogSobolev:
    case CaseId::AnisoLinf:
      return ZeroModePolicy::StripBoth;
  }
  return ZeroModePolicy::Keep;
}

}  // namespace

InequalityReport run_campaign(const InequalityCase& c, int samples,
                              const std::vector<int>& resolutions,
                              std::uint64_t seed) {
  if (samples < 0) throw std::invalid_argument("negative sample count");
  if (!std::is_sorted(resolutions.begin(), resolutions.end())) {
    throw std::invalid_argument("resolutions must be ascending");
  }
  InequalityReport report;
  report.id = c.id;
  report.samples_per_resolution = samples;
  const int arity = case_arity(c.id);

  for (int n : resolutions) {
    auto grid = Grid::make(n, n);
    const int kmax = std::max(1, int(c.policy.kmax_fraction * n));
    ResolutionStats stats;
    stats.resolution = n;
    std::vector<double> ratios;
    ratios.reserve(samples);
    double sum = 0;
    for (int i = 0; i < samples; ++i) {
      std::mt19937_64 prng(mix(seed ^ mix(std::uint64_t(i))));
      const auto params = sample_params(c, prng);
      std::vector<SpectralField> fields;
      fields.reserve(arity);
      for (int j = 0; j < arity; ++j) {
        const auto fseed = mix(seed + 0x517CC1B727220A95ULL * (std::uint64_t(i) * 8 + j + 1));
        fields.push_back(random_band_limited_field(grid, fseed, kmax,
                                                   c.policy.profile,
                                                   c.policy.decay_rate,
                                                   slot_policy(c, j, params)));
      }
      const EvalResult r = eval_case(c, params, fields);
      if (r.degenerate) {
        ++stats.degenerate;
        continue;
      }
      if (r.violation) {
        ++stats.violations;
        continue;
      }
      ratios.push_back(r.ratio);
      sum += r.ratio;
      stats.max_ratio = std::max(stats.max_ratio, r.ratio);
    }
    stats.samples = samples;
    if (!ratios.empty()) {
      stats.mean_ratio = sum / double(ratios.size());
      std::sort(ratios.begin(), ratios.end());
      auto quantile = [&](double q) {
        const size_t k = size_t(q * double(ratios.size() - 1) + 0.5);
        return ratios[std::min(k, ratios.size() - 1)];
      };
      stats.q50 = quantile(0.50);
      stats.q90 = quantile(0.90);
      stats.q99 = quantile(0.99);
    }
    report.max_ratio = std::max(report.max_ratio, stats.max_ratio);
    report.degenerate += stats.degenerate;
    report.violations += stats.violations;
    report.per_resolution.push_back(stats);
  }
  if (report.per_resolution.size() >= 2 &&
      report.per_resolution.front().max_ratio > 0) {
    report.resolution_stability = report.per_resolution.back().max_ratio /
                                  report.per_resolution.front().max_ratio;
  }
  return report;
}

}  // namespace asqg
