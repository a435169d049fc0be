// Command-line front end: simulation runs, inequality campaigns, Gronwall
// certificate checks, and the admissibility query.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "asqg/checkpoint.hpp"
#include "asqg/config.hpp"
#include "asqg/diagnostics_io.hpp"
#include "asqg/gronwall.hpp"
#include "asqg/inequality.hpp"
#include "asqg/solver.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  return out;
}

int cmd_simulate(const std::string& config_path, const std::string& out_path,
                 const std::string& checkpoint_path) {
  const asqg::SimulationConfig config = asqg::parse_config(slurp(config_path));
  const asqg::RunResult result = asqg::run(config);
  if (out_path == "-") {
    asqg::emit_diagnostics(result, std::cout);
  } else {
    auto out = open_out(out_path);
    asqg::emit_diagnostics(result, out);
  }
  if (!checkpoint_path.empty() && !result.blew_up) {
    asqg::write_checkpoint_file(checkpoint_path, result.final_state, config);
  }
  if (result.blew_up) {
    std::cerr << "run lost finiteness at t=" << result.blow_up_time << "\n";
    return 1;
  }
  return 0;
}

int cmd_verify_inequalities(const std::string& case_id, int samples,
                            std::vector<int> resolutions, std::uint64_t seed,
                            const std::string& out_path) {
  const auto id = asqg::case_from_name(case_id);
  if (!id) throw std::runtime_error("unknown case id: " + case_id);
  const auto c = asqg::InequalityCase::make(*id);
  const auto report = asqg::run_campaign(c, samples, resolutions, seed);

  std::ostringstream out;
  out.precision(12);
  out << "# case=" << case_id << " samples=" << samples << " seed=" << seed
      << "\n";
  for (const auto& s : report.per_resolution) {
    out << "resolution=" << s.resolution << " max_ratio=" << s.max_ratio
        << " mean_ratio=" << s.mean_ratio << " q50=" << s.q50
        << " q90=" << s.q90 << " q99=" << s.q99
        << " degenerate=" << s.degenerate << " violations=" << s.violations
        << "\n";
  }
  out << "max_ratio=" << report.max_ratio
      << " resolution_stability=" << report.resolution_stability
      << " degenerate=" << report.degenerate
      << " violations=" << report.violations << "\n";
  if (out_path == "-") {
    std::cout << out.str();
  } else {
    open_out(out_path) << out.str();
  }
  return report.violations > 0 ? 1 : 0;
}

asqg::GronwallProblem gronwall_preset(const std::string& name) {
  asqg::GronwallProblem p;
  if (name == "default") {
    p.alpha = 1.5; p.gamma = 2.0; p.beta = 0.3; p.C1 = 1.0; p.K = 1.0;
    p.T = 1.0;
    p.l = asqg::CoeffFn::constant(0.1);
    p.m = asqg::CoeffFn::constant(0.1);
    p.n = asqg::CoeffFn::constant(1.0);
    p.f = asqg::CoeffFn::constant(0.1);
  } else if (name == "decay") {
    p.alpha = 1.5; p.gamma = 2.0; p.beta = 0.0; p.C1 = 1.0; p.K = 0.0;
    p.T = 1.0;
    p.l = p.m = p.n = p.f = asqg::CoeffFn::constant(0.0);
  } else if (name == "mild") {
    p.alpha = 1.2; p.gamma = 1.5; p.beta = 0.2; p.C1 = 0.5; p.K = 0.5;
    p.T = 2.0;
    p.l = asqg::CoeffFn::constant(0.05);
    p.m = asqg::CoeffFn::constant(0.05);
    p.n = asqg::CoeffFn::constant(0.5);
    p.f = asqg::CoeffFn::constant(0.05);
  } else {
    throw std::runtime_error("unknown preset: " + name +
                             " (expected default, decay or mild)");
  }
  return p;
}

asqg::GronwallProblem parse_gronwall_config(const std::string& text) {
  asqg::GronwallProblem p;
  p.l = p.m = p.n = p.f = asqg::CoeffFn::constant(0.0);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key, eq;
    double val;
    if (!(ls >> key >> eq >> val) || eq != "=") {
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": expected 'key = value'");
    }
    if (key == "alpha") p.alpha = val;
    else if (key == "gamma") p.gamma = val;
    else if (key == "beta") p.beta = val;
    else if (key == "C1") p.C1 = val;
    else if (key == "K") p.K = val;
    else if (key == "T") p.T = val;
    else if (key == "l") p.l = asqg::CoeffFn::constant(val);
    else if (key == "m") p.m = asqg::CoeffFn::constant(val);
    else if (key == "n") p.n = asqg::CoeffFn::constant(val);
    else if (key == "f") p.f = asqg::CoeffFn::constant(val);
    else {
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": unknown key '" + key + "'");
    }
  }
  return p;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

int cmd_verify_gronwall(const asqg::GronwallProblem& base, int trials,
                        std::uint64_t seed, const std::string& out_path) {
  std::ostringstream out;
  out.precision(12);
  int unsound = 0, cert_failures = 0;
  for (int i = 0; i < trials; ++i) {
    asqg::GronwallProblem p = base;
    std::mt19937_64 rng(mix(seed + std::uint64_t(i)));
    const double u = double(rng() >> 11) * 0x1.0p-53;
    // Constant n in [0, K] keeps the n-hypothesis automatic while varying
    // the log-power forcing strength across trials.
    p.n = asqg::CoeffFn::constant(u * p.K);
    const auto mode = i % 2 ? asqg::TrajectoryMode::Decaying
                            : asqg::TrajectoryMode::Saturating;
    const auto cert = asqg::build_certificate(p);
    if (!cert.ok) {
      ++cert_failures;
      out << "trial=" << i << " certificate_failure: " << cert.failure << "\n";
      continue;
    }
    const auto traj = asqg::synth_trajectory(p, mode, mix(seed ^ (i * 2654435761ULL)));
    const auto v = asqg::verify_trajectory(p, cert, traj);
    const bool sound = !v.hypotheses_ok || v.bound_ok;
    if (!sound) ++unsound;
    out << "trial=" << i
        << " mode=" << (mode == asqg::TrajectoryMode::Decaying ? "decaying" : "saturating")
        << " n=" << p.n(0) << " sigma=" << cert.sigma << " C2=" << cert.C2
        << " Cstar=" << cert.Cstar << " hypotheses_ok=" << v.hypotheses_ok
        << " bound_ok=" << v.bound_ok << " margin=" << v.margin
        << (traj.truncated ? " truncated=1" : "") << (sound ? "" : " UNSOUND")
        << "\n";
  }
  out << "trials=" << trials << " unsound=" << unsound
      << " certificate_failures=" << cert_failures << "\n";
  if (out_path == "-") {
    std::cout << out.str();
  } else {
    open_out(out_path) << out.str();
  }
  return (unsound > 0 || cert_failures > 0) ? 1 : 0;
}

int cmd_admissible(double alpha, double beta) {
  const auto v = asqg::check_admissibility(alpha, beta);
  std::cout << "alpha=" << alpha << " beta=" << beta
            << " threshold=" << v.threshold
            << " admissible=" << (v.admissible ? "yes" : "no")
            << " regime=" << asqg::regime_name(v.regime) << "\n";
  return v.admissible ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anisotropic surface quasi-geostrophic toolbox"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string config_path, out_path = "-", checkpoint_path, case_id, preset;
  std::vector<int> resolutions = {64, 128, 256};
  int samples = 500, trials = 100;
  std::uint64_t seed = 1;
  double alpha = 0, beta = 0;

  auto* sim = app.add_subcommand("simulate", "run the solver on a config file");
  sim->add_option("--config", config_path, "simulation config path")->required();
  sim->add_option("--out", out_path, "diagnostics output path (- for stdout)");
  sim->add_option("--save-checkpoint", checkpoint_path,
                  "write the final state to a binary checkpoint");

  auto* ineq = app.add_subcommand("verify-inequalities",
                                  "random-field campaign for one inequality case");
  ineq->add_option("--case", case_id, "case id (e.g. interp-l2-a)")->required();
  ineq->add_option("--samples", samples, "samples per resolution");
  ineq->add_option("--resolutions", resolutions, "ascending grid sizes")
      ->delimiter(',');
  ineq->add_option("--seed", seed, "campaign seed");
  ineq->add_option("--out", out_path, "report path (- for stdout)");

  auto* gron = app.add_subcommand("verify-gronwall",
                                  "certificate soundness campaign");
  gron->add_option("--preset", preset, "problem preset (default, decay, mild)");
  gron->add_option("--config", config_path, "problem config path");
  gron->add_option("--trials", trials, "number of synthesized trajectories");
  gron->add_option("--seed", seed, "campaign seed");
  gron->add_option("--out", out_path, "report path (- for stdout)");

  auto* adm = app.add_subcommand("admissible",
                                 "query the dissipation-exponent condition");
  adm->add_option("--alpha", alpha, "x1 exponent")->required();
  adm->add_option("--beta", beta, "x2 exponent")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) return cmd_simulate(config_path, out_path, checkpoint_path);
    if (ineq->parsed()) {
      return cmd_verify_inequalities(case_id, samples, resolutions, seed, out_path);
    }
    if (gron->parsed()) {
      if (preset.empty() == config_path.empty()) {
        std::cerr << "verify-gronwall needs exactly one of --preset / --config\n";
        return 2;
      }
      const auto problem = preset.empty()
                               ? parse_gronwall_config(slurp(config_path))
                               : gronwall_preset(preset);
      return cmd_verify_gronwall(problem, trials, seed, out_path);
    }
    if (adm->parsed()) return cmd_admissible(alpha, beta);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
