#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "asqg/config.hpp"
#include "asqg/diagnostics_io.hpp"

using namespace asqg;

namespace {

const std::string valid_config =
    "grid = 64x64\n"
    "alpha = 0.5\n"
    "beta = 0.6\n"
    "mu = 1\n"
    "nu = 1\n"
    "velocity_law = sqg\n"
    "t_end = 0.01\n"
    "dt = 1e-3\n"
    "initial_condition = random 7 6 1.0\n"
    "diagnostics_every = 5\n";

std::string write_temp(const std::string& contents, const std::string& name) {
  const std::string path = "/tmp/asqg_test_" + name;
  std::ofstream(path, std::ios::trunc) << contents;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const int rc = std::system((std::string(ASQG_CLI_PATH) + " " + args +
                              " > /dev/null 2>&1")
                                 .c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("config parses and admissibility follows") {
  auto c = parse_config(valid_config);
  CHECK(c.n1 == 64);
  CHECK(c.alpha == 0.5);
  CHECK(c.initial_condition.kind == InitialCondition::Kind::Random);
  CHECK(c.initial_condition.random.seed == 7);
  CHECK(check_admissibility(c.alpha, c.beta).admissible);
}

TEST_CASE("config errors carry line numbers and key names") {
  try {
    parse_config("grid = 64x64\nwhat = 3\n");
    CHECK(false);
  } catch (const ConfigError& e) {
    CHECK(e.line == 2);
    CHECK(e.key == "what");
  }
  try {
    parse_config(valid_config + "cfl_factor = 0.5\n");
    CHECK(false);
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("dt") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("grid = 64x64\nalpha = 1.5\nbeta = 0.5\n"
                               "t_end = 1\ndt = 1e-3\n"
                               "initial_condition = plane_wave 1 0 1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config("alpha = 0.5\n"), ConfigError);  // missing keys
  CHECK_THROWS_AS(parse_config(valid_config + "alpha = 0.4\n"), ConfigError);
}

TEST_CASE("seed key overrides the random initial-condition seed") {
  auto c = parse_config(valid_config + "seed = 42\n");
  CHECK(c.initial_condition.random.seed == 42);
}

TEST_CASE("record serialization round-trips bitwise") {
  DiagnosticsRecord r;
  r.t = 0.1234567890123456789;
  r.l2 = 1.0 / 3.0;
  r.lp4 = 7.0e-17;
  r.lp8 = 1e300;
  r.linf = 0.1 + 0.2;
  r.h1 = 123456789.123456789;
  r.h2 = 5e-300;
  r.diss_alpha = 1;
  r.diss_beta = 2;
  r.A = 3;
  r.B = 4;
  r.besov = 0.30000000000000004;
  r.energy_residual = -0.0;
  auto s = format_record(r);
  auto q = parse_record(s);
  CHECK(q.t == r.t);
  CHECK(q.l2 == r.l2);
  CHECK(q.lp4 == r.lp4);
  CHECK(q.lp8 == r.lp8);
  CHECK(q.linf == r.linf);
  CHECK(q.h1 == r.h1);
  CHECK(q.h2 == r.h2);
  CHECK(q.besov == r.besov);
  CHECK_THROWS_AS(parse_record("t=1 bogus=2"), std::runtime_error);
}

TEST_CASE("emit_diagnostics writes header plus one line per record") {
  RunResult res;
  res.config = parse_config(valid_config);
  res.admissibility = check_admissibility(0.5, 0.6);
  std::ostringstream out;
  emit_diagnostics(res, out);
  const std::string text = out.str();
  CHECK(text.find("admissible=yes") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1);

  res.records.push_back({});
  std::ostringstream out2;
  emit_diagnostics(res, out2);
  const std::string text2 = out2.str();
  CHECK(std::count(text2.begin(), text2.end(), '\n') == 2);
}

TEST_CASE("cli subcommands run end to end") {
  const auto cfg = write_temp(valid_config, "sim.cfg");
  const std::string out1 = "/tmp/asqg_test_out1.txt";
  const std::string out2 = "/tmp/asqg_test_out2.txt";
  CHECK(run_cli("simulate --config " + cfg + " --out " + out1) == 0);
  CHECK(run_cli("simulate --config " + cfg + " --out " + out2) == 0);
  // identical manifest + seed -> byte-identical diagnostics
  CHECK(slurp(out1) == slurp(out2));
  CHECK(slurp(out1).find("admissible=yes") != std::string::npos);

  const auto bad = write_temp("grid = 64x64\nbogus = 1\n", "bad.cfg");
  CHECK(run_cli("simulate --config " + bad + " --out " + out1) == 2);

  CHECK(run_cli("verify-inequalities --case interp-l2-a --samples 20 "
                "--resolutions 32,64 --seed 3 --out " + out1) == 0);
  CHECK(slurp(out1).find("violations=0") != std::string::npos);
  CHECK(run_cli("verify-inequalities --case no-such --samples 1 --out " + out1) == 2);

  CHECK(run_cli("verify-gronwall --preset decay --trials 4 --seed 5 --out " +
                out1) == 0);
  CHECK(slurp(out1).find("unsound=0") != std::string::npos);

  CHECK(run_cli("admissible --alpha 0.5 --beta 0.6") == 0);
  CHECK(run_cli("admissible --alpha 0.5 --beta 0.4") == 1);
  CHECK(run_cli("admissible --alpha 2 --beta 0.4") == 2);

  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("cli checkpoint save and resume") {
  const auto cfg = write_temp(valid_config, "ck.cfg");
  const std::string ck = "/tmp/asqg_test.ckpt";
  CHECK(run_cli("simulate --config " + cfg + " --out /dev/null "
                "--save-checkpoint " + ck) == 0);
  const auto resume_cfg = write_temp(
      "grid = 64x64\nalpha = 0.5\nbeta = 0.6\nt_end = 0.02\ndt = 1e-3\n"
      "initial_condition = from_checkpoint " + ck + "\n",
      "resume.cfg");
  CHECK(run_cli("simulate --config " + resume_cfg + " --out /dev/null") == 0);
  std::remove(ck.c_str());
}
