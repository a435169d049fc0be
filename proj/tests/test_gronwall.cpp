#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "asqg/gronwall.hpp"

using namespace asqg;

namespace {

GronwallProblem zero_problem() {
  GronwallProblem p;
  p.alpha = 1.5;
  p.gamma = 2.0;
  p.beta = 0.0;
  p.C1 = 1.0;
  p.K = 0.0;
  p.T = 1.0;
  p.l = p.m = p.n = p.f = CoeffFn::constant(0.0);
  return p;
}

}  // namespace

TEST_CASE("coefficient presets evaluate and integrate exactly") {
  auto c = CoeffFn::constant(3.0);
  CHECK(c(0.7) == 3.0);
  CHECK(c.integral(0, 2) == 6.0);

  auto p = CoeffFn::polynomial({1.0, 2.0, 3.0});  // 1 + 2t + 3t^2
  CHECK(p(2.0) == doctest::Approx(17.0));
  CHECK(p.integral(0, 1) == doctest::Approx(1.0 + 1.0 + 1.0));
  CHECK(p.integral(1, 0) == doctest::Approx(-3.0));

  auto w = CoeffFn::piecewise({1.0, 2.0}, {5.0, 7.0, 1.0});
  CHECK(w(0.5) == 5.0);
  CHECK(w(1.5) == 7.0);
  CHECK(w(3.0) == 1.0);
  CHECK(w.integral(0.5, 2.5) == doctest::Approx(0.5 * 5 + 1.0 * 7 + 0.5 * 1));
  CHECK(w.nonnegative_on(3.0));
  CHECK(!CoeffFn::polynomial({1.0, -2.0}).nonnegative_on(1.0));
  CHECK_THROWS_AS(CoeffFn::piecewise({1.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("problem validation enforces the hypothesis ranges") {
  auto p = zero_problem();
  CHECK_NOTHROW(p.validate());
  p.beta = 0.5;  // = (gamma-1)/gamma exactly
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.beta = 0.0;
  p.gamma = 1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.gamma = 2.0;
  p.C1 = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.C1 = 1.0;
  p.l = CoeffFn::polynomial({0.1, -1.0});
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("certificate exponents follow the midpoint rule") {
  auto p = zero_problem();
  p.beta = 0.4;
  p.K = 1.0;
  p.n = CoeffFn::constant(0.5);
  auto cert = build_certificate(p);
  REQUIRE(cert.ok);
  CHECK(cert.theta1 == doctest::Approx(0.5));   // midpoint of (0.4, 0.6)
  CHECK(cert.theta2 == doctest::Approx(0.9));
  CHECK(cert.theta2 < 1.0);
  CHECK(cert.theta2 < p.gamma * cert.theta1);
  CHECK(cert.sigma >= std::pow(2.0 / p.C1, 1.0 / (p.gamma - 1.0)) -
                          std::exp(1.0) - 1e-12);
  CHECK(cert.C3 == 1.0);
  CHECK(cert.Cstar >= 0.0);
}

TEST_CASE("certificate bound function is monotone in t and forcing") {
  auto p = zero_problem();
  p.l = CoeffFn::constant(0.2);
  p.m = CoeffFn::constant(0.1);
  p.f = CoeffFn::constant(0.3);
  auto cert = build_certificate(p);
  REQUIRE(cert.ok);
  double prev = -1e300;
  for (double t = 0; t <= 1.0; t += 0.05) {
    const double x = cert.X(t, 2.0);
    CHECK(x >= prev);
    prev = x;
  }
  CHECK(cert.X(0.5, 5.0) > cert.X(0.5, 2.0));  // larger A(0), larger bound

  auto bigger = p;
  bigger.l = CoeffFn::constant(0.4);
  auto cert2 = build_certificate(bigger);
  REQUIRE(cert2.ok);
  CHECK(cert2.X(1.0, 2.0) > cert.X(1.0, 2.0));
}

TEST_CASE("pure-dissipation trajectory matches the separable closed form") {
  auto p = zero_problem();
  auto traj = synth_trajectory(p, TrajectoryMode::Decaying, 11);
  REQUIRE(!traj.truncated);
  const double A0 = traj.samples.front().A;
  REQUIRE(A0 > 0);
  for (const auto& s : traj.samples) {
    const double exact = std::pow(
        std::pow(A0, 1.0 - p.gamma) + p.C1 * (p.gamma - 1.0) * s.t,
        1.0 / (1.0 - p.gamma));
    CHECK(std::abs(s.A - exact) <= 1e-8 * exact);
  }
}

TEST_CASE("zero initial data stays at zero") {
  auto p = zero_problem();
  std::uint64_t seed = 0;
  // find a seed mapping to A0 = 0 is fragile; construct directly instead
  Trajectory traj;
  for (int i = 0; i <= 100; ++i) traj.samples.push_back({i * 0.01, 0, 0, 0});
  auto cert = build_certificate(p);
  REQUIRE(cert.ok);
  auto v = verify_trajectory(p, cert, traj);
  CHECK(v.hypotheses_ok);
  CHECK(v.bound_ok);
  CHECK(v.margin == doctest::Approx(1.0));
  (void)seed;
}

TEST_CASE("saturating trajectories satisfy the certificate bound") {
  auto p = zero_problem();
  p.beta = 0.3;
  p.K = 1.0;
  p.l = CoeffFn::constant(0.1);
  p.m = CoeffFn::constant(0.1);
  p.n = CoeffFn::constant(0.8);
  p.f = CoeffFn::constant(0.1);
  auto cert = build_certificate(p);
  REQUIRE(cert.ok);
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL}) {
    auto traj = synth_trajectory(p, TrajectoryMode::Saturating, seed);
    auto v = verify_trajectory(p, cert, traj);
    CHECK(v.hypotheses_ok);
    CHECK(v.bound_ok);
    CHECK(v.margin > 0);
  }
}

TEST_CASE("hypothesis violations are detected") {
  auto p = zero_problem();
  auto cert = build_certificate(p);
  REQUIRE(cert.ok);
  auto traj = synth_trajectory(p, TrajectoryMode::Decaying, 3);
  auto v = verify_trajectory(p, cert, traj);
  CHECK(v.hypotheses_ok);

  // halve B below C1*A^gamma at one sample
  auto broken = traj;
  broken.samples[broken.samples.size() / 2].B *= 0.5;
  // keep A' consistency intact by only touching B
  auto vb = verify_trajectory(p, cert, broken);
  CHECK(!vb.hypotheses_ok);

  // inconsistent derivative samples are rejected outright
  auto bad = traj;
  bad.samples[10].Aprime += 1.0;
  CHECK_THROWS_AS(verify_trajectory(p, cert, bad), std::invalid_argument);
}

TEST_CASE("trajectory synthesis is deterministic in the seed") {
  auto p = zero_problem();
  p.n = CoeffFn::constant(0.0);
  auto a = synth_trajectory(p, TrajectoryMode::Saturating, 77);
  auto b = synth_trajectory(p, TrajectoryMode::Saturating, 77);
  REQUIRE(a.samples.size() == b.samples.size());
  CHECK(a.samples.back().A == b.samples.back().A);
  auto c = synth_trajectory(p, TrajectoryMode::Saturating, 78);
  CHECK(a.samples.front().A != c.samples.front().A);
}
