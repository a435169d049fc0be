#include "asqg/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "asqg/operators.hpp"

namespace asqg {
namespace {

double lebesgue_from_samples(const std::vector<double>& samples, double p) {
  if (std::isinf(p)) {
    double m = 0;
    for (double v : samples) m = std::max(m, std::abs(v));
    return m;
  }
  double acc = 0;
  for (double v : samples) acc += std::pow(std::abs(v), p);
  return std::pow(Grid::measure * acc / samples.size(), 1.0 / p);
}

double directional_seminorm(const SpectralField& f, int axis, double s) {
  const Grid& g = *f.grid;
  double acc = 0;
  for (int i2 = 0; i2 < g.n2(); ++i2) {
    for (int i1 = 0; i1 < g.n1(); ++i1) {
      const double ka = axis == 1 ? g.k1(i1) : g.k2(i2);
      const double w = s == 0.0 ? 1.0 : std::pow(std::abs(ka), 2.0 * s);
      acc += w * std::norm(f.coeffs[g.idx(i1, i2)]);
    }
  }
  return std::sqrt(Grid::measure * acc);
}

double full_sobolev(const SpectralField& f, double s) {
  const Grid& g = *f.grid;
  double acc = 0;
  for (int i2 = 0; i2 < g.n2(); ++i2) {
    for (int i1 = 0; i1 < g.n1(); ++i1) {
      const double kk = double(g.k1(i1)) * g.k1(i1) + double(g.k2(i2)) * g.k2(i2);
      const double w = s == 0.0 ? 1.0 : std::pow(kk, s);
      acc += w * std::norm(f.coeffs[g.idx(i1, i2)]);
    }
  }
  return std::sqrt(Grid::measure * acc);
}

double mixed_norm(const SpectralField& f, double p, double q) {
  const auto samples = from_spectral(f);
  const Grid& g = *f.grid;
  std::vector<double> inner(g.n2());
  for (int i2 = 0; i2 < g.n2(); ++i2) {
    if (std::isinf(p)) {
      double m = 0;
      for (int i1 = 0; i1 < g.n1(); ++i1)
        m = std::max(m, std::abs(samples[g.idx(i1, i2)]));
      inner[i2] = m;
    } else {
      double acc = 0;
      for (int i1 = 0; i1 < g.n1(); ++i1)
        acc += std::pow(std::abs(samples[g.idx(i1, i2)]), p);
      inner[i2] = std::pow(Grid::length * acc / g.n1(), 1.0 / p);
    }
  }
  if (std::isinf(q)) {
    return *std::max_element(inner.begin(), inner.end());
  }
  double acc = 0;
  for (double v : inner) acc += std::pow(v, q);
  return std::pow(Grid::length * acc / g.n2(), 1.0 / q);
}

double besov_b0_inf(const SpectralField& f) {
  const Grid& g = *f.grid;
  const int kmax = std::max(g.n1(), g.n2());  // |k| < sqrt(2)*n/2 anyway
  double best = 0;
  // Low block |k| <= 1, then shells 2^j <= |k| < 2^{j+1}.
  for (int j = -1; (1 << std::max(j, 0)) <= kmax; ++j) {
    SpectralField shell(f.grid, f.real_valued);
    const double lo = j < 0 ? 0.0 : double(1 << j);
    const double hi = j < 0 ? 1.0 : double(1 << (j + 1));
    bool any = false;
    for (int i2 = 0; i2 < g.n2(); ++i2) {
      for (int i1 = 0; i1 < g.n1(); ++i1) {
        const double kk = std::hypot(double(g.k1(i1)), double(g.k2(i2)));
        const bool in = j < 0 ? kk <= hi : (kk >= lo && kk < hi);
        if (in) {
          const int idx = g.idx(i1, i2);
          shell.coeffs[idx] = f.coeffs[idx];
          if (f.coeffs[idx] != std::complex<double>(0.0, 0.0)) any = true;
        }
      }
    }
    if (!any) continue;
    const auto samples = from_spectral(shell);
    double m = 0;
    for (double v : samples) m = std::max(m, std::abs(v));
    best = std::max(best, m);
  }
  return best;
}

}  // namespace

double norm(const SpectralField& f, const NormSpec& spec) {
  switch (spec.kind) {
    case NormKind::Lebesgue:
      if (!(spec.p >= 2.0)) {
        throw std::invalid_argument("Lebesgue exponent must satisfy p >= 2");
      }
      return lebesgue_from_samples(from_spectral(f), spec.p);
    case NormKind::Sup:
      return lebesgue_from_samples(from_spectral(f), inf);
    case NormKind::DirectionalSeminorm:
      if (!(spec.s >= 0.0 && spec.s <= 4.0)) {
        throw std::invalid_argument("seminorm order must lie in [0,4]");
      }
      return directional_seminorm(f, spec.axis, spec.s);
    case NormKind::FullSobolev:
      return full_sobolev(f, spec.s);
    case NormKind::Mixed:
      if (!(spec.p >= 2.0) || !(spec.q >= 2.0)) {
        throw std::invalid_argument("mixed-norm exponents must satisfy p,q >= 2");
      }
      return mixed_norm(f, spec.p, spec.q);
    case NormKind::BesovB0Inf:
      return besov_b0_inf(f);
  }
  throw std::logic_error("unreachable norm kind");
}

GradNorms grad_norms(const SpectralField& theta, double alpha, double beta) {
  const Grid& g = *theta.grid;
  GradNorms r{};
  double b_a1 = 0, b_a2 = 0, b_b1 = 0, b_b2 = 0;
  for (int i2 = 0; i2 < g.n2(); ++i2) {
    for (int i1 = 0; i1 < g.n1(); ++i1) {
      const double k1 = g.k1(i1), k2 = g.k2(i2);
      const double c2 = std::norm(theta.coeffs[g.idx(i1, i2)]);
      const double d1 = k1 * k1 * c2, d2 = k2 * k2 * c2;
      const double wa = std::pow(std::abs(k1), 2.0 * alpha);
      const double wb = std::pow(std::abs(k2), 2.0 * beta);
      r.gx1_sq += d1;
      r.gx2_sq += d2;
      b_a1 += wa * d1;
      b_a2 += wa * d2;
      b_b1 += wb * d1;
      b_b2 += wb * d2;
    }
  }
  const double m = Grid::measure;
  r.gx1_sq *= m;
  r.gx2_sq *= m;
  r.A = r.gx1_sq + r.gx2_sq;
  r.B_alpha = m * (b_a1 + b_a2);
  r.B_beta = m * (b_b1 + b_b2);
  r.d1a_sq = m * b_a1;
  r.d2b_sq = m * b_b2;
  return r;
}

}  // namespace asqg
