#include "asqg/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace asqg {
namespace {

void validate(const OperatorSpec& op) {
  if (op.kind == OperatorKind::DirectionalFractional ||
      op.kind == OperatorKind::Riesz ||
      op.kind == OperatorKind::PartialDerivative) {
    if (op.axis != 1 && op.axis != 2) {
      throw std::invalid_argument("operator axis must be 1 or 2");
    }
  }
  if (op.kind == OperatorKind::DirectionalFractional ||
      op.kind == OperatorKind::FullFractional) {
    if (!(op.order >= 0.0 && op.order <= 4.0)) {
      throw std::invalid_argument("operator order must lie in [0,4]");
    }
  }
}

}  // namespace

SpectralField apply_multiplier(const SpectralField& f, const OperatorSpec& op) {
  validate(op);
  SpectralField out(f.grid, f.real_valued);
  const Grid& g = *f.grid;
  const double s = op.order;
  for (int i2 = 0; i2 < g.n2(); ++i2) {
    const double k2 = g.k2(i2);
    for (int i1 = 0; i1 < g.n1(); ++i1) {
      const double k1 = g.k1(i1);
      const int idx = g.idx(i1, i2);
      std::complex<double> sym;
      switch (op.kind) {
        case OperatorKind::DirectionalFractional: {
          const double ka = op.axis == 1 ? k1 : k2;
          sym = s == 0.0 ? 1.0 : std::pow(std::abs(ka), s);
          break;
        }
        case OperatorKind::FullFractional: {
          const double kk = std::hypot(k1, k2);
          sym = s == 0.0 ? 1.0 : std::pow(kk, s);
          break;
        }
        case OperatorKind::Riesz: {
          const double kk = std::hypot(k1, k2);
          const double kj = op.axis == 1 ? k1 : k2;
          sym = kk == 0.0 ? std::complex<double>(0.0, 0.0)
                          : std::complex<double>(0.0, kj / kk);
          break;
        }
        case OperatorKind::PartialDerivative: {
          const double kj = op.axis == 1 ? k1 : k2;
          sym = std::complex<double>(0.0, kj);
          break;
        }
      }
      out.coeffs[idx] = sym * f.coeffs[idx];
    }
  }
  return out;
}

std::pair<SpectralField, SpectralField> velocity_sqg(const SpectralField& theta) {
  SpectralField u1 = apply_multiplier(theta, OperatorSpec::riesz(2));
  for (auto& c : u1.coeffs) c = -c;
  SpectralField u2 = apply_multiplier(theta, OperatorSpec::riesz(1));
  return {std::move(u1), std::move(u2)};
}

std::pair<SpectralField, SpectralField> velocity_pm(const SpectralField& theta) {
  SpectralField r1 = apply_multiplier(theta, OperatorSpec::riesz(1));
  SpectralField u1 = apply_multiplier(r1, OperatorSpec::riesz(2));
  for (auto& c : u1.coeffs) c = -c;
  SpectralField u2 = apply_multiplier(r1, OperatorSpec::riesz(1));
  return {std::move(u1), std::move(u2)};
}

double max_spectral_divergence(const SpectralField& u1, const SpectralField& u2) {
  const Grid& g = *u1.grid;
  double m = 0;
  for (int i2 = 0; i2 < g.n2(); ++i2) {
    for (int i1 = 0; i1 < g.n1(); ++i1) {
      const int idx = g.idx(i1, i2);
      const std::complex<double> div =
          std::complex<double>(0.0, g.k1(i1)) * u1.coeffs[idx] +
          std::complex<double>(0.0, g.k2(i2)) * u2.coeffs[idx];
      m = std::max(m, std::abs(div));
    }
  }
  return m;
}

SpectralField dealias(const SpectralField& f) {
  SpectralField out = f;
  const auto& mask = f.grid->mask();
  for (size_t i = 0; i < out.coeffs.size(); ++i) {
    if (!mask[i]) out.coeffs[i] = 0.0;
  }
  return out;
}

}  // namespace asqg
