#pragma once

#include <utility>

#include "asqg/spectral_field.hpp"

namespace asqg {

enum class OperatorKind {
  DirectionalFractional,  // |k_axis|^s
  FullFractional,         // |k|^s
  Riesz,                  // i k_axis / |k|, 0 at the origin
  PartialDerivative       // i k_axis
};

struct OperatorSpec {
  OperatorKind kind;
  int axis = 1;      // 1 or 2 where applicable
  double order = 0;  // exponent s, in [0,4]

  static OperatorSpec directional(int axis, double s) {
    return {OperatorKind::DirectionalFractional, axis, s};
  }
  static OperatorSpec fractional(double s) {
    return {OperatorKind::FullFractional, 1, s};
  }
  static OperatorSpec riesz(int axis) { return {OperatorKind::Riesz, axis, 1}; }
  static OperatorSpec derivative(int axis) {
    return {OperatorKind::PartialDerivative, axis, 1};
  }
};

SpectralField apply_multiplier(const SpectralField& f, const OperatorSpec& op);

/// u = (-R2 theta, R1 theta), the perpendicular Riesz velocity.
std::pair<SpectralField, SpectralField> velocity_sqg(const SpectralField& theta);
/// u = (-R1 R2 theta, R1 R1 theta), the porous-medium velocity.
std::pair<SpectralField, SpectralField> velocity_pm(const SpectralField& theta);

/// Max over modes of |i k1 u1 + i k2 u2|.
double max_spectral_divergence(const SpectralField& u1, const SpectralField& u2);

SpectralField dealias(const SpectralField& f);

}  // namespace asqg
