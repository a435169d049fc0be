#pragma once

#include <limits>

#include "asqg/spectral_field.hpp"

namespace asqg {

constexpr double inf = std::numeric_limits<double>::infinity();

enum class NormKind {
  Lebesgue,             // L^p, p in [2, inf]
  Sup,                  // L^inf over real-space samples
  DirectionalSeminorm,  // ||Lambda_{x_axis}^s f||_2
  FullSobolev,          // ||Lambda^s f||_2
  Mixed,                // L^q_{x2} L^p_{x1}
  BesovB0Inf            // dyadic-shell proxy of B^0_{inf,inf}
};

struct NormSpec {
  NormKind kind;
  double p = 2, q = 2;  // >= 2 or inf
  int axis = 1;
  double s = 0;  // in [0,4]

  static NormSpec lebesgue(double p) { return {NormKind::Lebesgue, p}; }
  static NormSpec sup() { return {NormKind::Sup}; }
  static NormSpec directional(int axis, double s) {
    return {NormKind::DirectionalSeminorm, 2, 2, axis, s};
  }
  static NormSpec sobolev(double s) { return {NormKind::FullSobolev, 2, 2, 1, s}; }
  static NormSpec mixed(double p, double q) { return {NormKind::Mixed, p, q}; }
  static NormSpec besov() { return {NormKind::BesovB0Inf}; }
};

double norm(const SpectralField& f, const NormSpec& spec);

/// A = ||grad theta||_2^2; B_alpha, B_beta its directionally smoothed
/// counterparts entering the H^1 energy inequality.
struct GradNorms {
  double A;        // ||d1 theta||^2 + ||d2 theta||^2
  double B_alpha;  // ||L^a_{x1} d1 theta||^2 + ||L^a_{x1} d2 theta||^2
  double B_beta;   // axis-2 analogue with beta
  // Per-axis pieces used by the dissipation-gradient monitor.
  double gx1_sq;    // ||d1 theta||^2
  double gx2_sq;    // ||d2 theta||^2
  double d1a_sq;    // ||L^alpha_{x1} d1 theta||^2
  double d2b_sq;    // ||L^beta_{x2} d2 theta||^2
};

GradNorms grad_norms(const SpectralField& theta, double alpha, double beta);

}  // namespace asqg
