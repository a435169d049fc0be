#pragma once

#include <complex>
#include <span>
#include <vector>

#include "asqg/grid.hpp"

namespace asqg {

/// Scalar field on the torus stored as Fourier coefficients.
///
/// Convention: the forward transform divides by n1*n2, so coeff(0,0) is the
/// mean of the real-space samples and f(x) = sum_k c_k exp(i k.x).
class SpectralField {
 public:
  explicit SpectralField(GridPtr grid, bool real_valued = true);

  GridPtr grid;
  std::vector<std::complex<double>> coeffs;
  bool real_valued;

  std::complex<double>& at(int i1, int i2) { return coeffs[grid->idx(i1, i2)]; }
  const std::complex<double>& at(int i1, int i2) const {
    return coeffs[grid->idx(i1, i2)];
  }
  /// Coefficient at signed wavenumbers (k1,k2); wraps negative k.
  std::complex<double>& at_k(int k1, int k2);
  const std::complex<double>& at_k(int k1, int k2) const;

  /// Max |coeff| over all modes.
  double amplitude() const;
  /// sqrt(sum |c_k|^2), the unscaled coefficient l2 norm.
  double coeff_l2() const;
  bool finite() const;
};

SpectralField to_spectral(GridPtr grid, std::span<const double> samples);
std::vector<double> from_spectral(const SpectralField& f);

}  // namespace asqg
