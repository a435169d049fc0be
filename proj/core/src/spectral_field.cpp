#include "asqg/spectral_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fft.hpp"

namespace asqg {

SpectralField::SpectralField(GridPtr g, bool real)
    : grid(std::move(g)), real_valued(real) {
  if (grid) coeffs.assign(grid->size(), {0.0, 0.0});
}

std::complex<double>& SpectralField::at_k(int k1, int k2) {
  const int i1 = k1 >= 0 ? k1 : k1 + grid->n1();
  const int i2 = k2 >= 0 ? k2 : k2 + grid->n2();
  return coeffs[grid->idx(i1, i2)];
}

const std::complex<double>& SpectralField::at_k(int k1, int k2) const {
  const int i1 = k1 >= 0 ? k1 : k1 + grid->n1();
  const int i2 = k2 >= 0 ? k2 : k2 + grid->n2();
  return coeffs[grid->idx(i1, i2)];
}

double SpectralField::amplitude() const {
  double m = 0;
  for (const auto& c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

double SpectralField::coeff_l2() const {
  double s = 0;
  for (const auto& c : coeffs) s += std::norm(c);
  return std::sqrt(s);
}

bool SpectralField::finite() const {
  for (const auto& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

SpectralField to_spectral(GridPtr grid, std::span<const double> samples) {
  if (!grid) throw std::invalid_argument("to_spectral: null grid");
  if (samples.size() != static_cast<size_t>(grid->size())) {
    throw std::invalid_argument("to_spectral: sample count " +
                                std::to_string(samples.size()) +
                                " does not match grid " +
                                std::to_string(grid->n1()) + "x" +
                                std::to_string(grid->n2()));
  }
  SpectralField f(grid, true);
  std::vector<std::complex<double>> in(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) in[i] = samples[i];
  detail::dft_forward(grid->n1(), grid->n2(), in.data(), f.coeffs.data());
  const double scale = 1.0 / grid->size();
  for (auto& c : f.coeffs) c *= scale;
  return f;
}

std::vector<double> from_spectral(const SpectralField& f) {
  if (!f.real_valued) {
    throw std::invalid_argument("from_spectral: field is not real-valued");
  }
  std::vector<std::complex<double>> out(f.coeffs.size());
  detail::dft_backward(f.grid->n1(), f.grid->n2(), f.coeffs.data(), out.data());
  const double amp = f.amplitude();
  // Absolute floor: frequency-restricted copies of a larger field carry
  // imaginary roundoff at the parent's scale even when their own coefficients
  // are tiny, so a purely amp-relative tolerance misfires on them.
  const double tol = std::max(1e-12 * amp * f.grid->size(), 1e-13);
  std::vector<double> samples(out.size());
  for (size_t i = 0; i < out.size(); ++i) {
    if (std::abs(out[i].imag()) > tol) {
      throw std::runtime_error(
          "from_spectral: Hermitian symmetry violated (imag residue " +
          std::to_string(out[i].imag()) + ")");
    }
    samples[i] = out[i].real();
  }
  return samples;
}

}  // namespace asqg
