#include "asqg/random_field.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "asqg/grid.hpp"

namespace asqg {
namespace {

// Top 53 bits of the generator output, mapped to [0,1). Fixed mapping so the
// coefficient stream is identical across standard libraries.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SpectralField random_band_limited_field(GridPtr grid, std::uint64_t seed,
                                        int kmax, SpectrumProfile profile,
                                        double decay_rate,
                                        ZeroModePolicy policy) {
  const int limit = std::min(grid->n1(), grid->n2()) / 3;
  if (kmax < 1 || kmax > limit) {
    throw std::invalid_argument("random field kmax " + std::to_string(kmax) +
                                " outside [1, " + std::to_string(limit) + "]");
  }
  std::mt19937_64 rng(seed);
  SpectralField f(grid, true);
  // Half-space sweep in fixed order; the mirror mode carries the conjugate.
  for (int k2 = 0; k2 <= kmax; ++k2) {
    for (int k1 = -kmax; k1 <= kmax; ++k1) {
      if (k2 == 0 && k1 <= 0) continue;
      double amp = 1.0;
      if (profile == SpectrumProfile::Decaying) {
        amp = std::pow(1.0 + double(k1) * k1 + double(k2) * k2, -decay_rate / 2.0);
      }
      const double phase = Grid::length * uniform01(rng);  // 2*pi*u
      const bool strip =
          (policy == ZeroModePolicy::StripX1 && k1 == 0) ||
          (policy == ZeroModePolicy::StripX2 && k2 == 0) ||
          (policy == ZeroModePolicy::StripBoth && (k1 == 0 || k2 == 0));
      if (strip) continue;
      const std::complex<double> c = 0.5 * amp *
          std::complex<double>(std::cos(phase), std::sin(phase));
      f.at_k(k1, k2) = c;
      f.at_k(-k1, -k2) = std::conj(c);
    }
  }
  const double l2 = std::sqrt(Grid::measure) * f.coeff_l2();
  if (l2 == 0.0) {
    throw std::runtime_error("random field degenerated to zero after stripping");
  }
  for (auto& c : f.coeffs) c /= l2;
  return f;
}

}  // namespace asqg
