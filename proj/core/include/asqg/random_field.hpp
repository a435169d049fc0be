#pragma once

#include <cstdint>

#include "asqg/spectral_field.hpp"

namespace asqg {

enum class SpectrumProfile { Flat, Decaying };

enum class ZeroModePolicy { Keep, StripX1, StripX2, StripBoth };

/// Deterministic band-limited random real field, normalized to ||f||_2 = 1.
///
/// Phases come from an mt19937_64 stream seeded with `seed`; the mode order
/// and the 53-bit uniform mapping are fixed, so the coefficients are
/// bit-stable across platforms. Support: modes with 0 < max(|k1|,|k2|) <=
/// kmax; the (0,0) mode is always zero. Flat profile has unit amplitude per
/// mode, Decaying uses (1+|k|^2)^(-rate/2). Strip policies zero every mode
/// with k1 = 0 (resp. k2 = 0, both).
SpectralField random_band_limited_field(GridPtr grid, std::uint64_t seed,
                                        int kmax,
                                        SpectrumProfile profile = SpectrumProfile::Flat,
                                        double decay_rate = 0.0,
                                        ZeroModePolicy policy = ZeroModePolicy::Keep);

}  // namespace asqg
