#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace asqg {

/// Discretization of the periodic torus [0,2pi)^2.
///
/// Wavenumbers follow the standard FFT ordering: index i maps to
/// k = i for i < n/2 and k = i - n for i >= n/2, a bijection onto
/// {-n/2, ..., n/2-1}. The dealias mask retains exactly the modes with
/// |k1| <= n1/3 and |k2| <= n2/3 (two-thirds rule).
class Grid {
 public:
  static std::shared_ptr<const Grid> make(int n1, int n2);

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int size() const { return n1_ * n2_; }

  /// Flat index with x2 as the outer (slow) axis.
  int idx(int i1, int i2) const { return i1 + n1_ * i2; }

  int k1(int i1) const { return k1_[i1]; }
  int k2(int i2) const { return k2_[i2]; }
  const std::vector<int>& k1_table() const { return k1_; }
  const std::vector<int>& k2_table() const { return k2_; }

  bool masked_in(int i1, int i2) const { return mask_[idx(i1, i2)] != 0; }
  const std::vector<std::uint8_t>& mask() const { return mask_; }

  /// Largest wavenumber magnitude retained by the dealias mask per axis.
  int kmax1() const { return n1_ / 3; }
  int kmax2() const { return n2_ / 3; }

  static constexpr double length = 6.283185307179586476925286766559;  // 2*pi
  static constexpr double measure = length * length;

 private:
  Grid(int n1, int n2);
  int n1_, n2_;
  std::vector<int> k1_, k2_;
  std::vector<std::uint8_t> mask_;
};

using GridPtr = std::shared_ptr<const Grid>;

}  // namespace asqg
