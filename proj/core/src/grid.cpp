#include "asqg/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace asqg {

Grid::Grid(int n1, int n2) : n1_(n1), n2_(n2) {
  if (n1 < 8 || n2 < 8 || n1 % 2 != 0 || n2 % 2 != 0) {
    throw std::invalid_argument("grid sizes must be even and >= 8");
  }
  k1_.resize(n1);
  k2_.resize(n2);
  for (int i = 0; i < n1; ++i) k1_[i] = i < n1 / 2 ? i : i - n1;
  for (int i = 0; i < n2; ++i) k2_[i] = i < n2 / 2 ? i : i - n2;

  mask_.assign(static_cast<size_t>(n1) * n2, 0);
  const int m1 = n1 / 3, m2 = n2 / 3;
  for (int i2 = 0; i2 < n2; ++i2) {
    for (int i1 = 0; i1 < n1; ++i1) {
      mask_[idx(i1, i2)] =
          (std::abs(k1_[i1]) <= m1 && std::abs(k2_[i2]) <= m2) ? 1 : 0;
    }
  }
}

std::shared_ptr<const Grid> Grid::make(int n1, int n2) {
  return std::shared_ptr<const Grid>(new Grid(n1, n2));
}

}  // namespace asqg
