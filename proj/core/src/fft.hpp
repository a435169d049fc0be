#pragma once

#include <complex>

namespace asqg::detail {

// Unnormalized c2c transforms on an n1 x n2 layout with x2 as the slow axis.
// Serialized internally; safe to call from multiple threads.
void dft_forward(int n1, int n2, const std::complex<double>* in,
                 std::complex<double>* out);
void dft_backward(int n1, int n2, const std::complex<double>* in,
                  std::complex<double>* out);

}  // namespace asqg::detail
