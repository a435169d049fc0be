#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>

namespace asqg::detail {
namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  fftw_complex* buf = nullptr;
  size_t n = 0;
};

std::mutex g_mutex;
std::map<std::pair<int, int>, PlanPair>& plan_cache() {
  static std::map<std::pair<int, int>, PlanPair> cache;
  return cache;
}

PlanPair& plans_for(int n1, int n2) {
  auto key = std::make_pair(n1, n2);
  auto& cache = plan_cache();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  PlanPair p;
  p.n = static_cast<size_t>(n1) * n2;
  p.buf = fftw_alloc_complex(p.n);
  // In-place transforms on the cached buffer; FFTW's slow axis first.
  p.fwd = fftw_plan_dft_2d(n2, n1, p.buf, p.buf, FFTW_FORWARD, FFTW_ESTIMATE);
  p.bwd = fftw_plan_dft_2d(n2, n1, p.buf, p.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  return cache.emplace(key, p).first->second;
}

void run(int n1, int n2, const std::complex<double>* in,
         std::complex<double>* out, bool forward) {
  std::lock_guard<std::mutex> lock(g_mutex);
  PlanPair& p = plans_for(n1, n2);
  std::memcpy(p.buf, static_cast<const void*>(in), p.n * sizeof(fftw_complex));
  fftw_execute(forward ? p.fwd : p.bwd);
  std::memcpy(static_cast<void*>(out), p.buf, p.n * sizeof(fftw_complex));
}

}  // namespace

void dft_forward(int n1, int n2, const std::complex<double>* in,
                 std::complex<double>* out) {
  run(n1, n2, in, out, true);
}

void dft_backward(int n1, int n2, const std::complex<double>* in,
                  std::complex<double>* out) {
  run(n1, n2, in, out, false);
}

}  // namespace asqg::detail
