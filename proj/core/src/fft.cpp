#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace rankone::detail {

namespace {

struct PlanPair {
  fftw_plan fwd;
  fftw_plan bwd;
};

std::mutex plan_mutex;

PlanPair& plans_for(int n) {
  static std::map<int, PlanPair> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Dummy buffers: FFTW_ESTIMATE does not touch them, and the plans are
  // re-executed on caller arrays via fftw_execute_dft.
  std::vector<std::complex<double>> buf(n);
  auto* ptr = reinterpret_cast<fftw_complex*>(buf.data());
  PlanPair p;
  p.fwd = fftw_plan_dft_1d(n, ptr, ptr, FFTW_FORWARD, FFTW_ESTIMATE);
  p.bwd = fftw_plan_dft_1d(n, ptr, ptr, FFTW_BACKWARD, FFTW_ESTIMATE);
  if (!p.fwd || !p.bwd) throw std::runtime_error("fftw plan creation failed");
  return cache.emplace(n, p).first->second;
}

}  // namespace

void fft_forward(std::vector<std::complex<double>>& data) {
  auto& p = plans_for(static_cast<int>(data.size()));
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p.fwd, ptr, ptr);
}

void fft_backward(std::vector<std::complex<double>>& data) {
  auto& p = plans_for(static_cast<int>(data.size()));
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p.bwd, ptr, ptr);
}

}  // namespace rankone::detail
