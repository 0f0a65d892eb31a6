#include "nspart/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>

namespace nspart::fft {
namespace {

// FFTW plan creation is not thread-safe; execution on private buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct Workspace {
  int n = 0;
  double* real = nullptr;
  fftw_complex* cplx = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan inv = nullptr;

  explicit Workspace(int n_) : n(n_) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    real = fftw_alloc_real(static_cast<size_t>(n) * n);
    cplx = fftw_alloc_complex(static_cast<size_t>(n) * (n / 2 + 1));
    // FFTW_ESTIMATE keeps plan selection deterministic run to run.
    fwd = fftw_plan_dft_r2c_2d(n, n, real, cplx, FFTW_ESTIMATE);
    inv = fftw_plan_dft_c2r_2d(n, n, cplx, real, FFTW_ESTIMATE);
  }

  ~Workspace() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(inv);
    fftw_free(real);
    fftw_free(cplx);
  }

  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;
};

Workspace& workspace_for(int n) {
  thread_local std::map<int, Workspace> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.try_emplace(n, n).first;
  return it->second;
}

}  // namespace

std::vector<std::complex<double>> forward(const TorusGrid& grid, std::span<const double> values) {
  const int n = grid.n();
  Workspace& ws = workspace_for(n);
  std::memcpy(ws.real, values.data(), sizeof(double) * values.size());
  fftw_execute(ws.fwd);
  std::vector<std::complex<double>> out(spectrum_size(n));
  std::memcpy(out.data(), ws.cplx, sizeof(fftw_complex) * out.size());
  return out;
}

std::vector<double> inverse(const TorusGrid& grid, std::span<const std::complex<double>> coeffs) {
  const int n = grid.n();
  Workspace& ws = workspace_for(n);
  std::memcpy(ws.cplx, coeffs.data(), sizeof(fftw_complex) * coeffs.size());
  fftw_execute(ws.inv);
  std::vector<double> out(static_cast<size_t>(n) * n);
  const double scale = 1.0 / (static_cast<double>(n) * n);
  for (size_t k = 0; k < out.size(); ++k) out[k] = ws.real[k] * scale;
  return out;
}

}  // namespace nspart::fft
