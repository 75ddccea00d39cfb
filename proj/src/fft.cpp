#include "mudp/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace mudp::fft {

namespace {

struct PlanPair {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
};

std::mutex plan_mutex;

// Plans are created once per size with FFTW_ESTIMATE (deterministic plan
// choice) and FFTW_UNALIGNED so they can be executed on arbitrary buffers.
// fftw_execute_dft_* on distinct arrays is thread-safe; creation is not.
const PlanPair& plans_for(int n) {
  static std::map<int, PlanPair> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  PlanPair& entry = cache[n];
  if (entry.r2c == nullptr) {
    double* re = fftw_alloc_real(static_cast<size_t>(n));
    fftw_complex* cx = fftw_alloc_complex(static_cast<size_t>(n / 2 + 1));
    entry.r2c = fftw_plan_dft_r2c_1d(n, re, cx, FFTW_ESTIMATE | FFTW_UNALIGNED);
    entry.c2r = fftw_plan_dft_c2r_1d(n, cx, re, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(re);
    fftw_free(cx);
    if (entry.r2c == nullptr || entry.c2r == nullptr)
      throw std::runtime_error("fft: plan creation failed for n=" + std::to_string(n));
  }
  return entry;
}

}  // namespace

std::vector<std::complex<double>> forward(std::span<const double> values) {
  const int n = static_cast<int>(values.size());
  if (n < 2) throw std::invalid_argument("fft::forward: need at least 2 samples");
  const PlanPair& p = plans_for(n);
  std::vector<double> in(values.begin(), values.end());
  std::vector<std::complex<double>> out(static_cast<size_t>(n / 2 + 1));
  fftw_execute_dft_r2c(p.r2c, in.data(), reinterpret_cast<fftw_complex*>(out.data()));
  const double scale = 1.0 / n;
  for (auto& m : out) m *= scale;
  return out;
}

std::vector<double> inverse(std::span<const std::complex<double>> modes, int n) {
  if (static_cast<int>(modes.size()) != n / 2 + 1)
    throw std::invalid_argument("fft::inverse: modes size must be n/2+1");
  const PlanPair& p = plans_for(n);
  // c2r clobbers its input; work on a copy.
  std::vector<std::complex<double>> in(modes.begin(), modes.end());
  std::vector<double> out(static_cast<size_t>(n));
  fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(in.data()), out.data());
  return out;
}

}  // namespace mudp::fft
