#include "coorbit2d/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

#include "coorbit2d/error.hpp"

namespace coorbit2d {

namespace {

// fftw_execute_dft is thread safe; the planner is not, hence the lock.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    auto* buf = fftw_alloc_complex(n * n);
    fftw_plan plan = fftw_plan_dft_2d(static_cast<int>(n), static_cast<int>(n), buf, buf, sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    if (plan == nullptr) throw Error(ErrorKind::numeric, "FFTW planning failed");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void run(std::span<cplx> data, std::size_t n, int sign) {
  if (data.size() != n * n) throw Error(ErrorKind::numeric, "FFT buffer size does not match grid");
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(cache().get(n, sign), p, p);
}

}  // namespace

void fft2d_forward(std::span<cplx> data, std::size_t n) { run(data, n, FFTW_FORWARD); }

void fft2d_inverse(std::span<cplx> data, std::size_t n) {
  run(data, n, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(n * n);
  for (auto& v : data) v *= scale;
}

}  // namespace coorbit2d
