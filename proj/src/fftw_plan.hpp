#pragma once

#include <fftw3.h>

#include <complex>
#include <mutex>
#include <span>
#include <stdexcept>
#include <vector>

namespace wavelab::detail {

/// FFTW's planner is not thread-safe; every plan is built and destroyed
/// under this lock. Execution needs no lock.
inline std::mutex& fftw_planner_mutex() {
  static std::mutex mutex;
  return mutex;
}

/// Owning handle for an fftw_plan.
class FftwPlan {
 public:
  explicit FftwPlan(fftw_plan plan) : plan_(plan) {
    if (plan_ == nullptr) throw std::runtime_error("fftw: plan creation failed");
  }
  FftwPlan(const FftwPlan&) = delete;
  FftwPlan& operator=(const FftwPlan&) = delete;
  ~FftwPlan() {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan_);
  }
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

/// In-place complex DFT over an n-dimensional cube of side `points`.
inline void complex_dft(std::vector<std::complex<double>>& data, int dims, int points, int sign) {
  int shape[3] = {points, points, points};
  auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan raw;
  {
    std::lock_guard lock(fftw_planner_mutex());
    raw = fftw_plan_dft(dims, shape, buffer, buffer, sign, FFTW_ESTIMATE);
  }
  FftwPlan(raw).execute();
}

/// In-place real-to-real transform with per-axis kinds (RODFT00, REDFT00, ...).
inline void real_r2r(std::vector<double>& data, std::span<const int> shape,
                     std::span<const fftw_r2r_kind> kinds) {
  fftw_plan raw;
  {
    std::lock_guard lock(fftw_planner_mutex());
    raw = fftw_plan_r2r(static_cast<int>(shape.size()), shape.data(), data.data(), data.data(),
                        kinds.data(), FFTW_ESTIMATE);
  }
  FftwPlan(raw).execute();
}

}  // namespace wavelab::detail
