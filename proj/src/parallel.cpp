#include "lfi/parallel.hpp"

#include <atomic>

namespace lfi::par {

namespace {

int default_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::atomic<int> g_max_jobs{0};  // 0 = not set yet

}  // namespace

int hardware_jobs() { return default_jobs(); }

int max_jobs() {
  int j = g_max_jobs.load(std::memory_order_relaxed);
  return j > 0 ? j : default_jobs();
}

void set_max_jobs(int jobs) {
  g_max_jobs.store(jobs > 0 ? jobs : 0, std::memory_order_relaxed);
}

}  // namespace lfi::par
