#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lfi::par {

/// Worker cap used by for_each_index. Defaults to the OpenMP thread budget
/// (1 when built without OpenMP). Setting it to 1 selects the serial
/// reference path; tests and the benchmark compare the two.
int max_jobs();
void set_max_jobs(int jobs);

/// Hardware/OpenMP default worker count for this build.
int hardware_jobs();

/// Runs f(i) for i in [0, n), fanning out over OpenMP threads when the job
/// cap allows. Iteration i must only write state owned by i and must draw
/// randomness from its own Rng substream; under that contract the result is
/// bit-identical for every job count.
template <class F>
void for_each_index(std::size_t n, F&& f) {
#ifdef _OPENMP
  const int jobs = max_jobs();
  if (jobs > 1 && n > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      f(static_cast<std::size_t>(i));
    }
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

/// RAII guard that pins the job cap inside a scope (used by tests).
struct JobsGuard {
  explicit JobsGuard(int jobs) : saved_(max_jobs()) { set_max_jobs(jobs); }
  ~JobsGuard() { set_max_jobs(saved_); }
  JobsGuard(const JobsGuard&) = delete;
  JobsGuard& operator=(const JobsGuard&) = delete;

 private:
  int saved_;
};

}  // namespace lfi::par
