#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nlm {

/// Parallel loop over [0, count). Static schedule so the partition is a pure
/// function of the thread count.
template <typename F>
void parallel_for(std::size_t count, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < static_cast<long long>(count); ++i)
    body(static_cast<std::size_t>(i));
}

/// Parallel sum of term(i) over [0, count). Per-thread partials are combined
/// in thread order, so the result is identical from run to run for a fixed
/// OMP_NUM_THREADS (round-off pattern included).
template <typename F>
double parallel_sum(std::size_t count, F&& term) {
#ifdef _OPENMP
  int nt = omp_get_max_threads();
  std::vector<double> partial(static_cast<std::size_t>(nt), 0.0);
#pragma omp parallel num_threads(nt)
  {
    int t = omp_get_thread_num();
    double acc = 0.0;
#pragma omp for schedule(static)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      acc += term(static_cast<std::size_t>(i));
    partial[static_cast<std::size_t>(t)] = acc;
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
#else
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) total += term(i);
  return total;
#endif
}

}  // namespace nlm
