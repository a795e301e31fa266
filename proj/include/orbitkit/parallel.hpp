#pragma once

#include <cstddef>
#include <cstdint>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace orbitkit {

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// f(i) for i in [0, n). Iterations must be independent; the loop body must
/// not throw. Runs serially without OpenMP, inside an enclosing parallel
/// region, or for tiny ranges.
template <class F>
void parallel_for(std::size_t n, F&& f, std::size_t serial_below = 8) {
#if defined(_OPENMP)
  if (n >= serial_below && !omp_in_parallel() && omp_get_max_threads() > 1) {
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) f(static_cast<std::size_t>(i));
    return;
  }
#endif
  (void)serial_below;
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace orbitkit
