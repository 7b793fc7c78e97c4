#include "entlab/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace entlab::par {

int worker_cap() {
  if (const char* env = std::getenv("ENTLAB_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (...) {
      // fall through to the default
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void for_each_index(std::size_t n, ExecMode mode,
                    const std::function<void(std::size_t)>& fn) {
#ifdef _OPENMP
  if (mode == ExecMode::OpenMP) {
    const int workers = worker_cap();
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (long long i = 0; i < count; ++i) {
      fn(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace entlab::par
