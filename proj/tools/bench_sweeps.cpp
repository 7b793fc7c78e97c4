// Timing comparison of the serial reference engines against their OpenMP
// counterparts. The two modes must agree bit-exactly (the test suite checks
// that); this tool only reports throughput.

#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "entlab/dynamics.hpp"
#include "entlab/ordering.hpp"

using namespace entlab;

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return static_cast<double>(clock()) / CLOCKS_PER_SEC;
#endif
}

template <typename Fn>
void bench(const char* name, Fn&& fn) {
  const double t0 = now();
  fn(ExecMode::Serial);
  const double serial = now() - t0;
  const double t1 = now();
  fn(ExecMode::OpenMP);
  const double parallel = now() - t1;
  std::printf("%-28s serial %8.3f s   openmp %8.3f s   speedup %.2fx\n", name,
              serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
  std::printf("worker cap: %d\n", par::worker_cap());
  const KrausChannel depol = channels::depolarizing(0.5);

  bench("scan_diagram 3x2000", [&](ExecMode mode) {
    ordering::scan_diagram(
        depol, MeasureKind::Concurrence,
        {ordering::Family::Werner, ordering::Family::Pure, ordering::Family::Random},
        2000, 42, mode);
  });

  bench("axiom_suite 4000", [&](ExecMode mode) {
    ordering::axiom_suite(MeasureKind::Concurrence, 4000, 42, mode);
  });

  bench("maxent 4000", [&](ExecMode mode) {
    ordering::max_entangled_equivalence(depol, 4000, 42, mode);
  });

  bench("violation search (none)", [&](ExecMode mode) {
    // Unitary channel: the search must scan the whole budget.
    ordering::find_violation(channels::identity_channel(2),
                             MeasureKind::Concurrence,
                             ordering::SearchStrategy::Random, 20000, 42, mode);
  });

  return 0;
}
