#ifndef ENTLAB_PARALLEL_HPP
#define ENTLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace entlab {

// Execution mode for the sweep engines. Serial is the reference
// implementation the tests compare against; OpenMP is the default. Results
// are identical in both modes because every trial writes only to its own
// output slot and owns a generator seeded by (master seed, trial index).
enum class ExecMode { Serial, OpenMP };

namespace par {

// Worker cap: ENTLAB_THREADS when set to a positive integer, otherwise the
// OpenMP default. Caps thread count only; never changes results.
int worker_cap();

// Runs fn(i) for i in [0, n). OpenMP mode distributes iterations across
// workers; serial mode is a plain loop.
void for_each_index(std::size_t n, ExecMode mode,
                    const std::function<void(std::size_t)>& fn);

}  // namespace par
}  // namespace entlab

#endif
