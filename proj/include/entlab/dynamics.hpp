#ifndef ENTLAB_DYNAMICS_HPP
#define ENTLAB_DYNAMICS_HPP

#include <vector>

#include "entlab/channels.hpp"
#include "entlab/measures.hpp"
#include "entlab/parallel.hpp"

namespace entlab {

// One-parameter depolarizing semigroup: identity at t = 0, full contraction
// to I/2 as t -> infinity.
struct SemigroupChannel {
  double T = 1.0;  // decay time constant
  double t = 0.0;  // elapsed time
};

struct TrajectorySample {
  double t = 0.0;
  DensityMatrix state;
  MeasureValue measure;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;  // strictly increasing t
};

namespace dynamics {

// Concurrence below this counts as zero when locating t_sep.
inline constexpr double kZeroThreshold = 1e-9;

// The semigroup element at time t: depolarizing(p = exp(-t/T)).
KrausChannel channel_at(double T, double t);
KrausChannel channel_at(const SemigroupChannel& sg);

// t_sep = T ln 3 for the maximally entangled initial state.
double tsep_analytic(double T);

// Bisection on t for the zero of concurrence((E_t (x) I)[initial]) with
// bracket [0, 50 T]. Throws DomainError for an initially separable state and
// NumericError when concurrence is still positive at the upper bracket.
double tsep_numeric(double T, const DensityMatrix& initial, double tol);

// Samples the unilocal semigroup action over a time grid.
Trajectory trajectory(double T, const DensityMatrix& initial,
                      const std::vector<double>& t_grid, MeasureKind kind,
                      ExecMode mode = ExecMode::OpenMP);

}  // namespace dynamics
}  // namespace entlab

#endif
