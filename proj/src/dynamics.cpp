#include "entlab/dynamics.hpp"

#include <cmath>

namespace entlab::dynamics {

namespace {

const Cut kSideA = {0};

void check_times(double T, double t) {
  if (!(T > 0.0)) throw DomainError("semigroup: T must be positive");
  if (!(t >= 0.0)) throw DomainError("semigroup: t must be non-negative");
}

DensityMatrix evolve(double T, double t, const DensityMatrix& initial) {
  const KrausChannel ch =
      channels::unilocal(channel_at(T, t), 0, initial.shape());
  return channels::apply(ch, initial);
}

}  // namespace

KrausChannel channel_at(double T, double t) {
  check_times(T, t);
  return channels::depolarizing(std::exp(-t / T));
}

KrausChannel channel_at(const SemigroupChannel& sg) {
  return channel_at(sg.T, sg.t);
}

double tsep_analytic(double T) {
  if (!(T > 0.0)) throw DomainError("tsep_analytic: T must be positive");
  return T * std::log(3.0);
}

double tsep_numeric(double T, const DensityMatrix& initial, double tol) {
  check_times(T, 0.0);
  if (!(tol > 0.0)) throw DomainError("tsep_numeric: tol must be positive");
  if (initial.dim() != 4) {
    throw DimensionError("tsep_numeric: initial state must be two-qubit");
  }

  const auto conc_at = [&](double t) {
    return measures::concurrence(evolve(T, t, initial));
  };

  double lo = 0.0;
  if (conc_at(lo) <= kZeroThreshold) {
    throw DomainError("tsep_numeric: initial state is separable, no decay to detect");
  }
  double hi = 50.0 * T;
  if (conc_at(hi) > kZeroThreshold) {
    throw NumericError("tsep_numeric: concurrence still positive at the upper bracket");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (conc_at(mid) > kZeroThreshold ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Trajectory trajectory(double T, const DensityMatrix& initial,
                      const std::vector<double>& t_grid, MeasureKind kind,
                      ExecMode mode) {
  if (t_grid.empty()) throw DomainError("trajectory: empty time grid");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    check_times(T, t_grid[i]);
    if (i > 0 && !(t_grid[i] > t_grid[i - 1])) {
      throw DomainError("trajectory: time grid must be strictly increasing");
    }
  }

  std::vector<TrajectorySample> samples;
  samples.reserve(t_grid.size());
  for (double t : t_grid) {
    samples.push_back(TrajectorySample{t, initial, MeasureValue{kind, 0.0}});
  }
  par::for_each_index(t_grid.size(), mode, [&](std::size_t i) {
    samples[i].state = evolve(T, t_grid[i], initial);
    samples[i].measure.value = measures::evaluate(kind, samples[i].state, kSideA);
  });
  return Trajectory{std::move(samples)};
}

}  // namespace entlab::dynamics
