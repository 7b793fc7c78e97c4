#ifndef ENTLAB_ORDERING_HPP
#define ENTLAB_ORDERING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entlab/channels.hpp"
#include "entlab/measures.hpp"
#include "entlab/parallel.hpp"

namespace entlab {

// One sample of the [E_in, E_out] diagram of a unilocal channel.
struct DiagramPoint {
  std::string family;  // werner | pure | random
  double param = 0.0;
  MeasureKind kind = MeasureKind::Concurrence;
  double e_in = 0.0;
  double e_out = 0.0;
};

// All E_in values whose states land in one E_out bin.
struct HorizontalFiber {
  double bin_lo = 0.0;
  double bin_hi = 0.0;
  std::vector<double> e_in_values;  // sorted ascending
  double e_in_min() const { return e_in_values.front(); }
  double e_in_max() const { return e_in_values.back(); }
};

// Two fibers with distinct E_out whose E_in ranges intersect nontrivially;
// from such a pair an ordering counterexample can be designed.
struct FiberOverlap {
  std::size_t fiber_a = 0;
  std::size_t fiber_b = 0;
  double lo = 0.0;  // intersection of the two e_in ranges
  double hi = 0.0;
};

struct FiberAnalysis {
  std::vector<HorizontalFiber> fibers;  // ordered by bin
  std::vector<FiberOverlap> overlaps;
};

// A pair of states witnessing failure of the ordering-preservation
// implication E(rho1) > E(rho2) => E(rho1') >= E(rho2'): rho1 enters more
// entangled than rho2 but leaves less entangled, with a numerical margin on
// both inequalities.
struct ViolationCertificate {
  DensityMatrix rho1;
  DensityMatrix rho2;
  std::string channel_name;
  MeasureKind kind = MeasureKind::Concurrence;
  double e_in1 = 0.0;
  double e_in2 = 0.0;
  double e_out1 = 0.0;
  double e_out2 = 0.0;
  double margin = 0.0;
};

struct FourQubitReport {
  double rho1_invariance_residual = 0.0;  // ||rho1' - rho1||_F
  double rho2_mixture_residual = 0.0;     // vs 1/2 rho1 + 1/2 |11><11| (x) I/4
  double neg_in_rho1 = 0.0;
  double neg_in_rho2 = 0.0;
  double neg_out_rho1 = 0.0;
  double neg_out_rho2 = 0.0;
  bool convexity_bound_holds = false;  // N(rho2') <= N(rho1')/2 + 1e-9
  bool ordering_reversed = false;      // in: rho2 > rho1; out: rho2' < rho1'
  bool pass() const;
};

struct MeasureSpread {
  MeasureKind kind = MeasureKind::Concurrence;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double spread() const { return max - min; }
};

struct MaxEntReport {
  int trials = 0;
  std::vector<MeasureSpread> per_measure;
  double max_spread = 0.0;
  bool pass = false;  // every spread < 1e-7
};

// One axiom-harness result: the worst deviation seen across the sampled
// trials, against its tolerance.
struct AxiomCheck {
  std::string name;
  int trials = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

namespace ordering {

inline constexpr double kViolationMargin = 1e-4;
inline constexpr double kMonotonicityTol = 1e-7;
inline constexpr double kFiberBinWidth = 1e-3;

enum class Family { Werner, Pure, Random };
enum class SearchStrategy { Grid, Random };

Family family_from_string(const std::string& name);
std::string to_string(Family family);
SearchStrategy strategy_from_string(const std::string& name);

// Samples each family on `grid` parameter values (plus seeded random states
// for the random family) and records the measure before and after the
// unilocal action of `local_ch` on subsystem A of a two-qubit system.
std::vector<DiagramPoint> scan_diagram(const KrausChannel& local_ch,
                                       MeasureKind kind,
                                       const std::vector<Family>& families,
                                       int grid, std::uint64_t seed,
                                       ExecMode mode = ExecMode::OpenMP);

// Buckets points into e_out bins of the given width and reports fiber pairs
// whose e_in ranges intersect nontrivially.
FiberAnalysis fibers(const std::vector<DiagramPoint>& points,
                     double bin_width = kFiberBinWidth);

// Searches for an ordering violation under the unilocal action of
// `local_ch`: structured families first, then (strategy Random) seeded
// random states, up to `budget` candidate states. Deterministic for fixed
// seed regardless of worker count.
std::optional<ViolationCertificate> find_violation(
    const KrausChannel& local_ch, MeasureKind kind, SearchStrategy strategy,
    int budget, std::uint64_t seed, ExecMode mode = ExecMode::OpenMP);

// Recomputes every measure in the certificate from its stored states and
// checks the margin inequalities.
bool verify_certificate(const ViolationCertificate& cert,
                        const KrausChannel& local_ch);

// The four-qubit counterexample: the selective check channel on AA' leaves
// rho1 invariant but degrades the maximally entangled rho2 below it, with
// negativity across AA'|BB' as the witness measure.
FourQubitReport four_qubit_counterexample();

// Samples Haar-local rotations (U_A (x) U_B)|psi+> and reports the spread of
// every two-qubit measure over the channel outputs; maximally entangled
// inputs must all land on the same entanglement value.
MaxEntReport max_entangled_equivalence(const KrausChannel& local_ch,
                                       int trials, std::uint64_t seed,
                                       ExecMode mode = ExecMode::OpenMP);

// Axiom harness over seeded random states.
AxiomCheck check_lu_invariance(MeasureKind kind, int trials, std::uint64_t seed,
                               ExecMode mode = ExecMode::OpenMP);
AxiomCheck check_convexity(MeasureKind kind, int trials, std::uint64_t seed,
                           ExecMode mode = ExecMode::OpenMP);
AxiomCheck check_monotonicity(MeasureKind kind, int trials, std::uint64_t seed,
                              ExecMode mode = ExecMode::OpenMP);
AxiomCheck check_additivity_pure(int trials, std::uint64_t seed,
                                 ExecMode mode = ExecMode::OpenMP);
AxiomCheck check_sharpness(int trials, std::uint64_t seed,
                           ExecMode mode = ExecMode::OpenMP);

std::vector<AxiomCheck> axiom_suite(MeasureKind kind, int trials,
                                    std::uint64_t seed,
                                    ExecMode mode = ExecMode::OpenMP);

}  // namespace ordering
}  // namespace entlab

#endif
