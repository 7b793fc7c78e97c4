#ifndef ENTLAB_MEASURES_HPP
#define ENTLAB_MEASURES_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "entlab/states.hpp"

namespace entlab {

// Concurrence, tangle and EoF are defined for 2(x)2 inputs only; the
// others work across any bipartite cut. Entropic values are in ebits
// (log base 2), the rest dimensionless.
enum class MeasureKind {
  Concurrence,
  Tangle,
  EntanglementOfFormation,
  Negativity,
  Delta,
  PureEntropy,
};

struct MeasureValue {
  MeasureKind kind;
  double value = 0.0;
};

std::string to_string(MeasureKind kind);
MeasureKind measure_kind_from_string(const std::string& name);

// A bipartition of tensor factors: `side_a` lists the factors of one side,
// the complement forms the other.
using Cut = std::set<int>;

struct DeltaVerdict {
  int value = 0;   // 0 = separable (per PPT), 1 = entangled
  bool exact = true;  // PPT is conclusive only at 2(x)2 and 2(x)3
  double min_pt_eigval = 0.0;
};

struct GhzAssistanceReport {
  double concurrence_unmeasured = 0.0;  // C(rho_AB) before the assist
  double concurrence_plus = 0.0;        // C(omega_+)
  double concurrence_minus = 0.0;       // C(omega_-)
  double outcome_probability = 0.0;     // both outcomes
  double assisted_average = 0.0;        // sum_j p_j C(omega_j)
  double mixture_residual = 0.0;        // ||p+ w+ + p- w- - rho_AB||_F
  // Optional sampled lower bound on the assistance maximum over random
  // decompositions; never claimed to be the maximum itself.
  double sampled_lower_bound = 0.0;
  int sampled_trials = 0;
};

namespace measures {

// -sum lambda log2 lambda, with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

// 2 (1 - Tr rho^2).
double linear_entropy(const DensityMatrix& rho);

double binary_entropy(double x);

// Wootters concurrence of a two-qubit state, from the spectrum of the
// Hermitian equivalent sqrt(rho) (sy(x)sy) rho* (sy(x)sy) sqrt(rho) of the
// R-matrix. Round-off negatives are clamped before the square roots.
double concurrence(const DensityMatrix& rho);

double tangle(const DensityMatrix& rho);  // C^2
double eof(const DensityMatrix& rho);     // h( (1 + sqrt(1 - C^2)) / 2 )

// N = 2 sum |negative eigenvalues of the partial transpose|; normalized so
// N(P+) = 1 at 2(x)2.
double negativity(const DensityMatrix& rho, const Cut& cut);

// Entanglement entropy of a pure state across a cut, in ebits.
double pure_entanglement(const PureState& psi, const Cut& cut);

DeltaVerdict delta_measure(const DensityMatrix& rho, const Cut& cut);

// Uniform entry point used by the ordering searches and the CLI. Delta
// evaluates to 0/1; PureEntropy requires `psi` (pure input).
double evaluate(MeasureKind kind, const DensityMatrix& rho, const Cut& cut);

// Measures usable on mixed two-qubit states.
const std::vector<MeasureKind>& two_qubit_measures();

// The GHZ assistance story: rho_AB of the GHZ state is unentangled, yet a
// dual-basis measurement on C leaves A,B maximally entangled for both
// outcomes. assist_trials > 0 adds a random-decomposition sampled lower
// bound on the assistance maximum.
GhzAssistanceReport ghz_assistance_demo(int assist_trials = 0,
                                        std::uint64_t seed = 42);

}  // namespace measures
}  // namespace entlab

#endif
