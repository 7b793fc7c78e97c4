#ifndef ENTLAB_STATES_HPP
#define ENTLAB_STATES_HPP

#include <cstdint>
#include <set>

#include "entlab/linalg.hpp"

namespace entlab {

// Hermitian, unit-trace, PSD matrix over a declared tensor factorization.
// Construction validates all three invariants and throws DomainError on
// violation (DimensionError on shape mismatch).
class DensityMatrix {
 public:
  DensityMatrix(CMatrix mat, TensorShape shape);

  const CMatrix& mat() const { return mat_; }
  const TensorShape& shape() const { return shape_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

  double purity() const;  // Tr rho^2

  DensityMatrix reduced(const std::set<int>& keep) const;

 private:
  CMatrix mat_;
  TensorShape shape_;
};

// Unit-norm state vector over a declared tensor factorization.
class PureState {
 public:
  PureState(CVector vec, TensorShape shape);

  const CVector& vec() const { return vec_; }
  const TensorShape& shape() const { return shape_; }
  int dim() const { return static_cast<int>(vec_.size()); }

  DensityMatrix projector() const;

 private:
  CVector vec_;
  TensorShape shape_;
};

namespace states {

// |psi+> = (1/sqrt d) sum_i |ii> on a d (x) d system; both marginals are I/d.
PureState max_entangled(int d);

// Projector onto max_entangled(2).
DensityMatrix bell_projector();

// Werner family q*P+ + (1-q)*I/4 on two qubits, q in [0,1].
DensityMatrix werner(double q);

// alpha|00> + beta|11> with beta = sqrt(1-alpha^2) >= 0, alpha in [0,1].
PureState schmidt_pure(double alpha);

// Three-qubit (|000>+|111>)/sqrt2, shape [2,2,2].
PureState ghz();

// Four-qubit states; factor order [A, A', B, B'] so the entanglement
// cut AA'|BB' is the contiguous split {0,1}|{2,3}.
DensityMatrix four_qubit_rho1();  // |0><0|_A (x) |0><0|_B (x) P+_{A'B'}
DensityMatrix four_qubit_rho2();  // P+_{AB} (x) P+_{A'B'}

// Haar-distributed pure state: normalized standard complex Gaussian vector.
PureState random_pure(const TensorShape& shape, std::uint64_t seed);

// Induced-measure mixed state: G G^dag / Tr(G G^dag) with G a dim x rank
// Ginibre block (equivalently, a rank-dim ancilla traced out of a Haar pure
// state). Deterministic for fixed seed.
DensityMatrix random_density(const TensorShape& shape, int rank,
                             std::uint64_t seed);

}  // namespace states
}  // namespace entlab

#endif
