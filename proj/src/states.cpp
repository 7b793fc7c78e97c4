#include "entlab/states.hpp"

#include <cmath>

#include "entlab/rng.hpp"

namespace entlab {

using linalg::herm_eigvals;
using linalg::partial_trace;
using linalg::permute_factors;
using linalg::tensor;

DensityMatrix::DensityMatrix(CMatrix mat, TensorShape shape)
    : mat_(std::move(mat)), shape_(std::move(shape)) {
  if (mat_.rows() != mat_.cols()) {
    throw DimensionError("DensityMatrix: matrix not square");
  }
  shape_.check_matches(static_cast<int>(mat_.rows()));
  if (!linalg::is_finite(mat_)) {
    throw DomainError("DensityMatrix: non-finite entries");
  }
  if (!linalg::is_hermitian(mat_)) {
    throw DomainError("DensityMatrix: not Hermitian within tolerance");
  }
  if (std::abs(mat_.trace().real() - 1.0) > 1e-9 ||
      std::abs(mat_.trace().imag()) > 1e-9) {
    throw DomainError("DensityMatrix: trace != 1");
  }
  const auto evals = herm_eigvals(mat_);
  if (evals(evals.size() - 1) < -kTolPsd) {
    throw DomainError("DensityMatrix: negative eigenvalue beyond tolerance");
  }
}

double DensityMatrix::purity() const {
  return (mat_ * mat_).trace().real();
}

DensityMatrix DensityMatrix::reduced(const std::set<int>& keep) const {
  std::vector<int> dims;
  for (int f : keep) dims.push_back(shape_.dims[f]);
  return DensityMatrix(partial_trace(mat_, shape_, keep), TensorShape{dims});
}

PureState::PureState(CVector vec, TensorShape shape)
    : vec_(std::move(vec)), shape_(std::move(shape)) {
  shape_.check_matches(static_cast<int>(vec_.size()));
  if (!vec_.allFinite()) throw DomainError("PureState: non-finite entries");
  if (std::abs(vec_.norm() - 1.0) > 1e-10) {
    throw DomainError("PureState: vector not normalized");
  }
}

DensityMatrix PureState::projector() const {
  return DensityMatrix(vec_ * vec_.adjoint(), shape_);
}

namespace states {

PureState max_entangled(int d) {
  if (d < 2) throw DomainError("max_entangled: d must be >= 2");
  CVector v = CVector::Zero(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) v(i * d + i) = amp;
  return PureState(std::move(v), TensorShape{d, d});
}

DensityMatrix bell_projector() { return max_entangled(2).projector(); }

DensityMatrix werner(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("werner: q outside [0,1]");
  CMatrix m = q * bell_projector().mat() + (1.0 - q) * 0.25 * linalg::identity(4);
  return DensityMatrix(std::move(m), TensorShape{2, 2});
}

PureState schmidt_pure(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("schmidt_pure: alpha outside [0,1]");
  }
  const double beta = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
  CVector v = CVector::Zero(4);
  v(0) = alpha;
  v(3) = beta;
  return PureState(std::move(v), TensorShape{2, 2});
}

PureState ghz() {
  CVector v = CVector::Zero(8);
  v(0) = v(7) = 1.0 / std::sqrt(2.0);
  return PureState(std::move(v), TensorShape{2, 2, 2});
}

namespace {

CMatrix ket_bra(int d, int i) {
  CMatrix m = linalg::zero(d);
  m(i, i) = 1.0;
  return m;
}

// Assemble in the natural product order [A, B, A', B'] and reorder to the
// repo convention [A, A', B, B'].
DensityMatrix reorder_four_qubit(const CMatrix& m_abab) {
  const TensorShape natural{2, 2, 2, 2};
  CMatrix m = permute_factors(m_abab, natural, {0, 2, 1, 3});
  return DensityMatrix(std::move(m), TensorShape{2, 2, 2, 2});
}

}  // namespace

DensityMatrix four_qubit_rho1() {
  const CMatrix m = tensor({ket_bra(2, 0), ket_bra(2, 0), bell_projector().mat()});
  return reorder_four_qubit(m);
}

DensityMatrix four_qubit_rho2() {
  const CMatrix m = tensor(bell_projector().mat(), bell_projector().mat());
  return reorder_four_qubit(m);
}

PureState random_pure(const TensorShape& shape, std::uint64_t seed) {
  Rng rng(seed);
  const int d = shape.total_dim();
  CVector v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.gaussian_complex();
  v /= v.norm();
  return PureState(std::move(v), shape);
}

DensityMatrix random_density(const TensorShape& shape, int rank,
                             std::uint64_t seed) {
  const int d = shape.total_dim();
  if (rank < 1 || rank > d) throw DomainError("random_density: rank outside [1, dim]");
  Rng rng(seed);
  CMatrix g(d, rank);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < rank; ++j) {
      g(i, j) = rng.gaussian_complex();
    }
  }
  CMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(std::move(m), shape);
}

}  // namespace states
}  // namespace entlab
