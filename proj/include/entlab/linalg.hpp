#ifndef ENTLAB_LINALG_HPP
#define ENTLAB_LINALG_HPP

#include <complex>
#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "entlab/errors.hpp"

namespace entlab {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

// Hermiticity tolerance (relative, Frobenius) and eigenvalue clamp for PSD
// checks. Everything in this project is at most 16x16 in double precision,
// so these leave a wide margin.
inline constexpr double kTolHerm = 1e-9;
inline constexpr double kTolPsd = 1e-10;

// Ordered subsystem dimensions of a tensor-product space. The basis
// convention is row-major with the leftmost factor most significant:
// |abc> has index a*d_b*d_c + b*d_c + c.
struct TensorShape {
  std::vector<int> dims;

  TensorShape() = default;
  TensorShape(std::initializer_list<int> d);
  explicit TensorShape(std::vector<int> d);

  int total_dim() const;
  int num_factors() const { return static_cast<int>(dims.size()); }

  // Throws DimensionError unless the shape annotates a dim x dim matrix.
  void check_matches(int dim) const;
};

namespace linalg {

CMatrix identity(int d);
CMatrix zero(int d);

// Pauli matrices and the two-qubit spin-flip kernel sigma_y (x) sigma_y.
const CMatrix& pauli_x();
const CMatrix& pauli_y();
const CMatrix& pauli_z();
const CMatrix& sigma_yy();

bool is_finite(const CMatrix& m);
double herm_residual(const CMatrix& m);  // ||m - m^dag||_F
bool is_hermitian(const CMatrix& m, double rel_tol = kTolHerm);

// Kronecker product, leftmost factor most significant.
CMatrix tensor(const CMatrix& a, const CMatrix& b);
CMatrix tensor(std::initializer_list<CMatrix> factors);
CVector tensor_vec(const CVector& a, const CVector& b);

// Trace over every factor not listed in `keep`. Output factors keep their
// relative order.
CMatrix partial_trace(const CMatrix& m, const TensorShape& shape,
                      const std::set<int>& keep);

// Transpose only the factors listed in `flip`.
CMatrix partial_transpose(const CMatrix& m, const TensorShape& shape,
                          const std::set<int>& flip);

// Reorder tensor factors: new factor i is old factor perm[i].
CMatrix permute_factors(const CMatrix& m, const TensorShape& shape,
                        const std::vector<int>& perm);

struct EigResult {
  Eigen::VectorXd values;  // descending
  CMatrix vectors;         // columns, matching `values`
};

// Hermitian eigendecomposition with descending eigenvalues. Throws
// DomainError if the input is not Hermitian within rel_tol.
EigResult herm_eig(const CMatrix& m, double rel_tol = kTolHerm);

// Descending real spectrum only.
Eigen::VectorXd herm_eigvals(const CMatrix& m, double rel_tol = kTolHerm);

// Principal square root of a Hermitian PSD matrix. Eigenvalues in
// (-tol_psd, 0) are clamped to zero; anything below -tol_psd throws
// DomainError.
CMatrix sqrt_psd(const CMatrix& m, double tol_psd = kTolPsd);

}  // namespace linalg
}  // namespace entlab

#endif
