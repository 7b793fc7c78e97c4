#include "entlab/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace entlab {

TensorShape::TensorShape(std::initializer_list<int> d) : dims(d) {
  for (int di : dims) {
    if (di < 2) throw DomainError("TensorShape: every factor dim must be >= 2");
  }
}

TensorShape::TensorShape(std::vector<int> d) : dims(std::move(d)) {
  for (int di : dims) {
    if (di < 2) throw DomainError("TensorShape: every factor dim must be >= 2");
  }
}

int TensorShape::total_dim() const {
  int d = 1;
  for (int di : dims) d *= di;
  return d;
}

void TensorShape::check_matches(int dim) const {
  if (dims.empty() || total_dim() != dim) {
    throw DimensionError("TensorShape does not match matrix dimension " +
                         std::to_string(dim));
  }
}

namespace linalg {

namespace {

// Strides of each factor under the leftmost-most-significant convention.
std::vector<int> strides_of(const TensorShape& shape) {
  const int n = shape.num_factors();
  std::vector<int> s(n, 1);
  for (int i = n - 2; i >= 0; --i) s[i] = s[i + 1] * shape.dims[i + 1];
  return s;
}

void check_factor_set(const TensorShape& shape, const std::set<int>& factors,
                      const char* what) {
  for (int f : factors) {
    if (f < 0 || f >= shape.num_factors()) {
      throw DimensionError(std::string(what) + ": factor index out of range");
    }
  }
}

}  // namespace

CMatrix identity(int d) { return CMatrix::Identity(d, d); }
CMatrix zero(int d) { return CMatrix::Zero(d, d); }

const CMatrix& pauli_x() {
  static const CMatrix m = [] {
    CMatrix x(2, 2);
    x << 0, 1, 1, 0;
    return x;
  }();
  return m;
}

const CMatrix& pauli_y() {
  static const CMatrix m = [] {
    CMatrix y(2, 2);
    y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return y;
  }();
  return m;
}

const CMatrix& pauli_z() {
  static const CMatrix m = [] {
    CMatrix z(2, 2);
    z << 1, 0, 0, -1;
    return z;
  }();
  return m;
}

const CMatrix& sigma_yy() {
  static const CMatrix m = tensor(pauli_y(), pauli_y());
  return m;
}

bool is_finite(const CMatrix& m) { return m.allFinite(); }

double herm_residual(const CMatrix& m) {
  return (m - m.adjoint()).norm();
}

bool is_hermitian(const CMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.norm());
  return herm_residual(m) <= rel_tol * scale;
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix tensor(std::initializer_list<CMatrix> factors) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (const CMatrix& f : factors) out = tensor(out, f);
  return out;
}

CVector tensor_vec(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

CMatrix partial_trace(const CMatrix& m, const TensorShape& shape,
                      const std::set<int>& keep) {
  if (m.rows() != m.cols()) throw DimensionError("partial_trace: matrix not square");
  shape.check_matches(static_cast<int>(m.rows()));
  if (keep.empty()) throw DimensionError("partial_trace: keep set is empty");
  check_factor_set(shape, keep, "partial_trace");

  const int n = shape.num_factors();
  const auto strides = strides_of(shape);

  std::vector<int> kept, traced;
  for (int f = 0; f < n; ++f) {
    (keep.count(f) ? kept : traced).push_back(f);
  }

  int d_keep = 1;
  for (int f : kept) d_keep *= shape.dims[f];
  int d_tr = 1;
  for (int f : traced) d_tr *= shape.dims[f];

  // Row/col offsets contributed by the kept (resp. traced) multi-index.
  auto offsets = [&](const std::vector<int>& factors, int count) {
    std::vector<int> off(count, 0);
    for (int idx = 0; idx < count; ++idx) {
      int rem = idx, o = 0;
      for (int k = static_cast<int>(factors.size()) - 1; k >= 0; --k) {
        const int f = factors[k];
        o += (rem % shape.dims[f]) * strides[f];
        rem /= shape.dims[f];
      }
      off[idx] = o;
    }
    return off;
  };
  const auto keep_off = offsets(kept, d_keep);
  const auto tr_off = offsets(traced, d_tr);

  CMatrix out = CMatrix::Zero(d_keep, d_keep);
  for (int r = 0; r < d_keep; ++r) {
    for (int c = 0; c < d_keep; ++c) {
      Complex acc = 0;
      for (int t = 0; t < d_tr; ++t) {
        acc += m(keep_off[r] + tr_off[t], keep_off[c] + tr_off[t]);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

CMatrix partial_transpose(const CMatrix& m, const TensorShape& shape,
                          const std::set<int>& flip) {
  if (m.rows() != m.cols()) throw DimensionError("partial_transpose: matrix not square");
  shape.check_matches(static_cast<int>(m.rows()));
  check_factor_set(shape, flip, "partial_transpose");

  const int n = shape.num_factors();
  const int d = shape.total_dim();
  const auto strides = strides_of(shape);

  auto digits = [&](int idx) {
    std::vector<int> dg(n);
    for (int f = 0; f < n; ++f) {
      dg[f] = (idx / strides[f]) % shape.dims[f];
    }
    return dg;
  };

  CMatrix out(d, d);
  for (int r = 0; r < d; ++r) {
    const auto rd = digits(r);
    for (int c = 0; c < d; ++c) {
      auto cd = digits(c);
      int rr = 0, cc = 0;
      for (int f = 0; f < n; ++f) {
        const bool fl = flip.count(f) > 0;
        rr += (fl ? cd[f] : rd[f]) * strides[f];
        cc += (fl ? rd[f] : cd[f]) * strides[f];
      }
      out(rr, cc) = m(r, c);
    }
  }
  return out;
}

CMatrix permute_factors(const CMatrix& m, const TensorShape& shape,
                        const std::vector<int>& perm) {
  if (m.rows() != m.cols()) throw DimensionError("permute_factors: matrix not square");
  shape.check_matches(static_cast<int>(m.rows()));
  const int n = shape.num_factors();
  if (static_cast<int>(perm.size()) != n) {
    throw DimensionError("permute_factors: permutation size mismatch");
  }
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw DimensionError("permute_factors: not a permutation");
    seen[p] = true;
  }

  const int d = shape.total_dim();
  const auto old_strides = strides_of(shape);

  std::vector<int> new_dims(n);
  for (int i = 0; i < n; ++i) new_dims[i] = shape.dims[perm[i]];
  TensorShape new_shape{new_dims};
  const auto new_strides = strides_of(new_shape);

  // index map: new basis index -> old basis index
  std::vector<int> to_old(d);
  for (int idx = 0; idx < d; ++idx) {
    int old = 0;
    for (int i = 0; i < n; ++i) {
      const int digit = (idx / new_strides[i]) % new_dims[i];
      old += digit * old_strides[perm[i]];
    }
    to_old[idx] = old;
  }

  CMatrix out(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      out(r, c) = m(to_old[r], to_old[c]);
    }
  }
  return out;
}

EigResult herm_eig(const CMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) throw DimensionError("herm_eig: matrix not square");
  if (!is_hermitian(m, rel_tol)) {
    throw DomainError("herm_eig: input not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (m + m.adjoint()));
  if (solver.info() != Eigen::Success) {
    throw NumericError("herm_eig: eigensolver failed to converge");
  }
  const Eigen::Index d = m.rows();
  EigResult res;
  res.values.resize(d);
  res.vectors.resize(d, d);
  // Eigen sorts ascending; the contract here is descending.
  for (Eigen::Index i = 0; i < d; ++i) {
    res.values(i) = solver.eigenvalues()(d - 1 - i);
    res.vectors.col(i) = solver.eigenvectors().col(d - 1 - i);
  }
  return res;
}

Eigen::VectorXd herm_eigvals(const CMatrix& m, double rel_tol) {
  return herm_eig(m, rel_tol).values;
}

CMatrix sqrt_psd(const CMatrix& m, double tol_psd) {
  EigResult e = herm_eig(m);
  const Eigen::Index d = m.rows();
  Eigen::VectorXd roots(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    double v = e.values(i);
    if (v < -tol_psd) {
      throw DomainError("sqrt_psd: matrix has eigenvalue below -tol_psd");
    }
    roots(i) = std::sqrt(std::max(v, 0.0));
  }
  return e.vectors * roots.asDiagonal() * e.vectors.adjoint();
}

}  // namespace linalg
}  // namespace entlab
