#include "entlab/channels.hpp"

#include <cmath>

#include "entlab/rng.hpp"

namespace entlab {

using linalg::herm_eigvals;
using linalg::identity;
using linalg::tensor;

KrausChannel::KrausChannel(std::vector<CMatrix> kraus, std::string name)
    : kraus_(std::move(kraus)), name_(std::move(name)) {
  if (kraus_.empty()) throw DomainError("KrausChannel: needs at least one Kraus operator");
  d_out_ = static_cast<int>(kraus_[0].rows());
  d_in_ = static_cast<int>(kraus_[0].cols());
  CMatrix acc = linalg::zero(d_in_);
  for (const CMatrix& k : kraus_) {
    if (k.rows() != d_out_ || k.cols() != d_in_) {
      throw DimensionError("KrausChannel: inconsistent Kraus operator shapes");
    }
    if (!linalg::is_finite(k)) throw DomainError("KrausChannel: non-finite entries");
    acc += k.adjoint() * k;
  }
  const double residual = (acc - identity(d_in_)).norm();
  if (residual > 1e-9) {
    throw DomainError("KrausChannel: sum K^dag K != I (residual " +
                      std::to_string(residual) + ")");
  }
}

namespace channels {

KrausChannel identity_channel(int d) {
  return KrausChannel({identity(d)}, "identity");
}

KrausChannel unitary_channel(const CMatrix& u, std::string name) {
  if (u.rows() != u.cols()) throw DimensionError("unitary_channel: not square");
  return KrausChannel({u}, std::move(name));
}

KrausChannel depolarizing(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("depolarizing: p outside [0,1]");
  const double w0 = std::sqrt((1.0 + 3.0 * p) / 4.0);
  const double w = std::sqrt((1.0 - p) / 4.0);
  return KrausChannel({w0 * identity(2), w * linalg::pauli_x(),
                       w * linalg::pauli_y(), w * linalg::pauli_z()},
                      "depolarizing");
}

KrausChannel selective_check_channel() {
  CMatrix p0 = linalg::zero(2), p1 = linalg::zero(2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  std::vector<CMatrix> kraus;
  kraus.push_back(tensor(p0, identity(2)));
  // A'[X] = Tr(X) I/2 realized with the four isometry blocks E_ij / sqrt 2.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CMatrix e = linalg::zero(2);
      e(i, j) = inv_sqrt2;
      kraus.push_back(tensor(p1, e));
    }
  }
  return KrausChannel(std::move(kraus), "selective-check");
}

KrausChannel random_channel(int d, int kraus_rank, std::uint64_t seed) {
  if (kraus_rank < 1) throw DomainError("random_channel: rank must be >= 1");
  Rng rng(seed);
  std::vector<CMatrix> blocks;
  blocks.reserve(kraus_rank);
  CMatrix s = linalg::zero(d);
  for (int k = 0; k < kraus_rank; ++k) {
    blocks.push_back(random_matrix::ginibre(d, rng));
    s += blocks.back().adjoint() * blocks.back();
  }
  // Normalize: K_k = G_k s^{-1/2}; sum K^dag K = I by construction.
  const auto eig = linalg::herm_eig(s);
  Eigen::VectorXd inv_roots(d);
  for (int i = 0; i < d; ++i) inv_roots(i) = 1.0 / std::sqrt(eig.values(i));
  const CMatrix s_inv_sqrt =
      eig.vectors * inv_roots.asDiagonal() * eig.vectors.adjoint();
  for (CMatrix& b : blocks) b = b * s_inv_sqrt;
  return KrausChannel(std::move(blocks), "random");
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.d_in() != rho.dim()) {
    throw DimensionError("apply: channel input dim does not match state");
  }
  CMatrix out = linalg::zero(ch.d_out());
  for (const CMatrix& k : ch.kraus()) {
    out += k * rho.mat() * k.adjoint();
  }
  TensorShape out_shape = rho.shape();
  if (ch.d_out() != ch.d_in()) out_shape = TensorShape{std::vector<int>{ch.d_out()}};
  return DensityMatrix(std::move(out), std::move(out_shape));
}

KrausChannel unilocal(const KrausChannel& ch, int target,
                      const TensorShape& shape) {
  if (target < 0 || target >= shape.num_factors()) {
    throw DimensionError("unilocal: target factor out of range");
  }
  if (ch.d_in() != shape.dims[target]) {
    throw DimensionError("unilocal: channel dim does not match target factor");
  }
  int d_pre = 1, d_post = 1;
  for (int f = 0; f < target; ++f) d_pre *= shape.dims[f];
  for (int f = target + 1; f < shape.num_factors(); ++f) d_post *= shape.dims[f];

  std::vector<CMatrix> kraus;
  kraus.reserve(ch.kraus().size());
  for (const CMatrix& k : ch.kraus()) {
    kraus.push_back(tensor(tensor(identity(d_pre), k), identity(d_post)));
  }
  return KrausChannel(std::move(kraus), ch.name() + "@factor" + std::to_string(target));
}

DensityMatrix choi(const KrausChannel& ch) {
  const PureState plus = states::max_entangled(ch.d_in());
  const TensorShape in_shape{ch.d_in(), ch.d_in()};
  const KrausChannel extended = unilocal(ch, 0, in_shape);
  // Shape of the output: [d_out, d_in].
  DensityMatrix out = apply(extended, DensityMatrix(plus.projector().mat(), in_shape));
  return DensityMatrix(out.mat(), TensorShape{ch.d_out(), ch.d_in()});
}

EntanglementBreakingVerdict is_entanglement_breaking(const KrausChannel& ch) {
  const DensityMatrix c = choi(ch);
  const CMatrix pt =
      linalg::partial_transpose(c.mat(), c.shape(), std::set<int>{1});
  const auto evals = herm_eigvals(pt);

  EntanglementBreakingVerdict verdict;
  verdict.min_pt_eigval = evals(evals.size() - 1);
  verdict.breaking = verdict.min_pt_eigval >= -kTolPsd;
  const int a = ch.d_out(), b = ch.d_in();
  verdict.exact = (a * b <= 6);  // PPT <=> separable at 2x2 and 2x3 only
  return verdict;
}

CptpReport validate_cptp(const KrausChannel& ch) {
  return validate_cptp(ch.kraus());
}

CptpReport validate_cptp(const std::vector<CMatrix>& kraus) {
  if (kraus.empty()) throw DomainError("validate_cptp: empty Kraus list");
  const auto d_out = kraus[0].rows();
  const auto d_in = kraus[0].cols();
  CptpReport report;
  CMatrix acc = linalg::zero(static_cast<int>(d_in));
  CMatrix choi_raw = linalg::zero(static_cast<int>(d_out * d_in));
  const CMatrix plus = states::max_entangled(static_cast<int>(d_in)).projector().mat();
  for (const CMatrix& k : kraus) {
    if (k.rows() != d_out || k.cols() != d_in) {
      throw DimensionError("validate_cptp: inconsistent Kraus operator shapes");
    }
    acc += k.adjoint() * k;
    const CMatrix ext = tensor(k, identity(static_cast<int>(d_in)));
    choi_raw += ext * plus * ext.adjoint();
  }
  report.tp_residual = (acc - identity(static_cast<int>(d_in))).norm();
  report.trace_preserving = report.tp_residual <= 1e-9;

  // CP is automatic in Kraus form; re-verified via the Choi spectrum.
  const auto evals = herm_eigvals(choi_raw);
  report.choi_min_eigval = evals(evals.size() - 1);
  report.completely_positive = report.choi_min_eigval >= -kTolPsd;
  return report;
}

}  // namespace channels
}  // namespace entlab
