#include "entlab/measures.hpp"

#include <algorithm>
#include <cmath>

#include "entlab/rng.hpp"

namespace entlab {

using linalg::herm_eigvals;
using linalg::partial_trace;
using linalg::partial_transpose;
using linalg::sqrt_psd;

std::string to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::Concurrence: return "concurrence";
    case MeasureKind::Tangle: return "tangle";
    case MeasureKind::EntanglementOfFormation: return "eof";
    case MeasureKind::Negativity: return "negativity";
    case MeasureKind::Delta: return "delta";
    case MeasureKind::PureEntropy: return "pure-entropy";
  }
  return "unknown";
}

MeasureKind measure_kind_from_string(const std::string& name) {
  if (name == "concurrence") return MeasureKind::Concurrence;
  if (name == "tangle") return MeasureKind::Tangle;
  if (name == "eof") return MeasureKind::EntanglementOfFormation;
  if (name == "negativity") return MeasureKind::Negativity;
  if (name == "delta") return MeasureKind::Delta;
  if (name == "pure-entropy") return MeasureKind::PureEntropy;
  throw DomainError("unknown measure: " + name);
}

namespace measures {

namespace {

Cut complement(const Cut& cut, int num_factors) {
  Cut other;
  for (int f = 0; f < num_factors; ++f) {
    if (!cut.count(f)) other.insert(f);
  }
  return other;
}

void check_cut(const Cut& cut, const TensorShape& shape, const char* what) {
  if (cut.empty()) throw DimensionError(std::string(what) + ": empty cut");
  for (int f : cut) {
    if (f < 0 || f >= shape.num_factors()) {
      throw DimensionError(std::string(what) + ": cut factor out of range");
    }
  }
  if (static_cast<int>(cut.size()) == shape.num_factors()) {
    throw DimensionError(std::string(what) + ": cut must leave both sides non-empty");
  }
}

void check_two_qubit(const DensityMatrix& rho, const char* what) {
  if (rho.dim() != 4 || rho.shape().dims != std::vector<int>{2, 2}) {
    throw DimensionError(std::string(what) + ": requires a 2(x)2 state");
  }
}

int side_dim(const Cut& cut, const TensorShape& shape) {
  int d = 1;
  for (int f : cut) d *= shape.dims[f];
  return d;
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto evals = herm_eigvals(rho.mat());
  double s = 0.0;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    const double lam = evals(i);
    if (lam > 0.0) s -= lam * std::log2(lam);
  }
  return std::max(0.0, s);
}

double linear_entropy(const DensityMatrix& rho) {
  return 2.0 * (1.0 - rho.purity());
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double concurrence(const DensityMatrix& rho) {
  check_two_qubit(rho, "concurrence");
  const CMatrix& yy = linalg::sigma_yy();
  const CMatrix spun = yy * rho.mat().conjugate() * yy;
  const CMatrix root = sqrt_psd(rho.mat());
  // Hermitian up to round-off; same spectrum as rho * spun.
  const CMatrix m = root * spun * root;
  const auto evals = herm_eigvals(0.5 * (m + m.adjoint()));

  // Round-off residue of exact-zero eigenvalues would be amplified by the
  // square roots; anything below 1e-12 of the leading eigenvalue is zero.
  const double floor = std::max(evals(0), 0.0) * 1e-12;
  double c = 0.0;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    const double lam = evals(i) > floor ? evals(i) : 0.0;
    c += (i == 0 ? 1.0 : -1.0) * std::sqrt(lam);
  }
  return std::clamp(c, 0.0, 1.0);
}

double tangle(const DensityMatrix& rho) {
  const double c = concurrence(rho);
  return c * c;
}

double eof(const DensityMatrix& rho) {
  const double t = tangle(rho);
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - t))));
}

double negativity(const DensityMatrix& rho, const Cut& cut) {
  check_cut(cut, rho.shape(), "negativity");
  const CMatrix pt = partial_transpose(rho.mat(), rho.shape(), cut);
  const auto evals = herm_eigvals(pt);
  double neg = 0.0;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (evals(i) < 0.0) neg -= evals(i);
  }
  return 2.0 * neg;
}

double pure_entanglement(const PureState& psi, const Cut& cut) {
  check_cut(cut, psi.shape(), "pure_entanglement");
  return von_neumann_entropy(psi.projector().reduced(cut));
}

DeltaVerdict delta_measure(const DensityMatrix& rho, const Cut& cut) {
  check_cut(cut, rho.shape(), "delta_measure");
  const CMatrix pt = partial_transpose(rho.mat(), rho.shape(), cut);
  const auto evals = herm_eigvals(pt);

  DeltaVerdict verdict;
  verdict.min_pt_eigval = evals(evals.size() - 1);
  verdict.value = verdict.min_pt_eigval < -kTolPsd ? 1 : 0;
  const int da = side_dim(cut, rho.shape());
  const int db = side_dim(complement(cut, rho.shape().num_factors()), rho.shape());
  verdict.exact = (da * db <= 6);
  return verdict;
}

double evaluate(MeasureKind kind, const DensityMatrix& rho, const Cut& cut) {
  switch (kind) {
    case MeasureKind::Concurrence: return concurrence(rho);
    case MeasureKind::Tangle: return tangle(rho);
    case MeasureKind::EntanglementOfFormation: return eof(rho);
    case MeasureKind::Negativity: return negativity(rho, cut);
    case MeasureKind::Delta: return static_cast<double>(delta_measure(rho, cut).value);
    case MeasureKind::PureEntropy:
      throw DomainError("evaluate: pure-entropy needs a pure state input");
  }
  throw DomainError("evaluate: unknown measure kind");
}

const std::vector<MeasureKind>& two_qubit_measures() {
  static const std::vector<MeasureKind> kinds = {
      MeasureKind::Concurrence, MeasureKind::Tangle,
      MeasureKind::EntanglementOfFormation, MeasureKind::Negativity,
      MeasureKind::Delta};
  return kinds;
}

GhzAssistanceReport ghz_assistance_demo(int assist_trials, std::uint64_t seed) {
  const PureState omega = states::ghz();
  const DensityMatrix rho_ab = omega.projector().reduced({0, 1});

  GhzAssistanceReport report;
  report.concurrence_unmeasured = concurrence(rho_ab);

  // Party C measures in the dual basis |+->; both outcomes have p = 1/2 and
  // leave A,B in (|00> +- |11>)/sqrt2.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CMatrix mix = linalg::zero(4);
  double assisted = 0.0;
  for (int sign = 0; sign < 2; ++sign) {
    CVector plus_minus(2);
    plus_minus << inv_sqrt2, (sign == 0 ? inv_sqrt2 : -inv_sqrt2);
    // <pm|_C acting on the last factor of |Omega>.
    CVector post(4);
    for (int ab = 0; ab < 4; ++ab) {
      post(ab) = std::conj(plus_minus(0)) * omega.vec()(2 * ab) +
                 std::conj(plus_minus(1)) * omega.vec()(2 * ab + 1);
    }
    const double prob = post.squaredNorm();
    post /= post.norm();
    const PureState outcome(post, TensorShape{2, 2});
    const double c = concurrence(outcome.projector());
    (sign == 0 ? report.concurrence_plus : report.concurrence_minus) = c;
    report.outcome_probability = prob;
    assisted += prob * c;
    mix += prob * outcome.projector().mat();
  }
  report.assisted_average = assisted;
  report.mixture_residual = (mix - rho_ab.mat()).norm();

  // Sampled lower bound over random convex decompositions of rho_AB:
  // ensembles |phi_j> = sum_k conj(V_jk) sqrt(lambda_k) |e_k> for a Haar
  // isometry V. Reported only as a lower bound on E_assist.
  if (assist_trials > 0) {
    const auto eig = linalg::herm_eig(rho_ab.mat());
    int rank = 0;
    while (rank < eig.values.size() && eig.values(rank) > kTolPsd) ++rank;

    double best = report.assisted_average;
    for (int trial = 0; trial < assist_trials; ++trial) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
      const int m = rank + static_cast<int>(rng.next_u64() % 3);  // ensemble size
      const CMatrix v = random_matrix::haar_unitary(std::max(m, rank), rng);
      double avg = 0.0;
      for (int j = 0; j < v.rows(); ++j) {
        CVector phi = CVector::Zero(4);
        for (int k = 0; k < rank; ++k) {
          phi += std::conj(v(j, k)) * std::sqrt(eig.values(k)) * eig.vectors.col(k);
        }
        const double pj = phi.squaredNorm();
        if (pj < 1e-14) continue;
        phi /= std::sqrt(pj);
        avg += pj * concurrence(PureState(phi, TensorShape{2, 2}).projector());
      }
      best = std::max(best, avg);
    }
    report.sampled_lower_bound = best;
    report.sampled_trials = assist_trials;
  }
  return report;
}

}  // namespace measures
}  // namespace entlab
