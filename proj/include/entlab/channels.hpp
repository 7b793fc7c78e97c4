#ifndef ENTLAB_CHANNELS_HPP
#define ENTLAB_CHANNELS_HPP

#include <string>
#include <vector>

#include "entlab/states.hpp"

namespace entlab {

// Completely positive trace-preserving map in Kraus form,
// rho -> sum_k K rho K^dag with sum_k K^dag K = I. Construction checks the
// trace-preservation residual (Frobenius, 1e-9).
class KrausChannel {
 public:
  KrausChannel(std::vector<CMatrix> kraus, std::string name = "");

  const std::vector<CMatrix>& kraus() const { return kraus_; }
  int d_in() const { return d_in_; }
  int d_out() const { return d_out_; }
  const std::string& name() const { return name_; }

 private:
  std::vector<CMatrix> kraus_;
  int d_in_ = 0;
  int d_out_ = 0;
  std::string name_;
};

struct CptpReport {
  double tp_residual = 0.0;     // ||sum K^dag K - I||_F
  double choi_min_eigval = 0.0; // complete positivity re-check
  bool trace_preserving = false;
  bool completely_positive = false;
  bool pass() const { return trace_preserving && completely_positive; }
};

struct EntanglementBreakingVerdict {
  bool breaking = false;
  // PPT <=> separable holds only at 2(x)2 and 2(x)3; above that the verdict
  // is a necessary condition only and `exact` is false.
  bool exact = true;
  double min_pt_eigval = 0.0;
};

namespace channels {

KrausChannel identity_channel(int d);

// Conjugation by a unitary.
KrausChannel unitary_channel(const CMatrix& u, std::string name = "unitary");

// Qubit depolarizing family rho -> p*rho + (1-p)*I/2, p in [0,1], via the
// Pauli-twirl Kraus set {sqrt((1+3p)/4) I, sqrt((1-p)/4) sigma_{x,y,z}}.
KrausChannel depolarizing(double p);

// Two-qubit map on (A, A') that checks the state of A: leaves A' alone when
// A is |0>, contracts A' to I/2 when A is |1>.
KrausChannel selective_check_channel();

// Random CPTP map with the given Kraus rank: Ginibre blocks normalized by
// the inverse square root of sum G^dag G.
KrausChannel random_channel(int d, int kraus_rank, std::uint64_t seed);

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

// Embed a channel so it acts on one tensor factor only: K -> I (x) K (x) I.
KrausChannel unilocal(const KrausChannel& ch, int target,
                      const TensorShape& shape);

// (E (x) I)[P+] with P+ maximally entangled on d_in (x) d_in.
DensityMatrix choi(const KrausChannel& ch);

// Separability of the Choi matrix via the PPT criterion (exact for qubit
// channels; necessary-only above 2(x)3).
EntanglementBreakingVerdict is_entanglement_breaking(const KrausChannel& ch);

CptpReport validate_cptp(const KrausChannel& ch);

// Raw-list variant for operator sets that may not form a channel at all
// (the KrausChannel constructor would reject those outright).
CptpReport validate_cptp(const std::vector<CMatrix>& kraus);

}  // namespace channels
}  // namespace entlab

#endif
