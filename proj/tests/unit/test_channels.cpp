#include <doctest.h>

#include "entlab/channels.hpp"
#include "entlab/measures.hpp"
#include "entlab/rng.hpp"
#include "test_helpers.hpp"

using namespace entlab;
using channels::apply;
using channels::choi;
using channels::depolarizing;
using channels::identity_channel;
using channels::is_entanglement_breaking;
using channels::selective_check_channel;
using channels::unilocal;
using channels::validate_cptp;
using linalg::identity;
using linalg::tensor;
using test_helpers::check_close;

namespace {

const TensorShape kTwoQubit{2, 2};

DensityMatrix random_two_qubit(std::uint64_t seed) {
  return states::random_density(kTwoQubit, 1 + static_cast<int>(seed % 4), seed);
}

}  // namespace

TEST_CASE("KrausChannel: construction invariants") {
  CHECK_THROWS_AS(KrausChannel({}), DomainError);
  // non-trace-preserving list rejected
  CHECK_THROWS_AS(KrausChannel({0.9 * identity(2)}), DomainError);
  // inconsistent shapes rejected
  CHECK_THROWS_AS(KrausChannel({identity(2), identity(3)}), DimensionError);
}

TEST_CASE("apply: identity, fixed point, full contraction") {
  const DensityMatrix rho = random_two_qubit(1);
  check_close(apply(identity_channel(4), rho).mat(), rho.mat(), 1e-14);

  const DensityMatrix mixed(0.5 * identity(2), TensorShape{2});
  check_close(apply(depolarizing(0.7), mixed).mat(), 0.5 * identity(2), 1e-14);

  const DensityMatrix qubit = states::random_density(TensorShape{2}, 2, 3);
  check_close(apply(depolarizing(0.0), qubit).mat(), 0.5 * identity(2), 1e-14);

  CHECK_THROWS_AS(apply(depolarizing(0.5), rho), DimensionError);
}

TEST_CASE("depolarizing: action matches p rho + (1-p) I/2") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityMatrix rho = states::random_density(TensorShape{2}, 2, seed);
    for (double p : {0.0, 0.25, 0.5, 0.9, 1.0}) {
      check_close(apply(depolarizing(p), rho).mat(),
                  p * rho.mat() + (1.0 - p) * 0.5 * identity(2), 1e-13);
    }
  }
  CHECK_THROWS_AS(depolarizing(-0.01), DomainError);
  CHECK_THROWS_AS(depolarizing(1.01), DomainError);
}

TEST_CASE("unilocal: embedding identities") {
  const DensityMatrix rho = random_two_qubit(5);
  check_close(apply(unilocal(identity_channel(2), 0, kTwoQubit), rho).mat(),
              rho.mat(), 1e-14);
  check_close(apply(unilocal(identity_channel(2), 1, kTwoQubit), rho).mat(),
              rho.mat(), 1e-14);
  CHECK_THROWS_AS(unilocal(identity_channel(3), 0, kTwoQubit), DimensionError);
  CHECK_THROWS_AS(unilocal(identity_channel(2), 2, kTwoQubit), DimensionError);
}

TEST_CASE("unilocal depolarizing maps the Werner family onto itself") {
  for (double p : {0.0, 0.3, 0.5, 1.0}) {
    const KrausChannel ch = unilocal(depolarizing(p), 0, kTwoQubit);
    for (double q : {0.0, 0.4, 0.8, 1.0}) {
      check_close(apply(ch, states::werner(q)).mat(),
                  states::werner(p * q).mat(), 1e-12);
    }
  }
}

TEST_CASE("unilocal unitary leaves concurrence unchanged") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(derive_seed(6, seed));
    const KrausChannel u =
        channels::unitary_channel(random_matrix::haar_unitary(2, rng));
    const DensityMatrix rho = random_two_qubit(seed + 100);
    const DensityMatrix out = apply(unilocal(u, 0, kTwoQubit), rho);
    CHECK(std::abs(measures::concurrence(out) - measures::concurrence(rho)) <=
          1e-9);
  }
}

TEST_CASE("unilocal channels on disjoint targets commute") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const KrausChannel ca =
        channels::random_channel(2, 1 + static_cast<int>(seed % 4),
                                 derive_seed(7, 2 * seed));
    const KrausChannel cb =
        channels::random_channel(2, 1 + static_cast<int>((seed + 1) % 4),
                                 derive_seed(7, 2 * seed + 1));
    const KrausChannel ea = unilocal(ca, 0, kTwoQubit);
    const KrausChannel eb = unilocal(cb, 1, kTwoQubit);
    const DensityMatrix rho = random_two_qubit(seed + 40);
    check_close(apply(ea, apply(eb, rho)).mat(), apply(eb, apply(ea, rho)).mat(),
                1e-10);
  }
}

TEST_CASE("selective_check_channel: trace preservation and the two images") {
  const KrausChannel ch = selective_check_channel();
  CMatrix acc = linalg::zero(4);
  for (const CMatrix& k : ch.kraus()) acc += k.adjoint() * k;
  CHECK((acc - identity(4)).norm() <= 1e-12);

  const TensorShape two_blocks{4, 4};
  const KrausChannel embedded = unilocal(ch, 0, two_blocks);

  const DensityMatrix rho1 = states::four_qubit_rho1();
  const DensityMatrix rho1_out =
      apply(embedded, DensityMatrix(rho1.mat(), two_blocks));
  check_close(rho1_out.mat(), rho1.mat(), 1e-12);

  const DensityMatrix rho2 = states::four_qubit_rho2();
  const DensityMatrix rho2_out =
      apply(embedded, DensityMatrix(rho2.mat(), two_blocks));
  // 1/2 rho1 + 1/2 |11><11|_{AB} (x) I/4 in the [A, A', B, B'] ordering
  CMatrix one = linalg::zero(2);
  one(1, 1) = 1.0;
  const CMatrix tail = linalg::permute_factors(
      tensor({one, one, 0.25 * identity(4)}), TensorShape{2, 2, 2, 2},
      {0, 2, 1, 3});
  check_close(rho2_out.mat(), 0.5 * rho1.mat() + 0.5 * tail, 1e-12);
}

TEST_CASE("choi: identity, depolarizing family, constant channel") {
  check_close(choi(identity_channel(2)).mat(), states::bell_projector().mat(),
              1e-14);
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.8, 1.0}) {
    check_close(choi(depolarizing(p)).mat(), states::werner(p).mat(), 1e-13);
  }

  // channel with constant output I/2 (two orthogonal reset branches)
  CMatrix k00 = linalg::zero(2), k01 = linalg::zero(2), k10 = linalg::zero(2),
          k11 = linalg::zero(2);
  const double s = 1.0 / std::sqrt(2.0);
  k00(0, 0) = s;
  k01(0, 1) = s;
  k10(1, 0) = s;
  k11(1, 1) = s;
  const KrausChannel reset({k00, k01, k10, k11});
  check_close(choi(reset).mat(), tensor(0.5 * identity(2), 0.5 * identity(2)),
              1e-13);
}

TEST_CASE("choi: marginal over the output factor is I/d (trace preservation)") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const KrausChannel ch =
        channels::random_channel(2, 1 + static_cast<int>(seed % 4), seed);
    const DensityMatrix c = choi(ch);
    check_close(linalg::partial_trace(c.mat(), c.shape(), {1}),
                0.5 * identity(2), 1e-9);
  }
}

TEST_CASE("choi round-trip: channel reconstructed from its Choi matrix") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const KrausChannel ch =
        channels::random_channel(2, 1 + static_cast<int>(seed % 4),
                                 derive_seed(11, seed));
    const CMatrix c = choi(ch).mat();
    for (std::uint64_t s2 = 0; s2 < 3; ++s2) {
      const DensityMatrix rho =
          states::random_density(TensorShape{2}, 2, derive_seed(12, 10 * seed + s2));
      // E(rho) = d * Tr_in[ Choi (I (x) rho^T) ]
      const CMatrix lifted = c * tensor(identity(2), rho.mat().transpose());
      const CMatrix rebuilt =
          2.0 * linalg::partial_trace(lifted, TensorShape{2, 2}, {0});
      check_close(rebuilt, apply(ch, rho).mat(), 1e-9);
    }
  }
}

TEST_CASE("is_entanglement_breaking: depolarizing boundary and unitary") {
  const auto low = is_entanglement_breaking(depolarizing(0.2));
  CHECK(low.breaking);
  CHECK(low.exact);
  // Choi of depolarizing(p) is werner(p); min PT eigenvalue (1 - 3p)/4.
  CHECK(low.min_pt_eigval == doctest::Approx((1.0 - 0.6) / 4.0).epsilon(1e-10));

  const auto high = is_entanglement_breaking(depolarizing(0.9));
  CHECK_FALSE(high.breaking);
  CHECK(high.min_pt_eigval == doctest::Approx((1.0 - 2.7) / 4.0).epsilon(1e-10));

  Rng rng(5);
  const auto unitary = is_entanglement_breaking(
      channels::unitary_channel(random_matrix::haar_unitary(2, rng)));
  CHECK_FALSE(unitary.breaking);
  CHECK(unitary.min_pt_eigval == doctest::Approx(-0.5).epsilon(1e-10));
}

TEST_CASE("validate_cptp: clean and corrupted Kraus lists") {
  const auto good = validate_cptp(depolarizing(0.5));
  CHECK(good.pass());
  CHECK(good.tp_residual <= 1e-12);

  auto kraus = depolarizing(0.5).kraus();
  kraus[0] *= 1.01;
  const auto bad = validate_cptp(kraus);
  CHECK_FALSE(bad.trace_preserving);
  // residual = (1.01^2 - 1) * ||K0^dag K0||_F with K0 = sqrt((1+3p)/4) I
  const double w0sq = (1.0 + 3.0 * 0.5) / 4.0;
  CHECK(bad.tp_residual ==
        doctest::Approx(0.0201 * w0sq * std::sqrt(2.0)).epsilon(1e-6));

  CHECK(validate_cptp(selective_check_channel()).pass());
}

TEST_CASE("apply preserves trace and positivity on random channel/state pairs") {
  int bad = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const KrausChannel local =
        channels::random_channel(2, 1 + static_cast<int>(seed % 4),
                                 derive_seed(21, seed));
    const DensityMatrix rho = random_two_qubit(derive_seed(22, seed));
    // construction of the output DensityMatrix revalidates all invariants
    const DensityMatrix out = apply(unilocal(local, seed % 2 ? 1 : 0, kTwoQubit), rho);
    if (std::abs(out.mat().trace().real() - 1.0) > 1e-9) ++bad;
  }
  CHECK(bad == 0);
}
