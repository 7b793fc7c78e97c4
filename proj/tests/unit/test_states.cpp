#include <doctest.h>

#include "entlab/measures.hpp"
#include "entlab/rng.hpp"
#include "entlab/states.hpp"
#include "test_helpers.hpp"

using namespace entlab;
using linalg::identity;
using linalg::partial_trace;
using test_helpers::check_close;
using test_helpers::to_oracle;

TEST_CASE("max_entangled: amplitudes and marginals") {
  const PureState plus = states::max_entangled(2);
  CHECK(plus.vec()(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(plus.vec()(3).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(plus.vec()(1)) == 0.0);
  CHECK(std::abs(plus.vec()(2)) == 0.0);

  for (int d : {2, 3, 4}) {
    const DensityMatrix proj = states::max_entangled(d).projector();
    check_close(partial_trace(proj.mat(), proj.shape(), {0}),
                identity(d) / d, 1e-13);
    check_close(partial_trace(proj.mat(), proj.shape(), {1}),
                identity(d) / d, 1e-13);
  }
  CHECK(measures::concurrence(states::bell_projector()) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(states::max_entangled(1), DomainError);
}

TEST_CASE("werner: endpoints, boundary and overlap identity") {
  check_close(states::werner(0.0).mat(), 0.25 * identity(4), 1e-15);
  check_close(states::werner(1.0).mat(), states::bell_projector().mat(), 1e-15);

  // q = 1/3 sits exactly on the separability boundary.
  const DensityMatrix boundary = states::werner(1.0 / 3.0);
  CHECK(measures::concurrence(boundary) <= 1e-8);
  const double min_pt = oracle::min_pt_eigval(to_oracle(boundary.mat()), {2, 2},
                                              {false, true});
  CHECK(std::abs(min_pt) <= 1e-10);

  CHECK_THROWS_AS(states::werner(-0.1), DomainError);
  CHECK_THROWS_AS(states::werner(1.1), DomainError);

  const CVector plus = states::max_entangled(2).vec();
  for (int i = 0; i <= 10; ++i) {
    const double q = i / 10.0;
    const Complex overlap = plus.adjoint() * states::werner(q).mat() * plus;
    CHECK(std::abs(overlap.real() - (q + (1.0 - q) / 4.0)) <= 1e-12);
  }
}

TEST_CASE("schmidt_pure: product, balanced, generic") {
  CHECK(measures::concurrence(states::schmidt_pure(1.0).projector()) <= 1e-12);
  check_close(states::schmidt_pure(1.0 / std::sqrt(2.0)).projector().mat(),
              states::bell_projector().mat(), 1e-12);
  CHECK(measures::concurrence(states::schmidt_pure(0.8).projector()) ==
        doctest::Approx(0.96).epsilon(1e-10));
  CHECK_THROWS_AS(states::schmidt_pure(1.5), DomainError);

  for (int i = 0; i <= 10; ++i) {
    const double alpha = i / 10.0;
    const DensityMatrix red = states::schmidt_pure(alpha).projector().reduced({0});
    CMatrix expected = linalg::zero(2);
    expected(0, 0) = alpha * alpha;
    expected(1, 1) = 1.0 - alpha * alpha;
    check_close(red.mat(), expected, 1e-12);
  }
}

TEST_CASE("ghz: classically correlated pair marginal") {
  const DensityMatrix rho_ab = states::ghz().projector().reduced({0, 1});
  CMatrix expected = linalg::zero(4);
  expected(0, 0) = expected(3, 3) = 0.5;
  check_close(rho_ab.mat(), expected, 1e-14);
  CHECK(measures::concurrence(rho_ab) <= 1e-12);
  check_close(rho_ab.reduced({0}).mat(), 0.5 * identity(2), 1e-14);
}

TEST_CASE("four-qubit states: traces, marginals, negativity of rho1") {
  const DensityMatrix rho1 = states::four_qubit_rho1();
  const DensityMatrix rho2 = states::four_qubit_rho2();
  CHECK(std::abs(rho1.mat().trace().real() - 1.0) <= 1e-14);
  CHECK(std::abs(rho2.mat().trace().real() - 1.0) <= 1e-14);

  // rho2 is maximally entangled across AA'|BB': its AA' marginal is I/4.
  check_close(rho2.reduced({0, 1}).mat(), 0.25 * identity(4), 1e-14);

  // Only the A'B' pair of rho1 carries entanglement across the cut.
  CHECK(measures::negativity(rho1, {0, 1}) == doctest::Approx(1.0).epsilon(1e-10));
  const double ref = oracle::negativity(to_oracle(rho1.mat()), {2, 2, 2, 2},
                                        {false, false, true, true});
  CHECK(ref == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("random_pure / random_density: determinism and invariants") {
  const TensorShape shape{2, 2};
  const PureState a = states::random_pure(shape, 31337);
  const PureState b = states::random_pure(shape, 31337);
  CHECK((a.vec() - b.vec()).norm() == 0.0);
  CHECK(std::abs(a.vec().norm() - 1.0) <= 1e-12);

  const DensityMatrix ra = states::random_density(shape, 3, 555);
  const DensityMatrix rb = states::random_density(shape, 3, 555);
  CHECK((ra.mat() - rb.mat()).norm() == 0.0);
  CHECK((ra.mat() - states::random_density(shape, 3, 556).mat()).norm() > 1e-3);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int rank = 1 + static_cast<int>(seed % 4);
    const DensityMatrix rho = states::random_density(shape, rank, seed);
    const auto evals = linalg::herm_eigvals(rho.mat());
    CHECK(evals(evals.size() - 1) >= -kTolPsd);
    CHECK(std::abs(evals.sum() - 1.0) <= 1e-9);
  }
  CHECK_THROWS_AS(states::random_density(shape, 0, 1), DomainError);
  CHECK_THROWS_AS(states::random_density(shape, 5, 1), DomainError);
}

TEST_CASE("random_density: mean purity matches the induced-measure value") {
  // E[Tr rho^2] = (d + r) / (d r + 1) = 8/17 at d = r = 4; Monte Carlo check.
  const TensorShape shape{2, 2};
  double sum = 0.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    sum += states::random_density(shape, 4, derive_seed(2024, i)).purity();
  }
  CHECK(std::abs(sum / n - 8.0 / 17.0) <= 0.01);
}

TEST_CASE("DensityMatrix: invariant enforcement") {
  CMatrix not_herm = linalg::zero(2);
  not_herm(0, 1) = 1.0;
  not_herm(0, 0) = 1.0;
  CHECK_THROWS_AS(DensityMatrix(not_herm, TensorShape{2}), DomainError);

  CHECK_THROWS_AS(DensityMatrix(2.0 * identity(2), TensorShape{2}), DomainError);

  CMatrix indefinite = linalg::zero(2);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(indefinite, TensorShape{2}), DomainError);

  CHECK_THROWS_AS(DensityMatrix(identity(4) / 4.0, TensorShape{2, 3}),
                  DimensionError);

  CMatrix nan_mat = identity(2) / 2.0;
  nan_mat(0, 0) = std::nan("");
  CHECK_THROWS_AS(DensityMatrix(nan_mat, TensorShape{2}), DomainError);
}

TEST_CASE("PureState: normalization enforcement") {
  CVector v = CVector::Zero(4);
  v(0) = 0.5;
  CHECK_THROWS_AS(PureState(v, TensorShape{2, 2}), DomainError);
}
