#include <doctest.h>

#include "entlab/ordering.hpp"
#include "entlab/rng.hpp"
#include "test_helpers.hpp"

using namespace entlab;
using channels::depolarizing;
using channels::identity_channel;
using ordering::Family;
using ordering::SearchStrategy;
using test_helpers::to_oracle;

namespace {

const std::vector<Family> kBothFamilies = {Family::Werner, Family::Pure};

}  // namespace

TEST_CASE("scan_diagram: identity channel stays on the diagonal") {
  const auto points = ordering::scan_diagram(
      identity_channel(2), MeasureKind::Concurrence, kBothFamilies, 50, 42);
  CHECK(points.size() == 100);
  for (const auto& pt : points) {
    CHECK(std::abs(pt.e_out - pt.e_in) <= 1e-10);
  }
}

TEST_CASE("scan_diagram: degenerate grid gives one row per family at param 0") {
  const auto points = ordering::scan_diagram(
      depolarizing(0.5), MeasureKind::Concurrence, kBothFamilies, 1, 42);
  REQUIRE(points.size() == 2);
  CHECK(points[0].family == "werner");
  CHECK(points[0].param == 0.0);
  CHECK(points[1].family == "pure");
  CHECK(points[1].param == 0.0);
}

TEST_CASE("scan_diagram: closed forms under depolarizing p = 1/2") {
  const auto points = ordering::scan_diagram(
      depolarizing(0.5), MeasureKind::Concurrence, kBothFamilies, 101, 42);
  for (const auto& pt : points) {
    if (pt.family == "werner") {
      const double q = pt.param;
      CHECK(std::abs(pt.e_in - std::max(0.0, (3.0 * q - 1.0) / 2.0)) <= 1e-9);
      CHECK(std::abs(pt.e_out - std::max(0.0, (1.5 * q - 1.0) / 2.0)) <= 1e-9);
    } else {
      // one-sided depolarizing scales a pure state's concurrence by (3p-1)/2
      CHECK(std::abs(pt.e_out - 0.25 * pt.e_in) <= 1e-9);
    }
  }
  // the Werner endpoint E_in = 1 -> E_out = 0.25 is on the grid
  bool endpoint = false;
  for (const auto& pt : points) {
    if (pt.family == "werner" && std::abs(pt.e_in - 1.0) <= 1e-9 &&
        std::abs(pt.e_out - 0.25) <= 1e-9) {
      endpoint = true;
    }
  }
  CHECK(endpoint);
}

TEST_CASE("scan_diagram: monotonicity e_out <= e_in for random channels") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const KrausChannel ch =
        channels::random_channel(2, 1 + static_cast<int>(seed % 4), seed);
    const auto points = ordering::scan_diagram(
        ch, MeasureKind::Concurrence,
        {Family::Werner, Family::Pure, Family::Random}, 40, derive_seed(1, seed));
    for (const auto& pt : points) {
      CHECK(pt.e_out <= pt.e_in + ordering::kMonotonicityTol);
    }
  }
}

TEST_CASE("fibers: identity scan has no overlaps, single point is one fiber") {
  const auto id_points = ordering::scan_diagram(
      identity_channel(2), MeasureKind::Concurrence, kBothFamilies, 40, 42);
  const auto analysis = ordering::fibers(id_points, 1e-3);
  CHECK(analysis.overlaps.empty());

  const auto single = ordering::fibers({id_points[0]}, 1e-3);
  CHECK(single.fibers.size() == 1);
  CHECK(single.overlaps.empty());

  CHECK_THROWS_AS(ordering::fibers({}, 1e-3), DomainError);
  CHECK_THROWS_AS(ordering::fibers(id_points, 0.0), DomainError);
}

TEST_CASE("fibers: depolarizing two-family scan has intersecting fibers") {
  const auto points = ordering::scan_diagram(
      depolarizing(0.5), MeasureKind::Concurrence, kBothFamilies, 200, 42);
  const auto analysis = ordering::fibers(points, 1e-3);
  CHECK(!analysis.overlaps.empty());
  // overlapped fibers really are distinct e_out bins with intersecting ranges
  for (const auto& ov : analysis.overlaps) {
    const auto& fa = analysis.fibers[ov.fiber_a];
    const auto& fb = analysis.fibers[ov.fiber_b];
    CHECK(fa.bin_lo != fb.bin_lo);
    CHECK(ov.hi > ov.lo);
    CHECK(ov.lo >= std::max(fa.e_in_min(), fb.e_in_min()) - 1e-12);
    CHECK(ov.hi <= std::min(fa.e_in_max(), fb.e_in_max()) + 1e-12);
  }
}

TEST_CASE("find_violation: none for identity, unitary and fully depolarizing") {
  for (SearchStrategy strategy : {SearchStrategy::Grid, SearchStrategy::Random}) {
    CHECK_FALSE(ordering::find_violation(identity_channel(2),
                                         MeasureKind::Concurrence, strategy,
                                         2000, 42));
    CHECK_FALSE(ordering::find_violation(depolarizing(0.0),
                                         MeasureKind::Concurrence, strategy,
                                         2000, 42));
  }
  Rng rng(17);
  const KrausChannel unitary =
      channels::unitary_channel(random_matrix::haar_unitary(2, rng));
  CHECK_FALSE(ordering::find_violation(unitary, MeasureKind::Concurrence,
                                       SearchStrategy::Random, 5000, 1));
  // entanglement-breaking channel: every output has zero entanglement
  CHECK_FALSE(ordering::find_violation(depolarizing(0.2),
                                       MeasureKind::Concurrence,
                                       SearchStrategy::Random, 5000, 2));
}

TEST_CASE("find_violation: depolarizing(1/2) certificate for each measure") {
  for (MeasureKind kind :
       {MeasureKind::Concurrence, MeasureKind::Tangle,
        MeasureKind::EntanglementOfFormation, MeasureKind::Negativity}) {
    const auto cert = ordering::find_violation(
        depolarizing(0.5), kind, SearchStrategy::Grid, 2000, 42);
    REQUIRE(cert.has_value());
    CHECK(cert->kind == kind);
    CHECK(cert->e_in1 > cert->e_in2 + cert->margin);
    CHECK(cert->e_out1 < cert->e_out2 - cert->margin);
    CHECK(cert->margin >= ordering::kViolationMargin);
    CHECK(ordering::verify_certificate(*cert, depolarizing(0.5)));
  }
  // delta never admits a violation: both implications hold for a 0/1 measure
  CHECK_FALSE(ordering::find_violation(depolarizing(0.5), MeasureKind::Delta,
                                       SearchStrategy::Grid, 2000, 42));

  // tangle and eof are monotone in concurrence, so a concurrence certificate
  // is a certificate for them as well
  const auto conc_cert = ordering::find_violation(
      depolarizing(0.5), MeasureKind::Concurrence, SearchStrategy::Grid, 2000, 42);
  REQUIRE(conc_cert.has_value());
  for (MeasureKind kind :
       {MeasureKind::Tangle, MeasureKind::EntanglementOfFormation}) {
    ViolationCertificate same = *conc_cert;
    same.kind = kind;
    same.e_in1 = measures::evaluate(kind, same.rho1, {0});
    same.e_in2 = measures::evaluate(kind, same.rho2, {0});
    same.margin = 0.0;  // the monotone map preserves order, not the margin
    CHECK(ordering::verify_certificate(same, depolarizing(0.5)));
  }
}

TEST_CASE("find_violation: deterministic for a fixed seed") {
  const auto a = ordering::find_violation(depolarizing(0.5),
                                          MeasureKind::Concurrence,
                                          SearchStrategy::Random, 3000, 99);
  const auto b = ordering::find_violation(depolarizing(0.5),
                                          MeasureKind::Concurrence,
                                          SearchStrategy::Random, 3000, 99);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->e_in1 == b->e_in1);
  CHECK(a->e_in2 == b->e_in2);
  CHECK(a->e_out1 == b->e_out1);
  CHECK(a->e_out2 == b->e_out2);
  CHECK((a->rho1.mat() - b->rho1.mat()).norm() == 0.0);
  CHECK((a->rho2.mat() - b->rho2.mat()).norm() == 0.0);
}

TEST_CASE("four_qubit_counterexample: residuals, negativities, reversal") {
  const FourQubitReport report = ordering::four_qubit_counterexample();
  CHECK(report.rho1_invariance_residual < 1e-10);
  CHECK(report.rho2_mixture_residual < 1e-10);

  CHECK(report.neg_in_rho1 == doctest::Approx(1.0).epsilon(1e-10));
  // P+ (x) P+ across AA'|BB' has PT spectrum +-1/4 with multiplicities 10/6.
  CHECK(report.neg_in_rho2 == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(report.neg_out_rho1 == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(report.neg_out_rho2 == doctest::Approx(0.5).epsilon(1e-10));

  CHECK(report.convexity_bound_holds);
  CHECK(report.ordering_reversed);
  CHECK(report.pass());

  // independent confirmation of the input negativities
  const double n2 = oracle::negativity(to_oracle(states::four_qubit_rho2().mat()),
                                       {2, 2, 2, 2}, {false, false, true, true});
  CHECK(n2 == doctest::Approx(3.0).epsilon(1e-8));
}

TEST_CASE("max_entangled_equivalence: identity, depolarizing, breaking") {
  const MaxEntReport id_report =
      ordering::max_entangled_equivalence(identity_channel(2), 50, 42);
  CHECK(id_report.pass);
  CHECK(id_report.max_spread <= 1e-10);

  const MaxEntReport dep = ordering::max_entangled_equivalence(
      depolarizing(0.7), 100, 42);
  CHECK(dep.pass);
  for (const MeasureSpread& spread : dep.per_measure) {
    CHECK(spread.spread() < 1e-7);
    if (spread.kind == MeasureKind::Concurrence) {
      CHECK(spread.mean == doctest::Approx(0.55).epsilon(1e-9));
    }
  }

  const MaxEntReport broken = ordering::max_entangled_equivalence(
      depolarizing(0.2), 50, 42);
  CHECK(broken.pass);
  for (const MeasureSpread& spread : broken.per_measure) {
    CHECK(spread.max <= 1e-9);
  }
}

TEST_CASE("axiom harness: quick pass for the main measures") {
  for (MeasureKind kind :
       {MeasureKind::Concurrence, MeasureKind::EntanglementOfFormation,
        MeasureKind::Negativity}) {
    const auto checks = ordering::axiom_suite(kind, 150, 42);
    for (const AxiomCheck& check : checks) {
      INFO(check.name, " for ", to_string(kind), ": max deviation ",
           check.max_deviation);
      CHECK(check.pass);
    }
  }
}

TEST_CASE("family and strategy parsing") {
  CHECK(ordering::family_from_string("werner") == Family::Werner);
  CHECK(ordering::family_from_string("pure") == Family::Pure);
  CHECK(ordering::family_from_string("random") == Family::Random);
  CHECK_THROWS_AS(ordering::family_from_string("x"), DomainError);
  CHECK(ordering::strategy_from_string("grid") == SearchStrategy::Grid);
  CHECK_THROWS_AS(ordering::strategy_from_string("x"), DomainError);
}
