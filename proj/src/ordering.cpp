#include "entlab/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "entlab/rng.hpp"

namespace entlab {

using channels::apply;
using channels::unilocal;
using measures::evaluate;

bool FourQubitReport::pass() const {
  return rho1_invariance_residual < 1e-10 && rho2_mixture_residual < 1e-10 &&
         convexity_bound_holds && ordering_reversed;
}

namespace ordering {

namespace {

const Cut kSideA = {0};
const TensorShape kTwoQubit{2, 2};

struct Candidate {
  Family family = Family::Werner;
  double param = 0.0;       // grid parameter for werner/pure
  std::uint64_t trial = 0;  // random-family trial index
};

DensityMatrix realize(const Candidate& cand, std::uint64_t seed) {
  switch (cand.family) {
    case Family::Werner:
      return states::werner(cand.param);
    case Family::Pure:
      return states::schmidt_pure(cand.param).projector();
    case Family::Random:
      return states::random_density(kTwoQubit, 4, derive_seed(seed, cand.trial));
  }
  throw DomainError("unknown family");
}

std::vector<double> grid_params(int grid) {
  if (grid < 1) throw DomainError("grid resolution must be >= 1");
  std::vector<double> params(grid);
  for (int i = 0; i < grid; ++i) {
    params[i] = grid == 1 ? 0.0 : static_cast<double>(i) / (grid - 1);
  }
  return params;
}

struct Evaluated {
  double e_in = 0.0;
  double e_out = 0.0;
};

// Deterministic sweep for a violating pair: sort by e_in descending and keep
// the running minimum of e_out over states whose e_in clears the margin.
// Returns (i, j) with e_in[i] > e_in[j] + margin and e_out[i] < e_out[j] -
// margin, or nothing.
std::optional<std::pair<std::size_t, std::size_t>> find_violating_pair(
    const std::vector<Evaluated>& pts, double margin) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (pts[a].e_in != pts[b].e_in) return pts[a].e_in > pts[b].e_in;
    return a < b;
  });

  std::size_t p = 0;
  double best_out = std::numeric_limits<double>::infinity();
  std::size_t best_idx = 0;
  for (std::size_t jpos = 0; jpos < n; ++jpos) {
    const std::size_t j = order[jpos];
    while (p < n && pts[order[p]].e_in > pts[j].e_in + margin) {
      const std::size_t i = order[p];
      if (pts[i].e_out < best_out) {
        best_out = pts[i].e_out;
        best_idx = i;
      }
      ++p;
    }
    if (p > 0 && best_out < pts[j].e_out - margin) {
      return std::make_pair(best_idx, j);
    }
  }
  return std::nullopt;
}

}  // namespace

Family family_from_string(const std::string& name) {
  if (name == "werner") return Family::Werner;
  if (name == "pure") return Family::Pure;
  if (name == "random") return Family::Random;
  throw DomainError("unknown family: " + name);
}

std::string to_string(Family family) {
  switch (family) {
    case Family::Werner: return "werner";
    case Family::Pure: return "pure";
    case Family::Random: return "random";
  }
  return "unknown";
}

SearchStrategy strategy_from_string(const std::string& name) {
  if (name == "grid") return SearchStrategy::Grid;
  if (name == "random") return SearchStrategy::Random;
  throw DomainError("unknown strategy: " + name);
}

std::vector<DiagramPoint> scan_diagram(const KrausChannel& local_ch,
                                       MeasureKind kind,
                                       const std::vector<Family>& families,
                                       int grid, std::uint64_t seed,
                                       ExecMode mode) {
  if (families.empty()) throw DomainError("scan_diagram: no families given");
  const KrausChannel embedded = unilocal(local_ch, 0, kTwoQubit);

  std::vector<Candidate> cands;
  const auto params = grid_params(grid);
  for (Family family : families) {
    for (int i = 0; i < grid; ++i) {
      Candidate c;
      c.family = family;
      c.param = family == Family::Random ? static_cast<double>(i) : params[i];
      c.trial = static_cast<std::uint64_t>(i);
      cands.push_back(c);
    }
  }

  std::vector<DiagramPoint> points(cands.size());
  par::for_each_index(cands.size(), mode, [&](std::size_t i) {
    const DensityMatrix rho = realize(cands[i], seed);
    DiagramPoint& pt = points[i];
    pt.family = to_string(cands[i].family);
    pt.param = cands[i].param;
    pt.kind = kind;
    pt.e_in = evaluate(kind, rho, kSideA);
    pt.e_out = evaluate(kind, apply(embedded, rho), kSideA);
  });
  return points;
}

FiberAnalysis fibers(const std::vector<DiagramPoint>& points, double bin_width) {
  if (points.empty()) throw DomainError("fibers: empty point set");
  if (bin_width <= 0.0) throw DomainError("fibers: bin width must be positive");

  std::map<long long, std::vector<double>> bins;
  for (const DiagramPoint& pt : points) {
    bins[static_cast<long long>(std::floor(pt.e_out / bin_width))].push_back(pt.e_in);
  }

  FiberAnalysis analysis;
  for (auto& [bin, values] : bins) {
    std::sort(values.begin(), values.end());
    HorizontalFiber fiber;
    fiber.bin_lo = static_cast<double>(bin) * bin_width;
    fiber.bin_hi = fiber.bin_lo + bin_width;
    fiber.e_in_values = std::move(values);
    analysis.fibers.push_back(std::move(fiber));
  }

  for (std::size_t a = 0; a < analysis.fibers.size(); ++a) {
    for (std::size_t b = a + 1; b < analysis.fibers.size(); ++b) {
      const double lo = std::max(analysis.fibers[a].e_in_min(),
                                 analysis.fibers[b].e_in_min());
      const double hi = std::min(analysis.fibers[a].e_in_max(),
                                 analysis.fibers[b].e_in_max());
      if (hi - lo > 1e-9) {
        analysis.overlaps.push_back({a, b, lo, hi});
      }
    }
  }
  return analysis;
}

std::optional<ViolationCertificate> find_violation(const KrausChannel& local_ch,
                                                   MeasureKind kind,
                                                   SearchStrategy strategy,
                                                   int budget,
                                                   std::uint64_t seed,
                                                   ExecMode mode) {
  if (budget < 1) throw DomainError("find_violation: budget must be >= 1");
  const KrausChannel embedded = unilocal(local_ch, 0, kTwoQubit);

  // Structured families first, then random states.
  std::vector<Candidate> cands;
  const int per_family = strategy == SearchStrategy::Grid
                             ? std::max(1, budget / 2)
                             : std::min(256, std::max(1, budget / 4));
  for (Family family : {Family::Werner, Family::Pure}) {
    for (double p : grid_params(per_family)) {
      cands.push_back({family, p, 0});
    }
  }
  if (strategy == SearchStrategy::Random) {
    for (std::uint64_t t = 0; cands.size() < static_cast<std::size_t>(budget); ++t) {
      cands.push_back({Family::Random, 0.0, t});
    }
  }
  if (cands.size() > static_cast<std::size_t>(budget)) cands.resize(budget);

  std::vector<Evaluated> pts(cands.size());
  std::size_t done = 0;
  // Geometric chunks: early exit stays cheap while the no-violation case
  // pays only O(log n) sweeps.
  std::size_t chunk = std::min<std::size_t>(cands.size(), 2 * per_family);
  while (done < cands.size()) {
    const std::size_t hi = std::min(cands.size(), done + chunk);
    par::for_each_index(hi - done, mode, [&](std::size_t k) {
      const std::size_t i = done + k;
      const DensityMatrix rho = realize(cands[i], seed);
      pts[i].e_in = evaluate(kind, rho, kSideA);
      pts[i].e_out = evaluate(kind, apply(embedded, rho), kSideA);
    });
    done = hi;
    chunk *= 2;

    const std::vector<Evaluated> prefix(pts.begin(), pts.begin() + done);
    if (const auto pair = find_violating_pair(prefix, kViolationMargin)) {
      const auto [i, j] = *pair;
      ViolationCertificate cert{realize(cands[i], seed), realize(cands[j], seed),
                                local_ch.name(),         kind,
                                pts[i].e_in,             pts[j].e_in,
                                pts[i].e_out,            pts[j].e_out,
                                kViolationMargin};
      // self-verification pass: recompute every measure from scratch
      if (!verify_certificate(cert, local_ch)) {
        throw NumericError("find_violation: certificate failed re-verification");
      }
      return cert;
    }
  }
  return std::nullopt;
}

bool verify_certificate(const ViolationCertificate& cert,
                        const KrausChannel& local_ch) {
  const KrausChannel embedded = unilocal(local_ch, 0, kTwoQubit);
  const double in1 = evaluate(cert.kind, cert.rho1, kSideA);
  const double in2 = evaluate(cert.kind, cert.rho2, kSideA);
  const double out1 = evaluate(cert.kind, apply(embedded, cert.rho1), kSideA);
  const double out2 = evaluate(cert.kind, apply(embedded, cert.rho2), kSideA);
  return in1 > in2 + cert.margin && out1 < out2 - cert.margin;
}

FourQubitReport four_qubit_counterexample() {
  const DensityMatrix rho1 = states::four_qubit_rho1();
  const DensityMatrix rho2 = states::four_qubit_rho2();

  // The AA' pair is the leading 4-dim factor of the [A, A', B, B'] ordering.
  const KrausChannel ch =
      unilocal(channels::selective_check_channel(), 0, TensorShape{4, 4});
  const DensityMatrix rho1_out(apply(ch, DensityMatrix(rho1.mat(), TensorShape{4, 4})).mat(),
                               rho1.shape());
  const DensityMatrix rho2_out(apply(ch, DensityMatrix(rho2.mat(), TensorShape{4, 4})).mat(),
                               rho2.shape());

  // Expected image of rho2: 1/2 rho1 + 1/2 |11><11|_{AB} (x) I/4 on A'B'.
  CMatrix one = linalg::zero(2);
  one(1, 1) = 1.0;
  const CMatrix tail_abab =
      linalg::tensor({one, one, 0.25 * linalg::identity(4)});
  const CMatrix tail =
      linalg::permute_factors(tail_abab, TensorShape{2, 2, 2, 2}, {0, 2, 1, 3});
  const CMatrix expected = 0.5 * rho1.mat() + 0.5 * tail;

  const Cut cut_aa = {0, 1};
  FourQubitReport report;
  report.rho1_invariance_residual = (rho1_out.mat() - rho1.mat()).norm();
  report.rho2_mixture_residual = (rho2_out.mat() - expected).norm();
  report.neg_in_rho1 = measures::negativity(rho1, cut_aa);
  report.neg_in_rho2 = measures::negativity(rho2, cut_aa);
  report.neg_out_rho1 = measures::negativity(rho1_out, cut_aa);
  report.neg_out_rho2 = measures::negativity(rho2_out, cut_aa);
  report.convexity_bound_holds =
      report.neg_out_rho2 <= 0.5 * report.neg_out_rho1 + 1e-9;
  report.ordering_reversed = report.neg_in_rho2 > report.neg_in_rho1 &&
                             report.neg_out_rho2 < report.neg_out_rho1;
  return report;
}

MaxEntReport max_entangled_equivalence(const KrausChannel& local_ch, int trials,
                                       std::uint64_t seed, ExecMode mode) {
  if (trials < 1) throw DomainError("max_entangled_equivalence: trials must be >= 1");
  const KrausChannel embedded = unilocal(local_ch, 0, kTwoQubit);
  const auto& kinds = measures::two_qubit_measures();
  const CVector plus = states::max_entangled(2).vec();

  std::vector<std::vector<double>> values(trials,
                                          std::vector<double>(kinds.size()));
  par::for_each_index(static_cast<std::size_t>(trials), mode, [&](std::size_t t) {
    Rng rng(derive_seed(seed, t));
    const CMatrix u = random_matrix::haar_unitary(2, rng);
    const CMatrix v = random_matrix::haar_unitary(2, rng);
    const CVector rotated = linalg::tensor(u, v) * plus;
    const DensityMatrix out =
        apply(embedded, PureState(rotated, kTwoQubit).projector());
    for (std::size_t m = 0; m < kinds.size(); ++m) {
      values[t][m] = evaluate(kinds[m], out, kSideA);
    }
  });

  MaxEntReport report;
  report.trials = trials;
  for (std::size_t m = 0; m < kinds.size(); ++m) {
    MeasureSpread spread;
    spread.kind = kinds[m];
    spread.min = values[0][m];
    spread.max = values[0][m];
    double sum = 0.0;
    for (int t = 0; t < trials; ++t) {
      spread.min = std::min(spread.min, values[t][m]);
      spread.max = std::max(spread.max, values[t][m]);
      sum += values[t][m];
    }
    spread.mean = sum / trials;
    report.max_spread = std::max(report.max_spread, spread.spread());
    report.per_measure.push_back(spread);
  }
  report.pass = report.max_spread < 1e-7;
  return report;
}

namespace {

AxiomCheck reduce_check(std::string name, int trials, double tolerance,
                        const std::vector<double>& deviations) {
  AxiomCheck check;
  check.name = std::move(name);
  check.trials = trials;
  check.tolerance = tolerance;
  check.max_deviation = deviations.empty()
                            ? 0.0
                            : *std::max_element(deviations.begin(), deviations.end());
  check.pass = check.max_deviation < tolerance;
  return check;
}

}  // namespace

AxiomCheck check_lu_invariance(MeasureKind kind, int trials, std::uint64_t seed,
                               ExecMode mode) {
  std::vector<double> dev(trials);
  par::for_each_index(static_cast<std::size_t>(trials), mode, [&](std::size_t t) {
    Rng rng(derive_seed(seed, t));
    const int rank = 1 + static_cast<int>(t % 4);
    const DensityMatrix rho =
        states::random_density(kTwoQubit, rank, derive_seed(seed, t ^ 0xabcdef));
    const CMatrix u = linalg::tensor(random_matrix::haar_unitary(2, rng),
                                     random_matrix::haar_unitary(2, rng));
    const DensityMatrix rotated(u * rho.mat() * u.adjoint(), kTwoQubit);
    dev[t] = std::abs(evaluate(kind, rotated, kSideA) - evaluate(kind, rho, kSideA));
  });
  return reduce_check("local-unitary-invariance", trials, 1e-8, dev);
}

AxiomCheck check_convexity(MeasureKind kind, int trials, std::uint64_t seed,
                           ExecMode mode) {
  std::vector<double> dev(trials);
  par::for_each_index(static_cast<std::size_t>(trials), mode, [&](std::size_t t) {
    Rng rng(derive_seed(seed, t));
    const DensityMatrix a =
        states::random_density(kTwoQubit, 1 + static_cast<int>(t % 4),
                               derive_seed(seed, 2 * t + 1));
    const DensityMatrix b =
        states::random_density(kTwoQubit, 1 + static_cast<int>((t + 2) % 4),
                               derive_seed(seed, 2 * t + 2));
    const double p = rng.uniform();
    const DensityMatrix mix(p * a.mat() + (1.0 - p) * b.mat(), kTwoQubit);
    const double rhs = p * evaluate(kind, a, kSideA) +
                       (1.0 - p) * evaluate(kind, b, kSideA);
    dev[t] = std::max(0.0, evaluate(kind, mix, kSideA) - rhs);
  });
  return reduce_check("convexity", trials, 1e-8, dev);
}

AxiomCheck check_monotonicity(MeasureKind kind, int trials, std::uint64_t seed,
                              ExecMode mode) {
  std::vector<double> dev(trials);
  par::for_each_index(static_cast<std::size_t>(trials), mode, [&](std::size_t t) {
    Rng rng(derive_seed(seed, t));
    const int kraus_rank = 1 + static_cast<int>(rng.next_u64() % 4);
    const KrausChannel ch =
        channels::random_channel(2, kraus_rank, derive_seed(seed, 3 * t + 1));
    const int side = static_cast<int>(t % 2);
    const KrausChannel embedded = unilocal(ch, side, kTwoQubit);
    const DensityMatrix rho = states::random_density(
        kTwoQubit, 1 + static_cast<int>(t % 4), derive_seed(seed, 3 * t + 2));
    dev[t] = std::max(0.0, evaluate(kind, apply(embedded, rho), kSideA) -
                               evaluate(kind, rho, kSideA));
  });
  return reduce_check("monotonicity-unilocal", trials, kMonotonicityTol, dev);
}

AxiomCheck check_additivity_pure(int trials, std::uint64_t seed, ExecMode mode) {
  std::vector<double> dev(trials);
  par::for_each_index(static_cast<std::size_t>(trials), mode, [&](std::size_t t) {
    const PureState psi = states::random_pure(kTwoQubit, derive_seed(seed, 2 * t + 1));
    const PureState phi = states::random_pure(kTwoQubit, derive_seed(seed, 2 * t + 2));
    // Product order [A, B, A', B']; the joint cut AA'|BB' is factors {0, 2}.
    const PureState joint(linalg::tensor_vec(psi.vec(), phi.vec()),
                          TensorShape{2, 2, 2, 2});
    const double joint_ent = measures::pure_entanglement(joint, {0, 2});
    const double sum = measures::pure_entanglement(psi, kSideA) +
                       measures::pure_entanglement(phi, kSideA);
    dev[t] = std::abs(joint_ent - sum);
  });
  return reduce_check("additivity-pure-states", trials, 1e-8, dev);
}

AxiomCheck check_sharpness(int trials, std::uint64_t seed, ExecMode mode) {
  // Random states plus the Werner grid; concurrence must vanish exactly on
  // the PPT side and be positive on the NPT side.
  const int werner_grid = 101;
  const std::size_t total = static_cast<std::size_t>(trials) + werner_grid;
  std::vector<double> dev(total);
  par::for_each_index(total, mode, [&](std::size_t t) {
    DensityMatrix rho =
        t < static_cast<std::size_t>(trials)
            ? states::random_density(kTwoQubit, 1 + static_cast<int>(t % 4),
                                     derive_seed(seed, t))
            : states::werner(static_cast<double>(t - trials) / (werner_grid - 1));
    const double c = measures::concurrence(rho);
    const double min_pt = measures::delta_measure(rho, kSideA).min_pt_eigval;
    if (min_pt >= -kTolPsd) {
      dev[t] = c;  // PPT: concurrence must be zero
    } else {
      dev[t] = c > 0.0 ? 0.0 : -min_pt;  // NPT: concurrence must be positive
    }
  });
  return reduce_check("sharpness-ppt", trials, 1e-7, dev);
}

std::vector<AxiomCheck> axiom_suite(MeasureKind kind, int trials,
                                    std::uint64_t seed, ExecMode mode) {
  std::vector<AxiomCheck> checks;
  checks.push_back(check_sharpness(trials, derive_seed(seed, 101), mode));
  checks.push_back(check_lu_invariance(kind, trials, derive_seed(seed, 102), mode));
  if (kind != MeasureKind::Delta) {
    // The delta measure is deliberately non-convex (mixing an entangled
    // state with a separable one can stay entangled).
    checks.push_back(check_convexity(kind, trials, derive_seed(seed, 103), mode));
  }
  checks.push_back(check_monotonicity(kind, trials, derive_seed(seed, 104), mode));
  checks.push_back(check_additivity_pure(std::max(1, trials / 10),
                                         derive_seed(seed, 105), mode));
  return checks;
}

}  // namespace ordering
}  // namespace entlab
