// entlab: entanglement measures, unilocal channels and ordering analyses on
// small multi-qubit systems, as reproducible seeded commands.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entlab/dynamics.hpp"
#include "entlab/ordering.hpp"
#include "entlab/serialize.hpp"
#include "entlab/svg.hpp"

namespace {

using nlohmann::json;
using namespace entlab;

// Exit-code contract: 0 success/found, 1 clean not-found / failed check,
// 2 input error, 3 dimension or contract error, 4 internal numeric failure.
enum ExitCode : int {
  kOk = 0,
  kNotFound = 1,
  kInputError = 2,
  kContractError = 3,
  kNumericFailure = 4,
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open file: " + path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write file: " + path);
  out << content;
}

void write_json(const std::string& path, const json& j) {
  write_file(path, j.dump(2) + "\n");
}

// Builtin channel names, or a channel JSON file.
KrausChannel resolve_channel(const std::string& spec, double p) {
  if (spec == "identity") return channels::identity_channel(2);
  if (spec == "depolarizing") return channels::depolarizing(p);
  if (spec == "selective-check") return channels::selective_check_channel();
  if (spec == "unitary") {
    CMatrix u(2, 2);
    u << std::cos(p), -std::sin(p), std::sin(p), std::cos(p);
    return channels::unitary_channel(u);
  }
  json j;
  try {
    j = json::parse(read_file(spec));
  } catch (const json::exception& e) {
    throw DomainError("channel spec '" + spec + "': " + e.what());
  }
  return serialize::channel_from_json(j);
}

// Initial-state forms: "max", "werner:q", "pure:alpha", or a state JSON file.
DensityMatrix resolve_state(const std::string& spec) {
  if (spec == "max") return states::bell_projector();
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string head = spec.substr(0, colon);
    const double param = std::stod(spec.substr(colon + 1));
    if (head == "werner") return states::werner(param);
    if (head == "pure") return states::schmidt_pure(param).projector();
    throw DomainError("unknown state family: " + head);
  }
  json j;
  try {
    j = json::parse(read_file(spec));
  } catch (const json::exception& e) {
    throw DomainError("state spec '" + spec + "': " + e.what());
  }
  return serialize::state_from_json(j);
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct ChannelFlags {
  std::string spec = "depolarizing";
  double p = 0.5;
};

void add_channel_flags(CLI::App* cmd, ChannelFlags& flags) {
  cmd->add_option("--channel", flags.spec,
                  "builtin (identity|depolarizing|unitary|selective-check) or "
                  "channel JSON file");
  cmd->add_option("--p", flags.p,
                  "channel parameter (depolarizing p, unitary angle)");
}

int cmd_diagram(const ChannelFlags& ch_flags, const std::string& measure,
                const std::string& families_csv, int grid, std::uint64_t seed,
                const std::string& out) {
  const KrausChannel ch = resolve_channel(ch_flags.spec, ch_flags.p);
  const MeasureKind kind = measure_kind_from_string(measure);

  std::vector<ordering::Family> families;
  std::string item;
  for (std::size_t i = 0; i <= families_csv.size(); ++i) {
    if (i == families_csv.size() || families_csv[i] == ',') {
      if (!item.empty()) families.push_back(ordering::family_from_string(item));
      item.clear();
    } else {
      item += families_csv[i];
    }
  }

  const auto points = ordering::scan_diagram(ch, kind, families, grid, seed);
  if (has_suffix(out, ".svg")) {
    write_file(out, svg::diagram_scatter(points, "[E_in, E_out] diagram: " +
                                                     ch.name()));
  } else if (has_suffix(out, ".csv")) {
    write_file(out, serialize::diagram_csv(points));
  } else {
    throw DomainError("diagram output must end in .csv or .svg");
  }
  std::cout << "diagram: " << points.size() << " points -> " << out << "\n";
  return kOk;
}

int cmd_violations(const ChannelFlags& ch_flags, const std::string& measure,
                   const std::string& strategy, int budget, std::uint64_t seed,
                   const std::string& out) {
  const KrausChannel ch = resolve_channel(ch_flags.spec, ch_flags.p);
  const MeasureKind kind = measure_kind_from_string(measure);
  const auto cert = ordering::find_violation(
      ch, kind, ordering::strategy_from_string(strategy), budget, seed);

  if (!cert) {
    std::cout << "no ordering violation found within budget " << budget << "\n";
    if (!out.empty()) {
      json j;
      j["schema"] = "entlab/certificate/v1";
      j["found"] = false;
      j["measure"] = to_string(kind);
      j["budget"] = budget;
      write_json(out, j);
    }
    return kNotFound;
  }

  std::cout << "ordering violation found (measure " << to_string(kind) << "):\n"
            << "  E_in(rho1)  = " << serialize::fmt_double(cert->e_in1)
            << "  >  E_in(rho2)  = " << serialize::fmt_double(cert->e_in2) << "\n"
            << "  E_out(rho1) = " << serialize::fmt_double(cert->e_out1)
            << "  <  E_out(rho2) = " << serialize::fmt_double(cert->e_out2) << "\n"
            << "  margin " << serialize::fmt_double(cert->margin) << "\n";
  if (!out.empty()) write_json(out, serialize::certificate_to_json(*cert, ch));
  return kOk;
}

int cmd_check_channel(const ChannelFlags& ch_flags, const std::string& test,
                      const std::string& out) {
  const KrausChannel ch = resolve_channel(ch_flags.spec, ch_flags.p);
  json j;
  bool positive = false;
  if (test == "cptp") {
    const CptpReport report = channels::validate_cptp(ch);
    positive = report.pass();
    j["schema"] = "entlab/check-channel/v1";
    j["channel"] = ch.name();
    j["test"] = "cptp";
    j["tp_residual"] = report.tp_residual;
    j["choi_min_eigval"] = report.choi_min_eigval;
    j["trace_preserving"] = report.trace_preserving;
    j["completely_positive"] = report.completely_positive;
    j["pass"] = positive;
    std::cout << "cptp check: " << (positive ? "pass" : "FAIL")
              << " (tp residual " << serialize::fmt_double(report.tp_residual)
              << ", choi min eigval "
              << serialize::fmt_double(report.choi_min_eigval) << ")\n";
  } else if (test == "eb") {
    const EntanglementBreakingVerdict verdict =
        channels::is_entanglement_breaking(ch);
    positive = verdict.breaking;
    j["schema"] = "entlab/check-channel/v1";
    j["channel"] = ch.name();
    j["test"] = "eb";
    j["breaking"] = verdict.breaking;
    j["exact"] = verdict.exact;
    j["min_pt_eigval"] = verdict.min_pt_eigval;
    j["pass"] = positive;
    std::cout << "entanglement-breaking: "
              << (verdict.breaking ? "true" : "false")
              << (verdict.exact ? "" : " (PPT necessary condition only)")
              << " (min PT eigenvalue "
              << serialize::fmt_double(verdict.min_pt_eigval) << ")\n";
  } else {
    throw DomainError("unknown test: " + test + " (expected cptp|eb)");
  }
  if (!out.empty()) write_json(out, j);
  return positive ? kOk : kNotFound;
}

int cmd_tsep(double T, const std::string& mode, const std::string& initial,
             double tol, const std::string& out) {
  json j;
  j["schema"] = "entlab/tsep/v1";
  j["T"] = T;
  j["mode"] = mode;
  double t_sep = 0.0;
  if (mode == "analytic") {
    t_sep = dynamics::tsep_analytic(T);
  } else if (mode == "numeric") {
    t_sep = dynamics::tsep_numeric(T, resolve_state(initial), tol);
    j["initial"] = initial;
    j["tol"] = tol;
  } else {
    throw DomainError("unknown mode: " + mode + " (expected analytic|numeric)");
  }
  j["t_sep"] = t_sep;
  std::cout << serialize::fmt_double(t_sep) << "\n";
  if (!out.empty()) write_json(out, j);
  return kOk;
}

int cmd_trajectory(double T, const std::string& initial,
                   const std::string& measure, double t_max, int steps,
                   bool emit_states, const std::string& out) {
  if (steps < 2) throw DomainError("trajectory needs at least 2 steps");
  if (!(t_max > 0)) throw DomainError("t-max must be positive");
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i) grid[i] = t_max * i / (steps - 1);
  const Trajectory traj =
      dynamics::trajectory(T, resolve_state(initial), grid,
                           measure_kind_from_string(measure));
  write_file(out, serialize::trajectory_csv(traj, emit_states));
  std::cout << "trajectory: " << steps << " samples -> " << out << "\n";
  return kOk;
}

int cmd_counterexample(const std::string& which, const std::string& out) {
  if (which != "four-qubit") {
    throw DomainError("unknown counterexample: " + which);
  }
  const FourQubitReport report = ordering::four_qubit_counterexample();
  std::cout << "four-qubit counterexample (negativity across AA'|BB'):\n"
            << "  inputs:  N(rho1) = " << serialize::fmt_double(report.neg_in_rho1)
            << ", N(rho2) = " << serialize::fmt_double(report.neg_in_rho2) << "\n"
            << "  outputs: N(rho1') = " << serialize::fmt_double(report.neg_out_rho1)
            << ", N(rho2') = " << serialize::fmt_double(report.neg_out_rho2) << "\n"
            << "  rho1 invariance residual "
            << serialize::fmt_double(report.rho1_invariance_residual) << "\n"
            << "  rho2 image residual vs mixture "
            << serialize::fmt_double(report.rho2_mixture_residual) << "\n"
            << "  ordering reversed: " << (report.ordering_reversed ? "yes" : "no")
            << ", convexity bound: "
            << (report.convexity_bound_holds ? "holds" : "VIOLATED") << "\n";
  if (!out.empty()) write_json(out, serialize::four_qubit_report_to_json(report));
  return report.pass() ? kOk : kNotFound;
}

int cmd_ghz(int assist_trials, std::uint64_t seed, const std::string& out) {
  const GhzAssistanceReport report =
      measures::ghz_assistance_demo(assist_trials, seed);
  std::cout << "GHZ assistance demo:\n"
            << "  C(rho_AB) = " << serialize::fmt_double(report.concurrence_unmeasured)
            << "\n  C(omega_+) = " << serialize::fmt_double(report.concurrence_plus)
            << ", C(omega_-) = " << serialize::fmt_double(report.concurrence_minus)
            << " (each with probability "
            << serialize::fmt_double(report.outcome_probability) << ")\n"
            << "  assisted average = "
            << serialize::fmt_double(report.assisted_average) << "\n"
            << "  mixture residual = "
            << serialize::fmt_double(report.mixture_residual) << "\n";
  if (report.sampled_trials > 0) {
    std::cout << "  sampled decomposition lower bound = "
              << serialize::fmt_double(report.sampled_lower_bound) << " ("
              << report.sampled_trials << " trials)\n";
  }
  if (!out.empty()) write_json(out, serialize::ghz_report_to_json(report));
  const bool pass = report.concurrence_unmeasured < 1e-9 &&
                    std::abs(report.concurrence_plus - 1.0) < 1e-9 &&
                    std::abs(report.concurrence_minus - 1.0) < 1e-9 &&
                    report.mixture_residual < 1e-12;
  return pass ? kOk : kNotFound;
}

int cmd_axioms(const std::string& measure, int trials, std::uint64_t seed,
               const std::string& out) {
  const MeasureKind kind = measure_kind_from_string(measure);
  const auto checks = ordering::axiom_suite(kind, trials, seed);
  bool all = true;
  std::cout << "axiom suite for " << to_string(kind) << " (" << trials
            << " trials):\n";
  for (const AxiomCheck& check : checks) {
    std::cout << "  " << (check.pass ? "pass" : "FAIL") << "  " << check.name
              << "  max deviation " << serialize::fmt_double(check.max_deviation)
              << " (tolerance " << serialize::fmt_double(check.tolerance)
              << ", " << check.trials << " trials)\n";
    all = all && check.pass;
  }
  if (!out.empty()) write_json(out, serialize::axiom_checks_to_json(checks, kind));
  return all ? kOk : kNotFound;
}

int cmd_maxent(const ChannelFlags& ch_flags, int trials, std::uint64_t seed,
               const std::string& out) {
  const KrausChannel ch = resolve_channel(ch_flags.spec, ch_flags.p);
  const MaxEntReport report =
      ordering::max_entangled_equivalence(ch, trials, seed);
  std::cout << "maximally entangled inputs under " << ch.name() << " ("
            << trials << " Haar trials):\n";
  for (const MeasureSpread& spread : report.per_measure) {
    std::cout << "  " << to_string(spread.kind) << ": mean "
              << serialize::fmt_double(spread.mean) << ", spread "
              << serialize::fmt_double(spread.spread()) << "\n";
  }
  std::cout << (report.pass ? "equal output entanglement confirmed"
                            : "SPREAD EXCEEDS TOLERANCE")
            << " (max spread " << serialize::fmt_double(report.max_spread)
            << ")\n";
  if (!out.empty()) write_json(out, serialize::maxent_report_to_json(report, ch.name()));
  return report.pass ? kOk : kNotFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglement measures, unilocal channels and state-ordering "
               "analyses for small multi-qubit systems"};
  app.require_subcommand(1);

  // diagram
  auto* diagram = app.add_subcommand("diagram", "[E_in, E_out] diagram scan");
  ChannelFlags diagram_ch;
  std::string diagram_measure = "concurrence";
  std::string diagram_families = "werner,pure";
  int diagram_grid = 200;
  std::uint64_t diagram_seed = 42;
  std::string diagram_out;
  add_channel_flags(diagram, diagram_ch);
  diagram->add_option("--measure", diagram_measure, "entanglement measure");
  diagram->add_option("--families", diagram_families,
                      "comma list of werner,pure,random");
  diagram->add_option("--grid", diagram_grid, "points per family")
      ->check(CLI::PositiveNumber);
  diagram->add_option("--seed", diagram_seed, "random-family seed");
  diagram->add_option("--out", diagram_out, ".csv or .svg output")->required();

  // violations
  auto* violations =
      app.add_subcommand("violations", "search for an ordering violation");
  ChannelFlags violations_ch;
  std::string violations_measure = "concurrence";
  std::string violations_strategy = "random";
  int violations_budget = 10000;
  std::uint64_t violations_seed = 42;
  std::string violations_out;
  add_channel_flags(violations, violations_ch);
  violations->add_option("--measure", violations_measure, "entanglement measure");
  violations->add_option("--strategy", violations_strategy, "grid|random");
  violations->add_option("--budget", violations_budget,
                         "max candidate states to evaluate")
      ->check(CLI::PositiveNumber);
  violations->add_option("--seed", violations_seed, "search seed");
  violations->add_option("--out", violations_out, "certificate JSON path");

  // check-channel
  auto* check = app.add_subcommand("check-channel", "CPTP / entanglement-breaking tests");
  ChannelFlags check_ch;
  std::string check_test;
  std::string check_out;
  add_channel_flags(check, check_ch);
  check->add_option("--test", check_test, "cptp|eb")->required();
  check->add_option("--out", check_out, "report JSON path");

  // tsep
  auto* tsep = app.add_subcommand("tsep", "separability time of the depolarizing semigroup");
  double tsep_T = 1.0;
  std::string tsep_mode = "analytic";
  std::string tsep_initial = "max";
  double tsep_tol = 1e-6;
  std::string tsep_out;
  tsep->add_option("--T", tsep_T, "decay time constant")->required();
  tsep->add_option("--mode", tsep_mode, "analytic|numeric");
  tsep->add_option("--initial", tsep_initial,
                   "max | werner:q | pure:alpha | state JSON file");
  tsep->add_option("--tol", tsep_tol, "bisection tolerance");
  tsep->add_option("--out", tsep_out, "report JSON path");

  // trajectory
  auto* traj = app.add_subcommand("trajectory", "entanglement decay trajectory CSV");
  double traj_T = 1.0;
  std::string traj_initial = "max";
  std::string traj_measure = "concurrence";
  double traj_tmax = 3.0;
  int traj_steps = 61;
  bool traj_states = false;
  std::string traj_out;
  traj->add_option("--T", traj_T, "decay time constant")->required();
  traj->add_option("--initial", traj_initial, "initial state spec");
  traj->add_option("--measure", traj_measure, "entanglement measure");
  traj->add_option("--t-max", traj_tmax, "end of the time grid");
  traj->add_option("--steps", traj_steps, "number of grid points");
  traj->add_flag("--emit-states", traj_states, "append serialized states column");
  traj->add_option("--out", traj_out, "CSV output path")->required();

  // counterexample
  auto* counter = app.add_subcommand("counterexample", "explicit ordering counterexamples");
  std::string counter_which = "four-qubit";
  std::string counter_out;
  counter->add_option("which", counter_which, "four-qubit");
  counter->add_option("--out", counter_out, "report JSON path");

  // ghz
  auto* ghz = app.add_subcommand("ghz", "GHZ assistance demonstration");
  int ghz_assist = 0;
  std::uint64_t ghz_seed = 42;
  std::string ghz_out;
  ghz->add_option("--assist-trials", ghz_assist,
                  "sampled decomposition lower bound trials");
  ghz->add_option("--seed", ghz_seed, "sampling seed");
  ghz->add_option("--out", ghz_out, "report JSON path");

  // axioms
  auto* axioms = app.add_subcommand("axioms", "entanglement-measure axiom checks");
  std::string axioms_measure = "concurrence";
  int axioms_trials = 1000;
  std::uint64_t axioms_seed = 42;
  std::string axioms_out;
  axioms->add_option("--measure", axioms_measure, "entanglement measure");
  axioms->add_option("--trials", axioms_trials, "trials per check")
      ->check(CLI::PositiveNumber);
  axioms->add_option("--seed", axioms_seed, "sampling seed");
  axioms->add_option("--out", axioms_out, "report JSON path");

  // maxent
  auto* maxent = app.add_subcommand("maxent", "maximal-entanglement equivalence check");
  ChannelFlags maxent_ch;
  int maxent_trials = 100;
  std::uint64_t maxent_seed = 42;
  std::string maxent_out;
  add_channel_flags(maxent, maxent_ch);
  maxent->add_option("--trials", maxent_trials, "Haar samples")
      ->check(CLI::PositiveNumber);
  maxent->add_option("--seed", maxent_seed, "sampling seed");
  maxent->add_option("--out", maxent_out, "report JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (app.got_subcommand(diagram)) {
      return cmd_diagram(diagram_ch, diagram_measure, diagram_families,
                         diagram_grid, diagram_seed, diagram_out);
    }
    if (app.got_subcommand(violations)) {
      return cmd_violations(violations_ch, violations_measure,
                            violations_strategy, violations_budget,
                            violations_seed, violations_out);
    }
    if (app.got_subcommand(check)) {
      return cmd_check_channel(check_ch, check_test, check_out);
    }
    if (app.got_subcommand(tsep)) {
      return cmd_tsep(tsep_T, tsep_mode, tsep_initial, tsep_tol, tsep_out);
    }
    if (app.got_subcommand(traj)) {
      return cmd_trajectory(traj_T, traj_initial, traj_measure, traj_tmax,
                            traj_steps, traj_states, traj_out);
    }
    if (app.got_subcommand(counter)) {
      return cmd_counterexample(counter_which, counter_out);
    }
    if (app.got_subcommand(ghz)) {
      return cmd_ghz(ghz_assist, ghz_seed, ghz_out);
    }
    if (app.got_subcommand(axioms)) {
      return cmd_axioms(axioms_measure, axioms_trials, axioms_seed, axioms_out);
    }
    if (app.got_subcommand(maxent)) {
      return cmd_maxent(maxent_ch, maxent_trials, maxent_seed, maxent_out);
    }
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kContractError;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericFailure;
  }
  return kInputError;
}
