#include "entlab/serialize.hpp"

#include <cstdio>

namespace entlab::serialize {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

json matrix_to_flat(const CMatrix& m) {
  json flat = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      flat.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
  }
  return flat;
}

CMatrix matrix_from_flat(const json& flat, Eigen::Index rows, Eigen::Index cols) {
  if (!flat.is_array() || static_cast<Eigen::Index>(flat.size()) != rows * cols) {
    throw DomainError("matrix entry count does not match dimensions");
  }
  CMatrix m(rows, cols);
  Eigen::Index idx = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c, ++idx) {
      const json& e = flat[idx];
      if (!e.is_array() || e.size() != 2) {
        throw DomainError("matrix entries must be [re, im] pairs");
      }
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

}  // namespace

json state_to_json(const DensityMatrix& rho) {
  json j;
  j["dims"] = rho.shape().dims;
  j["matrix"] = matrix_to_flat(rho.mat());
  return j;
}

DensityMatrix state_from_json(const json& j) {
  if (!j.contains("dims") || !j.contains("matrix")) {
    throw DomainError("state JSON needs 'dims' and 'matrix'");
  }
  const TensorShape shape{j["dims"].get<std::vector<int>>()};
  const int d = shape.total_dim();
  return DensityMatrix(matrix_from_flat(j["matrix"], d, d), shape);
}

json channel_to_json(const KrausChannel& ch) {
  json j;
  j["d_in"] = ch.d_in();
  j["d_out"] = ch.d_out();
  if (!ch.name().empty()) j["name"] = ch.name();
  json ops = json::array();
  for (const CMatrix& k : ch.kraus()) ops.push_back(matrix_to_flat(k));
  j["kraus"] = ops;
  return j;
}

KrausChannel channel_from_json(const json& j) {
  if (!j.contains("d_in") || !j.contains("d_out") || !j.contains("kraus")) {
    throw DomainError("channel JSON needs 'd_in', 'd_out' and 'kraus'");
  }
  const auto d_in = j["d_in"].get<Eigen::Index>();
  const auto d_out = j["d_out"].get<Eigen::Index>();
  if (d_in < 1 || d_out < 1) throw DomainError("channel dims must be positive");
  std::vector<CMatrix> kraus;
  for (const json& op : j["kraus"]) {
    kraus.push_back(matrix_from_flat(op, d_out, d_in));
  }
  const std::string name = j.value("name", std::string("custom"));
  return KrausChannel(std::move(kraus), name);
}

json certificate_to_json(const ViolationCertificate& cert,
                         const KrausChannel& local_ch) {
  json j;
  j["schema"] = "entlab/certificate/v1";
  j["found"] = true;
  j["measure"] = to_string(cert.kind);
  j["margin"] = cert.margin;
  j["e_in1"] = cert.e_in1;
  j["e_in2"] = cert.e_in2;
  j["e_out1"] = cert.e_out1;
  j["e_out2"] = cert.e_out2;
  j["rho1"] = state_to_json(cert.rho1);
  j["rho2"] = state_to_json(cert.rho2);
  j["channel"] = channel_to_json(local_ch);
  return j;
}

json four_qubit_report_to_json(const FourQubitReport& report) {
  json j;
  j["schema"] = "entlab/counterexample/v1";
  j["rho1_invariance_residual"] = report.rho1_invariance_residual;
  j["rho2_mixture_residual"] = report.rho2_mixture_residual;
  j["negativity_in_rho1"] = report.neg_in_rho1;
  j["negativity_in_rho2"] = report.neg_in_rho2;
  j["negativity_out_rho1"] = report.neg_out_rho1;
  j["negativity_out_rho2"] = report.neg_out_rho2;
  j["convexity_bound_holds"] = report.convexity_bound_holds;
  j["ordering_reversed"] = report.ordering_reversed;
  j["pass"] = report.pass();
  return j;
}

json ghz_report_to_json(const GhzAssistanceReport& report) {
  json j;
  j["schema"] = "entlab/ghz/v1";
  j["concurrence_rho_ab"] = report.concurrence_unmeasured;
  j["concurrence_plus"] = report.concurrence_plus;
  j["concurrence_minus"] = report.concurrence_minus;
  j["outcome_probability"] = report.outcome_probability;
  j["assisted_average"] = report.assisted_average;
  j["mixture_residual"] = report.mixture_residual;
  if (report.sampled_trials > 0) {
    j["assist_lower_bound"] = report.sampled_lower_bound;
    j["assist_trials"] = report.sampled_trials;
  }
  return j;
}

json maxent_report_to_json(const MaxEntReport& report,
                           const std::string& channel_name) {
  json j;
  j["schema"] = "entlab/maxent/v1";
  j["channel"] = channel_name;
  j["trials"] = report.trials;
  j["max_spread"] = report.max_spread;
  j["pass"] = report.pass;
  json per = json::array();
  for (const MeasureSpread& spread : report.per_measure) {
    json s;
    s["measure"] = to_string(spread.kind);
    s["min"] = spread.min;
    s["max"] = spread.max;
    s["mean"] = spread.mean;
    s["spread"] = spread.spread();
    per.push_back(s);
  }
  j["per_measure"] = per;
  return j;
}

json axiom_checks_to_json(const std::vector<AxiomCheck>& checks,
                          MeasureKind kind) {
  json j;
  j["schema"] = "entlab/axioms/v1";
  j["measure"] = to_string(kind);
  bool all = true;
  json arr = json::array();
  for (const AxiomCheck& check : checks) {
    json c;
    c["name"] = check.name;
    c["trials"] = check.trials;
    c["max_deviation"] = check.max_deviation;
    c["tolerance"] = check.tolerance;
    c["pass"] = check.pass;
    arr.push_back(c);
    all = all && check.pass;
  }
  j["checks"] = arr;
  j["pass"] = all;
  return j;
}

std::string diagram_csv(const std::vector<DiagramPoint>& points) {
  std::string out = "family,param,measure,e_in,e_out\n";
  for (const DiagramPoint& pt : points) {
    out += pt.family;
    out += ',';
    out += fmt_double(pt.param);
    out += ',';
    out += to_string(pt.kind);
    out += ',';
    out += fmt_double(pt.e_in);
    out += ',';
    out += fmt_double(pt.e_out);
    out += '\n';
  }
  return out;
}

std::string trajectory_csv(const Trajectory& traj, bool with_states) {
  std::string out = with_states ? "t,measure_kind,value,state\n"
                                : "t,measure_kind,value\n";
  for (const TrajectorySample& sample : traj.samples) {
    out += fmt_double(sample.t);
    out += ',';
    out += to_string(sample.measure.kind);
    out += ',';
    out += fmt_double(sample.measure.value);
    if (with_states) {
      // CSV quoting: the embedded JSON doubles its inner quotes.
      std::string cell = state_to_json(sample.state).dump();
      std::string quoted = "\"";
      for (char ch : cell) {
        quoted += ch;
        if (ch == '"') quoted += '"';
      }
      quoted += '"';
      out += ',';
      out += quoted;
    }
    out += '\n';
  }
  return out;
}

}  // namespace entlab::serialize
