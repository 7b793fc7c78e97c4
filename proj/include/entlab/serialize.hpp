#ifndef ENTLAB_SERIALIZE_HPP
#define ENTLAB_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "entlab/dynamics.hpp"
#include "entlab/ordering.hpp"

namespace entlab::serialize {

using nlohmann::json;

// Deterministic shortest-17-digit formatting used by every CSV/SVG emitter;
// repeated runs must be byte-identical.
std::string fmt_double(double x);

// State interchange: { "dims": [...], "matrix": [[re, im], ...] } row-major.
json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const json& j);

// Channel interchange: { "d_in": n, "d_out": m, "kraus": [matrix, ...] }
// with each matrix in the state format (flat row-major [re, im] pairs).
json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const json& j);

json certificate_to_json(const ViolationCertificate& cert,
                         const KrausChannel& local_ch);

json four_qubit_report_to_json(const FourQubitReport& report);
json ghz_report_to_json(const GhzAssistanceReport& report);
json maxent_report_to_json(const MaxEntReport& report,
                           const std::string& channel_name);
json axiom_checks_to_json(const std::vector<AxiomCheck>& checks,
                          MeasureKind kind);

// CSV emitters; header line included.
std::string diagram_csv(const std::vector<DiagramPoint>& points);
std::string trajectory_csv(const Trajectory& traj, bool with_states);

}  // namespace entlab::serialize

#endif
