#pragma once

#include <string>

#include "phasekit/fock.hpp"
#include "phasekit/integrate.hpp"
#include "phasekit/logseries.hpp"
#include "phasekit/moments.hpp"
#include "phasekit/operator_matrix.hpp"
#include "phasekit/turski.hpp"

namespace phasekit {

/// %.<sig>g formatting; reports use 12 significant digits.
std::string format_g(double x, int significant = 12);

/// x rounded to the given number of significant decimal digits (used so JSON
/// payloads are byte-stable at the documented precision).
double round_sig(double x, int significant = 12);

/// State file schema: {"dim": N, "amplitudes": [{"re": x, "im": y}, ...]}.
/// The loader renormalizes when the norm is within [1-1e-6, 1+1e-6] and
/// errors otherwise.
TruncatedState load_state_file(const std::string& path);
void save_state_file(const TruncatedState& state, const std::string& path);

/// Operator CSV ("m,n,re,im" header, %.15g cells) plus a <path>.meta.json
/// sidecar carrying method and construction parameters.
void write_operator_csv(const OperatorMatrix& op, const std::string& path);
Eigen::MatrixXcd read_operator_csv(const std::string& path);
std::string operator_meta_json(const OperatorMatrix& op);

/// Distribution CSV with header "theta,p".
std::string distribution_csv(const PhaseDistribution& dist);

std::string moment_report_json(const MomentReport& report);
std::string unitarity_report_json(const UnitarityReport& report);
std::string equivalence_report_json(const EquivalenceReport& report, int block);

/// Writes text to path ("-" means stdout); throws IoError on failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace phasekit
