#include "phasekit/operator_matrix.hpp"

#include <cmath>

#include "phasekit/errors.hpp"

namespace phasekit {

const char* to_string(OperatorMethod method) {
  switch (method) {
    case OperatorMethod::TurskiQuadrature: return "turski-quadrature";
    case OperatorMethod::TurskiAnalytic: return "turski-analytic";
    case OperatorMethod::LogSeries: return "log-series";
    case OperatorMethod::PeggBarnett: return "pegg-barnett";
    case OperatorMethod::ExpPhasePlus: return "exp-phase-plus";
    case OperatorMethod::ExpPhaseMinus: return "exp-phase-minus";
    case OperatorMethod::MomentK: return "moment-k";
    case OperatorMethod::Elementary: return "elementary";
  }
  return "unknown";
}

double hermiticity_defect(const Eigen::MatrixXcd& a) {
  double worst = 0.0;
  for (Eigen::Index m = 0; m < a.rows(); ++m)
    for (Eigen::Index n = m; n < a.cols(); ++n)
      worst = std::max(worst, std::abs(a(m, n) - std::conj(a(n, m))));
  return worst;
}

void require_finite(const OperatorMatrix& op, const std::string& context) {
  for (Eigen::Index m = 0; m < op.entries.rows(); ++m)
    for (Eigen::Index n = 0; n < op.entries.cols(); ++n) {
      const auto z = op.entries(m, n);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw ValidationError(context + ": non-finite entry at (" +
                              std::to_string(m) + "," + std::to_string(n) + ")");
    }
}

}  // namespace phasekit
