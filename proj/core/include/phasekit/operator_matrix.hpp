#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>

namespace phasekit {

enum class OperatorMethod {
  TurskiQuadrature,
  TurskiAnalytic,
  LogSeries,
  PeggBarnett,
  ExpPhasePlus,
  ExpPhaseMinus,
  MomentK,
  Elementary,
};

const char* to_string(OperatorMethod method);

/// Dense complex matrix plus the story of how it was built. meta keys record
/// construction parameters (grid sizes, chi, K, s, k, theta0) and measured
/// defects (hermiticity, unitarity, series tails); values are numeric so the
/// record exports deterministically.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  OperatorMethod method = OperatorMethod::Elementary;
  std::map<std::string, double> meta;

  int dim() const { return static_cast<int>(entries.rows()); }
};

/// max_{m,n} |A(m,n) - conj(A(n,m))|
double hermiticity_defect(const Eigen::MatrixXcd& a);

/// Throws ValidationError if any entry is NaN or infinite.
void require_finite(const OperatorMatrix& op, const std::string& context);

}  // namespace phasekit
