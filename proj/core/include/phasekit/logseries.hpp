#pragma once

#include <complex>
#include <vector>

#include "phasekit/operator_matrix.hpp"

namespace phasekit {

/// Parameters of the displacement-sandwiched logarithm-series construction.
/// The series ln(1 + a/chi) converges geometrically on the working space when
/// chi exceeds ||a|| ~ sqrt(dim_work - 1); the padded working dimension keeps
/// edge artifacts out of the reported block.
struct LogSeriesConfig {
  double chi = 0.0;
  int series_order = 64;  // K
  int dim_report = 0;
  int dim_work = 0;

  /// dim_work = 8*dim_report, chi = 4*sqrt(dim_work), K = 64.
  static LogSeriesConfig defaults(int dim_report);
};

/// phi_LS = -(i/2) D(chi) [L - L^dag] D(chi)^dag with
/// L = sum_{k=1..K} (-1)^{k-1}/k (a/chi)^k, computed in dim_work and cropped
/// to the leading dim_report block. meta records the series tail
/// (max-norm of the last term), the displacement unitarity defect, and the
/// hermiticity defect of the cropped block. Throws ConvergenceError when the
/// series tail exceeds 1e-3.
OperatorMatrix build_log_series_operator(const LogSeriesConfig& cfg);

/// Entrywise comparison of two operator blocks; pure reporting, no thresholds.
struct EquivalenceReport {
  struct Entry {
    int m = 0, n = 0;
    std::complex<double> lhs, rhs;
    double abs_dev = 0.0;
  };
  double max_abs_dev = 0.0;
  double fro_dev = 0.0;  // Frobenius norm of the difference
  std::vector<Entry> entries;
};

EquivalenceReport equivalence_report(const OperatorMatrix& ls_op,
                                     const OperatorMatrix& reference_op, int block);

}  // namespace phasekit
