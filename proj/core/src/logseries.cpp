#include "phasekit/logseries.hpp"

#include <cmath>
#include <iostream>

#include "phasekit/errors.hpp"
#include "phasekit/operators.hpp"

namespace phasekit {

LogSeriesConfig LogSeriesConfig::defaults(int dim_report) {
  LogSeriesConfig cfg;
  cfg.dim_report = dim_report;
  cfg.dim_work = 8 * dim_report;
  cfg.chi = 4.0 * std::sqrt(static_cast<double>(cfg.dim_work));
  cfg.series_order = 64;
  return cfg;
}

OperatorMatrix build_log_series_operator(const LogSeriesConfig& cfg) {
  if (cfg.dim_report < 1) throw ValidationError("log-series: dim_report must be >= 1");
  if (cfg.dim_work < 4 * cfg.dim_report)
    throw ValidationError("log-series: dim_work must be >= 4*dim_report");
  if (cfg.series_order < 1) throw ValidationError("log-series: series order must be >= 1");
  if (cfg.chi <= 0.0) throw ValidationError("log-series: chi must be positive");
  if (cfg.chi <= std::sqrt(static_cast<double>(cfg.dim_work - 1))) {
    std::cerr << "phasekit: warning: chi=" << cfg.chi
              << " below ||a|| ~ sqrt(dim_work-1); the series may not converge\n";
  }

  const int dw = cfg.dim_work;
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(dw, dw);
  for (int n = 1; n < dw; ++n) b(n - 1, n) = std::sqrt(static_cast<double>(n)) / cfg.chi;

  // L = sum (-1)^{k-1}/k B^k by iterated multiplication; no eigensolve of the
  // non-normal B. Track the max-norm of each added term as the tail estimate.
  Eigen::MatrixXcd power = b;
  Eigen::MatrixXcd series = Eigen::MatrixXcd::Zero(dw, dw);
  double tail = 0.0;
  for (int k = 1; k <= cfg.series_order; ++k) {
    const double coeff = (k % 2 == 1 ? 1.0 : -1.0) / k;
    series += coeff * power;
    tail = std::abs(coeff) * power.cwiseAbs().maxCoeff();
    if (k < cfg.series_order) power = (power * b).eval();
  }
  // K = 1 is the exact closed-form case -(i/2)(a - a^dag)/chi; there is no
  // truncation remainder to protect against, so the gate applies from K >= 2.
  if (cfg.series_order > 1 && tail > 1e-3) {
    throw ConvergenceError(
        "log-series: last-term max-norm " + std::to_string(tail) +
        " exceeds 1e-3; increase the series order or chi");
  }

  const OperatorMatrix disp = displacement_matrix(cfg.chi, dw);
  const Eigen::MatrixXcd anti = series - series.adjoint().eval();
  const Eigen::MatrixXcd full =
      std::complex<double>(0.0, -0.5) * (disp.entries * anti * disp.entries.adjoint());

  OperatorMatrix op;
  op.entries = full.topLeftCorner(cfg.dim_report, cfg.dim_report);
  op.method = OperatorMethod::LogSeries;
  op.meta = {{"chi", cfg.chi},
             {"K", double(cfg.series_order)},
             {"dim_report", double(cfg.dim_report)},
             {"dim_work", double(cfg.dim_work)},
             {"series_tail", tail},
             {"displacement_unitarity_defect", disp.meta.at("unitarity_defect")},
             {"hermiticity_defect", hermiticity_defect(op.entries)}};
  return op;
}

EquivalenceReport equivalence_report(const OperatorMatrix& ls_op,
                                     const OperatorMatrix& reference_op, int block) {
  if (block < 1) throw ValidationError("equivalence_report: block must be >= 1");
  if (block > ls_op.dim() || block > reference_op.dim())
    throw DimensionError("equivalence_report: block exceeds operator dimensions");

  EquivalenceReport report;
  report.entries.reserve(static_cast<std::size_t>(block) * block);
  double fro2 = 0.0;
  for (int m = 0; m < block; ++m)
    for (int n = 0; n < block; ++n) {
      EquivalenceReport::Entry e;
      e.m = m;
      e.n = n;
      e.lhs = ls_op.entries(m, n);
      e.rhs = reference_op.entries(m, n);
      e.abs_dev = std::abs(e.lhs - e.rhs);
      fro2 += e.abs_dev * e.abs_dev;
      report.max_abs_dev = std::max(report.max_abs_dev, e.abs_dev);
      report.entries.push_back(e);
    }
  report.fro_dev = std::sqrt(fro2);
  return report;
}

}  // namespace phasekit
