#include "phasekit/operators.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <iostream>

#include "phasekit/errors.hpp"

namespace phasekit {

LadderOperators elementary_operators(int dim) {
  if (dim < 1) throw ValidationError("elementary_operators: dim must be >= 1");
  LadderOperators ops;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd num = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  for (int n = 0; n < dim; ++n) num(n, n) = static_cast<double>(n);
  ops.annihilation = {a, OperatorMethod::Elementary, {{"dim", double(dim)}}};
  ops.creation = {a.adjoint(), OperatorMethod::Elementary, {{"dim", double(dim)}}};
  ops.number = {num, OperatorMethod::Elementary, {{"dim", double(dim)}}};
  return ops;
}

OperatorMatrix displacement_matrix(double chi, int dim_work) {
  if (dim_work < 1) throw ValidationError("displacement_matrix: dim_work must be >= 1");
  Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(dim_work, dim_work);
  for (int n = 1; n < dim_work; ++n) {
    const double s = std::sqrt(static_cast<double>(n));
    gen(n, n - 1) = chi * s;   // chi a^dag
    gen(n - 1, n) = -chi * s;  // -chi a
  }
  Eigen::MatrixXcd d = gen.exp();

  const Eigen::MatrixXcd gram = d.adjoint() * d;
  double defect = 0.0;
  for (int m = 0; m < dim_work; ++m)
    for (int n = 0; n < dim_work; ++n) {
      const double target = (m == n) ? 1.0 : 0.0;
      defect = std::max(defect, std::abs(gram(m, n) - target));
    }
  if (chi * chi + 8.0 * std::abs(chi) + 16.0 > dim_work) {
    std::cerr << "phasekit: warning: displacement chi=" << chi
              << " is large for dim_work=" << dim_work
              << " (unitarity defect " << defect << ")\n";
  }

  OperatorMatrix op;
  op.entries = std::move(d);
  op.method = OperatorMethod::Elementary;
  op.meta = {{"chi", chi}, {"dim_work", double(dim_work)}, {"unitarity_defect", defect}};
  return op;
}

}  // namespace phasekit
