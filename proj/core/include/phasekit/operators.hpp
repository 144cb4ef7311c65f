#pragma once

#include "phasekit/operator_matrix.hpp"

namespace phasekit {

struct LadderOperators {
  OperatorMatrix annihilation;  // <m|a|n> = sqrt(n) delta_{m,n-1}
  OperatorMatrix creation;      // conjugate transpose of a
  OperatorMatrix number;        // diag(0..dim-1)
};

LadderOperators elementary_operators(int dim);

/// D(chi) = exp(chi (a^dag - a)) on a dim_work-dimensional space, computed by
/// scaling-and-squaring matrix exponential. meta["unitarity_defect"] records
/// ||D^dag D - I||_max, the truncation artifact; chi large relative to
/// sqrt(dim_work) makes it order one, which is reported, not hidden.
OperatorMatrix displacement_matrix(double chi, int dim_work);

}  // namespace phasekit
