#pragma once

#include <vector>

#include "phasekit/fock.hpp"
#include "phasekit/moments.hpp"
#include "phasekit/operator_matrix.hpp"
#include "phasekit/polar_grid.hpp"

namespace phasekit {

struct EvolutionConfig {
  double omega = 1.0;  // oscillator frequency, > 0
  double t = 0.0;
};

/// Grid sized for marginals and Q-moment integrals of a dim-level state:
/// radial rule exact through the state's polynomial degree, angular sampling
/// past the band limit (n_angular = max(512, 8*dim)).
PolarGrid default_marginal_grid(int dim, PhaseWindow window = {});

/// Grid sized for operator construction by brute-force quadrature. The
/// non-periodic theta factor leaves an O(dtheta^2 * k) Riemann error on the
/// angular sums, so this grid is much finer in angle (2^18 nodes) than the
/// marginal default; radial factors are exact either way.
PolarGrid default_operator_grid(int dim, PhaseWindow window = {});

/// Phase operator entries in closed form:
///   entry(m,n) = -i (-1)^{n-m} Gamma((n+m)/2+1) / ((n-m) sqrt(n! m!)),
/// rotated by e^{i(n-m)theta0} for off-center windows; diagonal = theta0.
/// Exactly Hermitian by construction.
OperatorMatrix build_phase_operator_analytic(int dim, PhaseWindow window = {});

/// Same operator from the polar grid sum (1/pi) sum theta coh_m^* coh_n. The
/// angular and radial factors are shared across entries (the integrand
/// factorizes), which keeps dim=32 construction around a second even on the
/// 2^18-node default grid. Throws ConvergenceError if the pre-Hermitization
/// defect exceeds 1e-6.
OperatorMatrix build_phase_operator_quadrature(int dim, const PolarGrid& grid);

/// Moment operator for theta^k, k in {1,2}; k=1 coincides with the phase
/// operator. Analytic and quadrature routes.
OperatorMatrix build_moment_operator(int k, int dim, PhaseWindow window = {});
OperatorMatrix build_moment_operator(int k, int dim, const PolarGrid& grid);

/// Exponential phase operator. sign=+1 populates the first subdiagonal,
/// entry(n+1,n) = Gamma(n+3/2)/sqrt(n!(n+1)!); sign=-1 is its adjoint.
OperatorMatrix build_exp_phase_operator(int sign, int dim);
OperatorMatrix build_exp_phase_operator(int sign, int dim, const PolarGrid& grid);

/// Measured deviation of E^dag E from the identity on the truncated space.
/// The diagonal runs pi/4 at n=0 and approaches 1 only asymptotically; the
/// report presents that as data and asserts nothing about unitarity. The last
/// diagonal entry is the truncation corner (empty column) and is excluded
/// from the inner-block defect.
struct UnitarityReport {
  std::vector<double> diagonal;
  double max_defect_inner_block = 0.0;
  std::string construction;
};
UnitarityReport unitarity_defect(int dim, const OperatorMatrix& exp_plus);
UnitarityReport unitarity_defect(int dim);

/// Phase moments through the Q-function marginal; method tag "q-integral".
MomentReport phase_moments_q(const TruncatedState& state, const PolarGrid& grid,
                             int k_max);

/// Phase moments as expectations of the analytic moment operators; method tag
/// "operator-expectation". k_max <= 2. meta also records <(phi^(1))^2> so the
/// gap between the matrix square and the k=2 moment operator is visible.
MomentReport operator_expectation_moments(const TruncatedState& state, int dim,
                                          int k_max, PhaseWindow window = {});

struct AcidTestResult {
  double variance = 0.0;
  bool pass = false;
  MomentReport report;
};

/// Phase variance of |n> via the Q route; passes iff |variance - pi^2/3| <= 1e-6.
AcidTestResult acid_test(int n, int dim, const PolarGrid& grid);

/// Free evolution phi(t) = e^{i w n t} phi e^{-i w n t}, applied elementwise
/// as entry(m,n) *= e^{i w (m-n) t}.
OperatorMatrix evolve_phase_operator(const OperatorMatrix& op, const EvolutionConfig& cfg);

}  // namespace phasekit
