#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "phasekit/fock.hpp"
#include "phasekit/polar_grid.hpp"

namespace phasekit {

/// Sampled phase marginal P(theta_j) = \int_0^inf Q(r e^{i theta_j}) r dr on
/// the grid's angular nodes. values are clamped to >= 0 (the marginal of a
/// nonnegative function; negatives can only be round-off) with the pre-clamp
/// minimum kept for diagnostics.
struct PhaseDistribution {
  std::vector<double> thetas;
  std::vector<double> values;
  PhaseWindow window;
  double norm_defect = 0.0;        // |1 - sum values * dtheta|
  double min_value_preclamp = 0.0;
};

/// Grid sum of f over the complex plane: sum_{i,j} f(r_i e^{i theta_j}) w_i dtheta.
/// Linear in f; throws IntegrationError naming the node if f evaluates to a
/// non-finite value. Exact for integrands built from alpha^m conj(alpha)^n
/// times the Gaussian, any parity, up to the grid's degree limits.
std::complex<double> integrate_polar(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    const PolarGrid& grid);

/// Radial reduction of the Q function at every angular node. Cross terms of
/// odd combined degree are routed through the grid's odd-parity radial rule
/// (via the antipodal angular node), so P is exact for states with
/// dim <= 2 * n_radial. Warns on stderr when the grid is undersized for the
/// state (n_angular < 8 * dim).
PhaseDistribution phase_marginal(const TruncatedState& state, const PolarGrid& grid);

}  // namespace phasekit
