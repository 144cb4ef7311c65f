#pragma once

#include <cstddef>
#include <vector>

#include "phasekit/phase_window.hpp"

namespace phasekit {

/// One-dimensional rule for integrals \int_0^infty f(r) r dr against the
/// implicit Gaussian factor exp(-r^2) carried by coherent-state overlaps.
/// Weights are stored in "modified" form (the exp(-u) Laguerre weight is
/// factored out analytically), so the caller evaluates the full integrand
/// including its exp(-r^2) decay.
struct RadialRule {
  std::vector<double> nodes;    // r_i > 0
  std::vector<double> weights;  // w_i > 0
};

/// Product grid for integrals over the complex plane in polar coordinates.
///
/// Radial: Gauss-Laguerre in u = r^2 (alpha = 0), which integrates
/// e^{-r^2} r^{2k} . r dr exactly for k < 2*n_radial. Fields radial_nodes /
/// radial_weights expose that rule. Monomials of odd total degree reduce to
/// half-integer Laguerre moments where the alpha = 0 rule converges only like
/// n^{-3/2}, so the grid also carries a generalized alpha = 1/2 companion
/// (radial_odd) that integrates e^{-r^2} r^{2k+1} . r dr exactly. Evaluators
/// split integrands into parts even/odd under alpha -> -alpha using antipodal
/// angular nodes and send each part to its matching rule.
///
/// Angular: n_angular equally spaced nodes with equal weight 2*pi/M, placed
/// midpoint-style so they are exactly symmetric about window.theta0 and avoid
/// the branch cut at the window edge. n_angular must be even, which also
/// guarantees every node has an antipode on the grid.
struct PolarGrid {
  std::vector<double> radial_nodes;
  std::vector<double> radial_weights;
  RadialRule radial_odd;
  std::vector<double> angular_nodes;
  double angular_weight = 0.0;
  PhaseWindow window;

  int n_radial() const { return static_cast<int>(radial_nodes.size()); }
  int n_angular() const { return static_cast<int>(angular_nodes.size()); }

  /// Index of the node at theta_j + pi.
  std::size_t antipode(std::size_t j) const {
    const std::size_t m = angular_nodes.size();
    return (j + m / 2) % m;
  }
};

/// Gauss-Laguerre rule for weight u^alpha e^{-u} on (0, inf), returned with
/// modified weights w_i * e^{u_i}. Nodes found by Newton iteration on an
/// exp(-u/2)-scaled recurrence with exponent renormalization, which keeps the
/// builder stable to a few thousand nodes.
void gauss_laguerre(int n, double alpha, std::vector<double>& nodes,
                    std::vector<double>& modified_weights);

/// Builds the polar product grid. Requires n_radial >= 2 and n_angular >= 4
/// and even.
PolarGrid build_polar_grid(int n_radial, int n_angular, PhaseWindow window);

}  // namespace phasekit
