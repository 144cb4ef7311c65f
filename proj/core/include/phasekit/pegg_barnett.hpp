#pragma once

#include <vector>

#include "phasekit/fock.hpp"
#include "phasekit/moments.hpp"
#include "phasekit/operator_matrix.hpp"
#include "phasekit/phase_window.hpp"

namespace phasekit {

/// Finite (s+1)-dimensional phase formalism over the orthonormal phase states
/// |theta_m> = (s+1)^{-1/2} sum_n e^{i n theta_m} |n>, theta_m = theta0 + 2 pi m/(s+1).
struct PBConfig {
  int s = 0;
  double theta0 = 0.0;  // first phase value

  /// theta0 placed so the s+1 phase values are midpoint-symmetric about the
  /// window center; under this choice a Fock state's variance is exactly
  /// (pi^2/3) s(s+2)/(s+1)^2.
  static PBConfig for_window(int s, PhaseWindow window = {});

  std::vector<double> phase_values() const;
  double window_center() const;
};

/// phi_PB = sum_m theta_m |theta_m><theta_m|; Hermitian with spectrum
/// {theta_m}.
OperatorMatrix pb_phase_operator(const PBConfig& cfg);

/// p_m = |<theta_m|psi>|^2 (states of smaller dimension are zero-padded).
std::vector<double> pb_distribution(const TruncatedState& state, const PBConfig& cfg);

/// Moments sum_m p_m theta_m^k computed about the window center; method tag
/// "pegg-barnett". Throws DimensionError when state dim > s+1.
MomentReport pb_moments(const TruncatedState& state, const PBConfig& cfg, int k_max);

}  // namespace phasekit
