#pragma once

#include <numbers>

namespace phasekit {

/// Principal branch of the phase: the half-open 2*pi interval
/// (theta0 - pi, theta0 + pi]. Every phase moment in this library is defined
/// relative to a window; states localized away from 0 should be analyzed with
/// the window recentered on them so the branch cut sits where the
/// distribution is smallest.
struct PhaseWindow {
  double theta0 = 0.0;

  double lo() const { return theta0 - std::numbers::pi; }
  double hi() const { return theta0 + std::numbers::pi; }
};

}  // namespace phasekit
