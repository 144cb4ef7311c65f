#pragma once

#include <complex>
#include <map>
#include <string>

#include "phasekit/integrate.hpp"

namespace phasekit {

/// Phase moments of a distribution or operator expectation. mean and
/// second_moment are reported in absolute window coordinates; variance is
/// computed in centered coordinates, so variance = second_moment - mean^2
/// holds as an identity.
struct MomentReport {
  double mean = 0.0;           // radians
  double second_moment = 0.0;  // radians^2
  double variance = 0.0;       // radians^2
  std::string method;          // "q-integral" | "operator-expectation" | "pegg-barnett"
  double norm_defect = 0.0;
  std::map<std::string, double> meta;
};

/// Closed form of \int_{-pi}^{pi} u^p e^{iku} du for integer k, 0 <= p <= 4.
/// These are the angular factors behind every analytic construction here;
/// unit tests pin them against adaptive 1D quadrature before anything else
/// trusts them.
std::complex<double> angular_moment_integral(int p, int k);

/// Moments <theta^k> for k <= k_max (k_max in [1,4]) of a sampled marginal.
///
/// P is a trigonometric polynomial of degree dim-1, so its Fourier
/// coefficients are recovered exactly from the equally spaced samples
/// (rectangle-rule DFT) whenever n_angular >= 2*dim; the non-periodic theta^k
/// factor is then integrated in closed form per mode. This keeps the uniform
/// marginal's second moment at exactly pi^2/3 on any even grid, which a plain
/// Riemann sum misses by O(dtheta^2).
///
/// Throws ConvergenceError when the marginal's norm defect exceeds 1e-4.
MomentReport moments_from_marginal(const PhaseDistribution& dist, int k_max);

}  // namespace phasekit
