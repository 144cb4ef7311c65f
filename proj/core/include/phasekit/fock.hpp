#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace phasekit {

/// Pure state on a truncated Fock space: unit-norm complex amplitudes
/// c_0..c_{dim-1}. Immutable after construction; constructors enforce
/// |norm - 1| <= 1e-10.
struct TruncatedState {
  Eigen::VectorXcd amplitudes;
  std::string label;

  int dim() const { return static_cast<int>(amplitudes.size()); }
};

/// Number state |n>. Throws DimensionError when n >= dim.
TruncatedState make_fock_state(int n, int dim);

/// Coherent state |alpha> truncated to dim levels and renormalized. Throws
/// TruncationError (reporting the captured probability) when the truncation
/// captures less than 1 - 1e-10 of the norm, unless force is set.
TruncatedState make_coherent_state(std::complex<double> alpha, int dim,
                                   bool force = false);

/// Wraps raw amplitudes, renormalizing; throws ValidationError if the input
/// norm is zero or not finite.
TruncatedState make_state_from_amplitudes(Eigen::VectorXcd amplitudes,
                                          std::string label);

/// <alpha|psi> = sum_n conj(<n|alpha>) c_n, evaluated in log space.
std::complex<double> coherent_overlap(const TruncatedState& state,
                                      std::complex<double> alpha);

/// Husimi Q(alpha) = |<alpha|psi>|^2 / pi. Nonnegative, bounded by 1/pi.
double q_function(const TruncatedState& state, std::complex<double> alpha);

}  // namespace phasekit
