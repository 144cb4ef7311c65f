#pragma once

#include <complex>

namespace phasekit {

/// ln Gamma(x), x > 0. Thin wrapper over std::lgamma (thread-safe here since
/// all arguments are positive, so no sign bookkeeping is needed).
double log_gamma(double x);

/// ln n!
double log_factorial(int n);

/// Fock amplitude of a coherent state, <n|alpha> = e^{-|a|^2/2} a^n / sqrt(n!),
/// evaluated in log space so |alpha| up to ~1e3 and n up to ~1e4 do not
/// overflow. Returns 0 when the magnitude underflows.
std::complex<double> coherent_amplitude(int n, std::complex<double> alpha);

/// Probability a Poisson(|alpha|^2) variable falls below dim, i.e. the norm^2
/// captured by truncating |alpha> to dim Fock levels. Stable for large means.
double coherent_capture(std::complex<double> alpha, int dim);

}  // namespace phasekit
