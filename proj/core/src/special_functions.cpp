#include "phasekit/special_functions.hpp"

#include <cmath>

namespace phasekit {

double log_gamma(double x) { return std::lgamma(x); }

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

std::complex<double> coherent_amplitude(int n, std::complex<double> alpha) {
  const double a = std::abs(alpha);
  if (a == 0.0) return n == 0 ? 1.0 : 0.0;
  const double logmag = -0.5 * a * a + n * std::log(a) - 0.5 * log_factorial(n);
  const double mag = std::exp(logmag);
  if (mag == 0.0) return 0.0;
  const double phase = n * std::arg(alpha);
  return std::polar(mag, phase);
}

double coherent_capture(std::complex<double> alpha, int dim) {
  const double mu = std::norm(alpha);
  if (mu == 0.0) return 1.0;
  // Sum the Poisson pmf from the mode outward within [0, dim) so the largest
  // terms accumulate first.
  const int mode = static_cast<int>(mu) < dim ? static_cast<int>(mu) : dim - 1;
  auto log_pmf = [mu](int n) { return -mu + n * std::log(mu) - log_factorial(n); };
  double acc = std::exp(log_pmf(mode));
  for (int n = mode - 1; n >= 0; --n) {
    const double t = std::exp(log_pmf(n));
    acc += t;
    if (t < 1e-18 * acc) break;
  }
  for (int n = mode + 1; n < dim; ++n) {
    const double t = std::exp(log_pmf(n));
    acc += t;
    if (t < 1e-18 * acc) break;
  }
  return acc < 1.0 ? acc : 1.0;
}

}  // namespace phasekit
