#include "phasekit/fock.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "phasekit/errors.hpp"
#include "phasekit/special_functions.hpp"

namespace phasekit {

namespace {

void check_dim(int dim) {
  if (dim < 1) throw ValidationError("state dimension must be >= 1");
}

std::string complex_label(std::complex<double> z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

TruncatedState make_fock_state(int n, int dim) {
  check_dim(dim);
  if (n < 0) throw ValidationError("fock index must be nonnegative");
  if (n >= dim) {
    throw DimensionError("fock state |" + std::to_string(n) +
                         "> does not fit in dimension " + std::to_string(dim));
  }
  TruncatedState state;
  state.amplitudes = Eigen::VectorXcd::Zero(dim);
  state.amplitudes[n] = 1.0;
  state.label = "fock:" + std::to_string(n);
  return state;
}

TruncatedState make_coherent_state(std::complex<double> alpha, int dim, bool force) {
  check_dim(dim);
  const double captured = coherent_capture(alpha, dim);
  if (!force && captured < 1.0 - 1e-10) {
    std::ostringstream os;
    os << "coherent state alpha=" << complex_label(alpha) << " needs more than "
       << dim << " Fock levels (captured probability " << captured << ")";
    throw TruncationError(os.str(), captured);
  }
  Eigen::VectorXcd amps(dim);
  for (int n = 0; n < dim; ++n) amps[n] = coherent_amplitude(n, alpha);
  amps /= amps.norm();
  TruncatedState state;
  state.amplitudes = std::move(amps);
  state.label = "coherent:" + complex_label(alpha);
  return state;
}

TruncatedState make_state_from_amplitudes(Eigen::VectorXcd amplitudes,
                                          std::string label) {
  check_dim(static_cast<int>(amplitudes.size()));
  const double norm = amplitudes.norm();
  if (!std::isfinite(norm) || norm == 0.0)
    throw ValidationError("state amplitudes must be finite and not all zero");
  amplitudes /= norm;
  return TruncatedState{std::move(amplitudes), std::move(label)};
}

std::complex<double> coherent_overlap(const TruncatedState& state,
                                      std::complex<double> alpha) {
  std::complex<double> acc = 0.0;
  for (int n = 0; n < state.dim(); ++n)
    acc += std::conj(coherent_amplitude(n, alpha)) * state.amplitudes[n];
  return acc;
}

double q_function(const TruncatedState& state, std::complex<double> alpha) {
  return std::norm(coherent_overlap(state, alpha)) / std::numbers::pi;
}

}  // namespace phasekit
