#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "phasekit/fock.hpp"

namespace phasekit {

/// Parsed state descriptor. Grammar:
///   fock:<uint>
///   coherent:<re>[(+|-)<im>i]
///   sup:<w1>*<spec1>+<w2>*<spec2>[+...]   (weights complex, result renormalized;
///                                          terms may not be nested sups)
///   file:<path>
struct StateSpec {
  enum class Kind { Fock, Coherent, Superposition, File };
  Kind kind = Kind::Fock;
  int n = 0;                         // Fock
  std::complex<double> alpha;        // Coherent
  std::vector<std::pair<std::complex<double>, StateSpec>> terms;  // Superposition
  std::string path;                  // File
};

/// Throws ParseError (with position) on malformed input.
StateSpec parse_state_spec(const std::string& text);

/// Canonical round-trip form: format(parse(s)) is idempotent.
std::string format_state_spec(const StateSpec& spec);

std::complex<double> parse_complex(const std::string& text);
std::string format_complex(std::complex<double> z);

/// Smallest dimension at which the spec is well represented (fock: n+1;
/// coherent: |a|^2 + 8|a| + 16 for a 1-1e-10 Poisson capture).
int recommended_dim(const StateSpec& spec);

/// Builds the state; dim = 0 means recommended_dim(spec). force forwards to
/// the coherent-state truncation override.
TruncatedState resolve_state(const StateSpec& spec, int dim = 0, bool force = false);

}  // namespace phasekit
