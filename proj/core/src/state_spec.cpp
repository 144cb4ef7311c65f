#include "phasekit/state_spec.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "phasekit/errors.hpp"
#include "phasekit/io.hpp"

namespace phasekit {

namespace {

bool try_parse_complex(const std::string& text, std::complex<double>& out) {
  if (text.empty()) return false;
  const char* begin = text.c_str();
  char* end = nullptr;
  const double re = std::strtod(begin, &end);
  if (end == begin) return false;
  if (*end == '\0') {
    out = {re, 0.0};
    return true;
  }
  if (*end != '+' && *end != '-') return false;
  const char* imag_begin = end;
  const double im = std::strtod(imag_begin, &end);
  if (end == imag_begin || *end != 'i' || *(end + 1) != '\0') return false;
  out = {re, im};
  return true;
}

// A '+' separates superposition terms iff what follows it looks like
// "<complex>*"; this keeps the '+' inside complex literals (coherent:1.5+0.5i)
// attached to their term.
std::size_t find_term_end(const std::string& body, std::size_t from) {
  for (std::size_t p = body.find('+', from); p != std::string::npos;
       p = body.find('+', p + 1)) {
    const std::size_t star = body.find('*', p + 1);
    if (star == std::string::npos) continue;
    std::complex<double> w;
    if (try_parse_complex(body.substr(p + 1, star - p - 1), w)) return p;
  }
  return std::string::npos;
}

StateSpec parse_simple(const std::string& text, std::size_t offset) {
  StateSpec spec;
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("state spec '" + text + "' is missing ':'", offset);
  const std::string kind = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);
  if (kind == "fock") {
    spec.kind = StateSpec::Kind::Fock;
    char* end = nullptr;
    const long n = std::strtol(body.c_str(), &end, 10);
    if (end == body.c_str() || *end != '\0' || n < 0)
      throw ParseError("fock spec needs a nonnegative integer, got '" + body + "'",
                       offset + colon + 1);
    spec.n = static_cast<int>(n);
  } else if (kind == "coherent") {
    spec.kind = StateSpec::Kind::Coherent;
    if (!try_parse_complex(body, spec.alpha))
      throw ParseError("coherent spec needs <re>[(+|-)<im>i], got '" + body + "'",
                       offset + colon + 1);
  } else if (kind == "file") {
    spec.kind = StateSpec::Kind::File;
    if (body.empty()) throw ParseError("file spec needs a path", offset + colon + 1);
    spec.path = body;
  } else {
    throw ParseError("unknown state kind '" + kind + "'", offset);
  }
  return spec;
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
  std::complex<double> z;
  if (!try_parse_complex(text, z))
    throw ParseError("cannot parse complex number '" + text + "'", 0);
  return z;
}

std::string format_complex(std::complex<double> z) {
  std::string out = format_g(z.real());
  if (z.imag() != 0.0) {
    out += z.imag() < 0.0 ? "-" : "+";
    out += format_g(std::abs(z.imag()));
    out += "i";
  }
  return out;
}

StateSpec parse_state_spec(const std::string& text) {
  if (text.rfind("sup:", 0) != 0) return parse_simple(text, 0);

  StateSpec spec;
  spec.kind = StateSpec::Kind::Superposition;
  const std::string body = text.substr(4);
  std::size_t pos = 0;
  while (pos < body.size()) {
    const std::size_t star = body.find('*', pos);
    if (star == std::string::npos)
      throw ParseError("superposition term needs '<weight>*<spec>'", 4 + pos);
    std::complex<double> weight;
    if (!try_parse_complex(body.substr(pos, star - pos), weight))
      throw ParseError("cannot parse superposition weight '" +
                           body.substr(pos, star - pos) + "'",
                       4 + pos);
    const std::size_t term_end = find_term_end(body, star + 1);
    const std::size_t spec_end = term_end == std::string::npos ? body.size() : term_end;
    const std::string sub = body.substr(star + 1, spec_end - star - 1);
    if (sub.rfind("sup:", 0) == 0)
      throw ParseError("superpositions do not nest", 4 + star + 1);
    spec.terms.emplace_back(weight, parse_simple(sub, 4 + star + 1));
    pos = term_end == std::string::npos ? body.size() : term_end + 1;
  }
  if (spec.terms.size() < 2)
    throw ParseError("superposition needs at least two terms", 4);
  return spec;
}

std::string format_state_spec(const StateSpec& spec) {
  switch (spec.kind) {
    case StateSpec::Kind::Fock:
      return "fock:" + std::to_string(spec.n);
    case StateSpec::Kind::Coherent:
      return "coherent:" + format_complex(spec.alpha);
    case StateSpec::Kind::File:
      return "file:" + spec.path;
    case StateSpec::Kind::Superposition: {
      std::string out = "sup:";
      for (std::size_t i = 0; i < spec.terms.size(); ++i) {
        if (i > 0) out += "+";
        out += format_complex(spec.terms[i].first);
        out += "*";
        out += format_state_spec(spec.terms[i].second);
      }
      return out;
    }
  }
  return {};
}

int recommended_dim(const StateSpec& spec) {
  switch (spec.kind) {
    case StateSpec::Kind::Fock:
      return spec.n + 1;
    case StateSpec::Kind::Coherent: {
      const double a = std::abs(spec.alpha);
      return static_cast<int>(std::ceil(a * a + 8.0 * a + 16.0));
    }
    case StateSpec::Kind::File:
      return load_state_file(spec.path).dim();
    case StateSpec::Kind::Superposition: {
      int dim = 1;
      for (const auto& [w, sub] : spec.terms) dim = std::max(dim, recommended_dim(sub));
      return dim;
    }
  }
  return 1;
}

TruncatedState resolve_state(const StateSpec& spec, int dim, bool force) {
  if (dim < 0) throw ValidationError("state dimension must be positive");
  switch (spec.kind) {
    case StateSpec::Kind::Fock:
      return make_fock_state(spec.n, dim == 0 ? spec.n + 1 : dim);
    case StateSpec::Kind::Coherent:
      return make_coherent_state(spec.alpha, dim == 0 ? recommended_dim(spec) : dim, force);
    case StateSpec::Kind::File: {
      TruncatedState state = load_state_file(spec.path);
      if (dim != 0 && dim < state.dim())
        throw DimensionError("file state has dim " + std::to_string(state.dim()) +
                             ", larger than requested " + std::to_string(dim));
      if (dim > state.dim()) {
        Eigen::VectorXcd padded = Eigen::VectorXcd::Zero(dim);
        padded.head(state.dim()) = state.amplitudes;
        state.amplitudes = std::move(padded);
      }
      return state;
    }
    case StateSpec::Kind::Superposition: {
      const int target = dim == 0 ? recommended_dim(spec) : dim;
      Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(target);
      for (const auto& [weight, sub] : spec.terms) {
        const TruncatedState part = resolve_state(sub, target, force);
        acc += weight * part.amplitudes;
      }
      return make_state_from_amplitudes(std::move(acc), format_state_spec(spec));
    }
  }
  throw ValidationError("unreachable state kind");
}

}  // namespace phasekit
