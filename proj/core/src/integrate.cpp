#include "phasekit/integrate.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>

#include "phasekit/errors.hpp"
#include "phasekit/numeric.hpp"
#include "phasekit/special_functions.hpp"

namespace phasekit {

namespace {

// Per-node Fock weights g_n(r) = e^{-r^2/2} r^n / sqrt(n!) for every radial
// node of one rule, log-evaluated once and reused across all angles.
std::vector<std::vector<double>> fock_radial_table(const std::vector<double>& nodes,
                                                   int dim) {
  std::vector<double> half_lf(dim);
  for (int n = 0; n < dim; ++n) half_lf[n] = 0.5 * log_factorial(n);
  std::vector<std::vector<double>> table(nodes.size(), std::vector<double>(dim));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double r = nodes[i];
    const double logr = std::log(r);
    for (int n = 0; n < dim; ++n)
      table[i][n] = std::exp(-0.5 * r * r + n * logr - half_lf[n]);
  }
  return table;
}

// <alpha|psi> at alpha = r e^{i theta}; O(dim) per angle given the radial row.
std::complex<double> overlap_at(const TruncatedState& state,
                                const std::vector<double>& g, double theta) {
  const std::complex<double> step = std::polar(1.0, -theta);
  std::complex<double> w = 1.0;
  std::complex<double> acc = 0.0;
  for (int n = 0; n < state.dim(); ++n) {
    acc += g[n] * state.amplitudes[n] * w;
    w *= step;
  }
  return acc;
}

}  // namespace

std::complex<double> integrate_polar(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    const PolarGrid& grid) {
  const std::size_t nr = grid.radial_nodes.size();
  const std::size_t na = grid.angular_nodes.size();
  std::vector<std::complex<double>> per_angle(na);

  detail::parallel_for(na, [&](std::size_t j) {
    const double theta = grid.angular_nodes[j];
    per_angle[j] = detail::pairwise_sum<std::complex<double>>(0, nr, [&](std::size_t i) {
      const std::complex<double> alpha = std::polar(grid.radial_nodes[i], theta);
      const std::complex<double> v = f(alpha);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::ostringstream os;
        os << "integrate_polar: non-finite integrand at node (i=" << i
           << ", j=" << j << "), alpha = " << grid.radial_nodes[i] << " * e^(i*"
           << theta << ")";
        throw IntegrationError(os.str());
      }
      return v * grid.radial_weights[i];
    });
  });

  const std::complex<double> total =
      detail::pairwise_sum<std::complex<double>>(0, na, [&](std::size_t j) {
        return per_angle[j];
      });
  return total * grid.angular_weight;
}

PhaseDistribution phase_marginal(const TruncatedState& state, const PolarGrid& grid) {
  const int dim = state.dim();
  const std::size_t na = grid.angular_nodes.size();
  const std::size_t nr = grid.radial_nodes.size();
  if (static_cast<int>(na) < 8 * dim) {
    std::cerr << "phasekit: warning: n_angular=" << na << " below the recommended 8*dim="
              << 8 * dim << "; marginal moments may alias\n";
  }
  if (static_cast<int>(2 * nr) < dim) {
    std::cerr << "phasekit: warning: n_radial=" << nr
              << " too small for dim=" << dim << "; radial rule is inexact\n";
  }

  PhaseDistribution dist;
  dist.thetas = grid.angular_nodes;
  dist.window = grid.window;
  dist.values.assign(na, 0.0);

  const double inv_pi = 1.0 / std::numbers::pi;
  const auto even_table = fock_radial_table(grid.radial_nodes, dim);
  const auto odd_table = fock_radial_table(grid.radial_odd.nodes, dim);

  // Work in antipodal pairs: the even part of Q under alpha -> -alpha goes to
  // the alpha=0 radial rule, the odd part to the alpha=1/2 companion.
  detail::parallel_for(na / 2, [&](std::size_t p) {
    const std::size_t j = p;
    const std::size_t ja = grid.antipode(p);
    const double theta_j = grid.angular_nodes[j];
    const double theta_ja = grid.angular_nodes[ja];

    double even_j = 0.0, even_ja = 0.0;
    for (std::size_t i = 0; i < nr; ++i) {
      const double qj = std::norm(overlap_at(state, even_table[i], theta_j)) * inv_pi;
      const double qa = std::norm(overlap_at(state, even_table[i], theta_ja)) * inv_pi;
      even_j += grid.radial_weights[i] * 0.5 * (qj + qa);
      even_ja += grid.radial_weights[i] * 0.5 * (qa + qj);
    }
    double odd_j = 0.0, odd_ja = 0.0;
    for (std::size_t i = 0; i < grid.radial_odd.nodes.size(); ++i) {
      const double qj = std::norm(overlap_at(state, odd_table[i], theta_j)) * inv_pi;
      const double qa = std::norm(overlap_at(state, odd_table[i], theta_ja)) * inv_pi;
      odd_j += grid.radial_odd.weights[i] * 0.5 * (qj - qa);
      odd_ja += grid.radial_odd.weights[i] * 0.5 * (qa - qj);
    }
    dist.values[j] = even_j + odd_j;
    dist.values[ja] = even_ja + odd_ja;
  });

  double minv = 0.0;
  for (double& v : dist.values) {
    minv = std::min(minv, v);
    if (v < 0.0) v = 0.0;
  }
  dist.min_value_preclamp = minv;

  const double mass = grid.angular_weight *
                      detail::pairwise_sum<double>(0, na, [&](std::size_t j) {
                        return dist.values[j];
                      });
  dist.norm_defect = std::abs(1.0 - mass);
  return dist;
}

}  // namespace phasekit
