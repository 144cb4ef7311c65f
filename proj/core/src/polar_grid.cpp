#include "phasekit/polar_grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "phasekit/errors.hpp"
#include "phasekit/special_functions.hpp"

namespace phasekit {

namespace {

// Generalized Laguerre L_k^{(a)} scaled by e^{-x/2}, tracked as p * 2^E to
// survive arguments up to ~1e4 where the bare e^{-x/2} underflows. Returns
// the scaled pair (s_n, s_{n-1}) through p_n, p_nm1 and the shared exponent.
void scaled_laguerre_pair(int n, double alpha, double x, double& p_n,
                          double& p_nm1, int& exp2) {
  double pm = 1.0;               // L_0
  double pc = 1.0 + alpha - x;   // L_1
  exp2 = 0;
  // fold e^{-x/2} into the exponent bookkeeping
  const double half = -0.5 * x / std::numbers::ln2;
  const int e0 = static_cast<int>(half);
  const double frac = std::exp2(half - e0);
  pm *= frac;
  pc *= frac;
  exp2 = e0;
  if (n == 0) {
    p_n = pm;
    p_nm1 = 0.0;
    return;
  }
  for (int k = 1; k < n; ++k) {
    const double pn = ((2.0 * k + 1.0 + alpha - x) * pc - (k + alpha) * pm) / (k + 1.0);
    pm = pc;
    pc = pn;
    const double m = std::fabs(pc);
    if (m > 0x1p+500 || (m > 0.0 && m < 0x1p-500)) {
      int e;
      std::frexp(m, &e);
      pm = std::ldexp(pm, -e);
      pc = std::ldexp(pc, -e);
      exp2 += e;
    }
  }
  p_n = pc;
  p_nm1 = pm;
}

}  // namespace

void gauss_laguerre(int n, double alpha, std::vector<double>& nodes,
                    std::vector<double>& modified_weights) {
  if (n < 1) throw ValidationError("gauss_laguerre: need at least one node");
  nodes.assign(n, 0.0);
  modified_weights.assign(n, 0.0);

  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    // Initial guesses: Stroud/Secrest style as popularized by Numerical
    // Recipes' gaulag; accurate enough that Newton converges in 3-6 steps.
    if (i == 0) {
      z = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * n + 1.8 * alpha);
    } else if (i == 1) {
      z += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * n);
    } else {
      const double ai = i - 1;
      z += ((1.0 + 2.55 * ai) / (1.9 * ai) +
            1.26 * ai * alpha / (1.0 + 3.5 * ai)) *
           (z - nodes[i - 2]) / (1.0 + 0.3 * alpha);
    }
    double p_n = 0.0, p_nm1 = 0.0;
    int e2 = 0;
    for (int it = 0; it < 100; ++it) {
      scaled_laguerre_pair(n, alpha, z, p_n, p_nm1, e2);
      // x L_n' = n L_n - (n + a) L_{n-1}; the 2^E scale cancels in the ratio.
      const double denom = n * p_n - (n + alpha) * p_nm1;
      const double step = z * p_n / denom;
      z -= step;
      if (std::fabs(step) <= 1e-14 * std::max(1.0, z)) {
        // one polishing step
        scaled_laguerre_pair(n, alpha, z, p_n, p_nm1, e2);
        z -= z * p_n / (n * p_n - (n + alpha) * p_nm1);
        break;
      }
    }
    nodes[i] = z;
    // w_i = Gamma(n+a+1) x_i / (n! (n+1)^2 [L_{n+1}^{(a)}(x_i)]^2); modified
    // weight multiplies by e^{x_i}, which exactly cancels the square of the
    // e^{-x/2} scale folded into the recurrence.
    double q_n = 0.0, q_nm1 = 0.0;
    int qe2 = 0;
    scaled_laguerre_pair(n + 1, alpha, z, q_n, q_nm1, qe2);
    const double log_s = std::log(std::fabs(q_n)) + qe2 * std::numbers::ln2;
    const double log_w = log_gamma(n + alpha + 1.0) - log_factorial(n) +
                         std::log(z) - 2.0 * std::log(n + 1.0) - 2.0 * log_s;
    modified_weights[i] = std::exp(log_w);
  }
}

PolarGrid build_polar_grid(int n_radial, int n_angular, PhaseWindow window) {
  if (n_radial < 2) throw ValidationError("build_polar_grid: n_radial must be >= 2");
  if (n_angular < 4 || n_angular % 2 != 0)
    throw ValidationError("build_polar_grid: n_angular must be >= 4 and even");

  PolarGrid grid;
  grid.window = window;

  // Even-parity rule: u = r^2, plain Laguerre. \int f(r) r dr = 1/2 \int f(sqrt(u)) du.
  std::vector<double> u, wu;
  gauss_laguerre(n_radial, 0.0, u, wu);
  grid.radial_nodes.resize(n_radial);
  grid.radial_weights.resize(n_radial);
  for (int i = 0; i < n_radial; ++i) {
    grid.radial_nodes[i] = std::sqrt(u[i]);
    grid.radial_weights[i] = 0.5 * wu[i];
  }

  // Odd-parity companion: weight u^{1/2} e^{-u} absorbs one power of r, so
  // r^{2k+1} integrands become degree-k polynomials in u.
  std::vector<double> v, wv;
  gauss_laguerre(n_radial, 0.5, v, wv);
  grid.radial_odd.nodes.resize(n_radial);
  grid.radial_odd.weights.resize(n_radial);
  for (int i = 0; i < n_radial; ++i) {
    const double r = std::sqrt(v[i]);
    grid.radial_odd.nodes[i] = r;
    grid.radial_odd.weights[i] = 0.5 * wv[i] / r;
  }

  // Midpoint angular nodes built as exact mirror pairs about theta0, so odd
  // integrands in (theta - theta0) cancel termwise.
  const double dtheta = 2.0 * std::numbers::pi / n_angular;
  grid.angular_nodes.resize(n_angular);
  for (int j = 0; j < n_angular / 2; ++j) {
    const double off = (j + 0.5) * dtheta;
    grid.angular_nodes[n_angular / 2 + j] = window.theta0 + off;
    grid.angular_nodes[n_angular / 2 - 1 - j] = window.theta0 - off;
  }
  grid.angular_weight = dtheta;
  return grid;
}

}  // namespace phasekit
