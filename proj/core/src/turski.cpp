#include "phasekit/turski.hpp"

#include <cmath>
#include <numbers>

#include "phasekit/errors.hpp"
#include "phasekit/numeric.hpp"
#include "phasekit/special_functions.hpp"

namespace phasekit {

namespace {

constexpr double kPi = std::numbers::pi;

// Gamma((m+n)/2 + 1) / sqrt(m! n!) without overflow (dims beyond 170 would
// overflow the naive ratio long before the result does).
double gamma_ratio(int m, int n) {
  return std::exp(log_gamma(0.5 * (m + n) + 1.0) -
                  0.5 * (log_factorial(m) + log_factorial(n)));
}

// Radial factors R(q) = sum_i w_i r_i^q e^{-r_i^2} = Gamma(q/2+1)/2 on an
// exact grid; odd q uses the odd-parity companion rule.
std::vector<double> radial_factors(const PolarGrid& grid, int qmax) {
  std::vector<double> out(qmax + 1);
  auto sum_rule = [](const std::vector<double>& r, const std::vector<double>& w, int q) {
    return detail::pairwise_sum<double>(0, r.size(), [&](std::size_t i) {
      const double lr = std::log(r[i]);
      return w[i] * std::exp(q * lr - r[i] * r[i]);
    });
  };
  for (int q = 0; q <= qmax; ++q) {
    out[q] = (q % 2 == 0)
                 ? sum_rule(grid.radial_nodes, grid.radial_weights, q)
                 : sum_rule(grid.radial_odd.nodes, grid.radial_odd.weights, q);
  }
  return out;
}

// Angular sums S(k) = sum_j f(theta_j) e^{i k theta_j} dtheta for
// k = 0..kmax; negative k by conjugation (f is real for the theta^p family).
template <typename F>
std::vector<std::complex<double>> angular_sums(const PolarGrid& grid, int kmax, F&& f) {
  std::vector<std::complex<double>> s(kmax + 1);
  const std::size_t m = grid.angular_nodes.size();
  detail::parallel_for(static_cast<std::size_t>(kmax) + 1, [&](std::size_t k) {
    s[k] = grid.angular_weight *
           detail::pairwise_sum<std::complex<double>>(0, m, [&](std::size_t j) {
             const double theta = grid.angular_nodes[j];
             return f(theta) * std::polar(1.0, static_cast<double>(k) * theta);
           });
  });
  return s;
}

OperatorMatrix assemble_from_sums(int dim, const PolarGrid& grid,
                                  const std::vector<std::complex<double>>& s_pos,
                                  const std::vector<double>& radial,
                                  OperatorMethod method) {
  Eigen::MatrixXcd a(dim, dim);
  for (int mm = 0; mm < dim; ++mm) {
    for (int nn = 0; nn < dim; ++nn) {
      const int k = nn - mm;
      const std::complex<double> s = k >= 0 ? s_pos[k] : std::conj(s_pos[-k]);
      const double norm = std::exp(-0.5 * (log_factorial(mm) + log_factorial(nn)));
      a(mm, nn) = s * radial[mm + nn] * norm / kPi;
    }
  }
  const double defect = hermiticity_defect(a);
  if (defect > 1e-6) {
    throw ConvergenceError(
        "quadrature phase-operator construction: pre-symmetrization defect " +
        std::to_string(defect) + " exceeds 1e-6; use a larger grid");
  }
  OperatorMatrix op;
  op.entries = 0.5 * (a + a.adjoint().eval());
  op.method = method;
  op.meta = {{"dim", double(dim)},
             {"n_radial", double(grid.n_radial())},
             {"n_angular", double(grid.n_angular())},
             {"theta0", grid.window.theta0},
             {"hermiticity_defect_pre", defect}};
  return op;
}

OperatorMatrix build_moment_operator_analytic(int p, int dim, PhaseWindow window) {
  if (dim < 1) throw ValidationError("moment operator: dim must be >= 1");
  const double t0 = window.theta0;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  const double diag = (p == 1) ? t0 : t0 * t0 + kPi * kPi / 3.0;
  for (int n = 0; n < dim; ++n) a(n, n) = diag;
  for (int mm = 0; mm < dim; ++mm) {
    for (int nn = mm + 1; nn < dim; ++nn) {
      const int k = nn - mm;
      // window shift: int theta^p e^{ik theta} over (t0-pi, t0+pi]
      //   = e^{ik t0} * sum_q binom(p,q) t0^{p-q} I_q(k)
      std::complex<double> w = angular_moment_integral(p, k);
      if (p == 2) w += 2.0 * t0 * angular_moment_integral(1, k);
      w *= std::polar(1.0, k * t0);
      a(mm, nn) = w * gamma_ratio(mm, nn) / (2.0 * kPi);
      a(nn, mm) = std::conj(a(mm, nn));
    }
  }
  OperatorMatrix op;
  op.entries = std::move(a);
  op.method = (p == 1) ? OperatorMethod::TurskiAnalytic : OperatorMethod::MomentK;
  op.meta = {{"dim", double(dim)},
             {"k", double(p)},
             {"theta0", t0},
             {"hermiticity_defect", hermiticity_defect(op.entries)}};
  return op;
}

}  // namespace

PolarGrid default_marginal_grid(int dim, PhaseWindow window) {
  const int n_radial = std::max(128, dim / 2 + 8);
  const int n_angular = std::max(512, 8 * dim);
  return build_polar_grid(n_radial, n_angular, window);
}

PolarGrid default_operator_grid(int dim, PhaseWindow window) {
  const int n_radial = std::max(128, dim / 2 + 8);
  return build_polar_grid(n_radial, 1 << 19, window);
}

OperatorMatrix build_phase_operator_analytic(int dim, PhaseWindow window) {
  return build_moment_operator_analytic(1, dim, window);
}

OperatorMatrix build_phase_operator_quadrature(int dim, const PolarGrid& grid) {
  if (dim < 1) throw ValidationError("phase operator: dim must be >= 1");
  const auto radial = radial_factors(grid, 2 * (dim - 1));
  const auto s = angular_sums(grid, dim - 1, [](double theta) { return theta; });
  auto op = assemble_from_sums(dim, grid, s, radial, OperatorMethod::TurskiQuadrature);
  op.meta["k"] = 1.0;
  return op;
}

OperatorMatrix build_moment_operator(int k, int dim, PhaseWindow window) {
  if (k != 1 && k != 2) throw ValidationError("moment operator: k must be 1 or 2");
  auto op = build_moment_operator_analytic(k, dim, window);
  op.method = OperatorMethod::MomentK;
  return op;
}

OperatorMatrix build_moment_operator(int k, int dim, const PolarGrid& grid) {
  if (k != 1 && k != 2) throw ValidationError("moment operator: k must be 1 or 2");
  if (dim < 1) throw ValidationError("moment operator: dim must be >= 1");
  const auto radial = radial_factors(grid, 2 * (dim - 1));
  const auto s = angular_sums(grid, dim - 1, [k](double theta) {
    return k == 1 ? theta : theta * theta;
  });
  auto op = assemble_from_sums(dim, grid, s, radial, OperatorMethod::MomentK);
  op.meta["k"] = double(k);
  return op;
}

OperatorMatrix build_exp_phase_operator(int sign, int dim) {
  if (sign != 1 && sign != -1) throw ValidationError("exp-phase operator: sign must be +-1");
  if (dim < 1) throw ValidationError("exp-phase operator: dim must be >= 1");
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n + 1 < dim; ++n) {
    const double v = std::exp(log_gamma(n + 1.5) -
                              0.5 * (log_factorial(n) + log_factorial(n + 1)));
    if (sign > 0)
      a(n + 1, n) = v;
    else
      a(n, n + 1) = v;
  }
  OperatorMatrix op;
  op.entries = std::move(a);
  op.method = sign > 0 ? OperatorMethod::ExpPhasePlus : OperatorMethod::ExpPhaseMinus;
  op.meta = {{"dim", double(dim)}, {"sign", double(sign)}};
  return op;
}

OperatorMatrix build_exp_phase_operator(int sign, int dim, const PolarGrid& grid) {
  if (sign != 1 && sign != -1) throw ValidationError("exp-phase operator: sign must be +-1");
  if (dim < 1) throw ValidationError("exp-phase operator: dim must be >= 1");
  const auto radial = radial_factors(grid, 2 * (dim - 1));
  // S(k) = sum_j e^{i sign theta} e^{i k theta} dtheta: need both signs of k.
  const std::size_t m = grid.angular_nodes.size();
  std::vector<std::complex<double>> s(2 * dim - 1);
  detail::parallel_for(s.size(), [&](std::size_t idx) {
    const int k = static_cast<int>(idx) - (dim - 1);
    s[idx] = grid.angular_weight *
             detail::pairwise_sum<std::complex<double>>(0, m, [&](std::size_t j) {
               return std::polar(1.0, (sign + k) * grid.angular_nodes[j]);
             });
  });
  Eigen::MatrixXcd a(dim, dim);
  for (int mm = 0; mm < dim; ++mm)
    for (int nn = 0; nn < dim; ++nn) {
      const double norm = std::exp(-0.5 * (log_factorial(mm) + log_factorial(nn)));
      a(mm, nn) = s[(nn - mm) + (dim - 1)] * radial[mm + nn] * norm / kPi;
    }
  OperatorMatrix op;
  op.entries = std::move(a);
  op.method = sign > 0 ? OperatorMethod::ExpPhasePlus : OperatorMethod::ExpPhaseMinus;
  op.meta = {{"dim", double(dim)},
             {"sign", double(sign)},
             {"n_radial", double(grid.n_radial())},
             {"n_angular", double(grid.n_angular())},
             {"theta0", grid.window.theta0}};
  return op;
}

UnitarityReport unitarity_defect(int dim, const OperatorMatrix& exp_plus) {
  if (dim < 2) throw ValidationError("unitarity_defect: dim must be >= 2");
  if (exp_plus.dim() != dim) throw DimensionError("unitarity_defect: operator dim mismatch");
  const Eigen::MatrixXcd gram = exp_plus.entries.adjoint() * exp_plus.entries;
  UnitarityReport report;
  report.construction = to_string(exp_plus.method);
  report.diagonal.resize(dim);
  for (int n = 0; n < dim; ++n) report.diagonal[n] = gram(n, n).real();
  double worst = 0.0;
  for (int mm = 0; mm + 1 < dim; ++mm)
    for (int nn = 0; nn + 1 < dim; ++nn) {
      const double target = (mm == nn) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(gram(mm, nn) - target));
    }
  report.max_defect_inner_block = worst;
  return report;
}

UnitarityReport unitarity_defect(int dim) {
  return unitarity_defect(dim, build_exp_phase_operator(+1, dim));
}

MomentReport phase_moments_q(const TruncatedState& state, const PolarGrid& grid,
                             int k_max) {
  const PhaseDistribution dist = phase_marginal(state, grid);
  MomentReport report = moments_from_marginal(dist, k_max);
  report.method = "q-integral";
  report.meta["n_radial"] = double(grid.n_radial());
  return report;
}

MomentReport operator_expectation_moments(const TruncatedState& state, int dim,
                                          int k_max, PhaseWindow window) {
  if (k_max < 1 || k_max > 2)
    throw ValidationError("operator-expectation moments support k_max in [1,2]");
  if (state.dim() > dim)
    throw DimensionError("state dimension " + std::to_string(state.dim()) +
                         " exceeds operator dimension " + std::to_string(dim));
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  psi.head(state.dim()) = state.amplitudes;

  const OperatorMatrix phi1 = build_moment_operator(1, dim, window);
  const OperatorMatrix phi2 = build_moment_operator(2, dim, window);
  const double mean = (psi.adjoint() * (phi1.entries * psi))(0).real();
  const double second = (psi.adjoint() * (phi2.entries * psi))(0).real();

  MomentReport report;
  report.method = "operator-expectation";
  report.mean = mean;
  report.second_moment = second;
  report.variance = second - mean * mean;
  report.norm_defect = std::abs(1.0 - psi.squaredNorm());
  report.meta["dim"] = double(dim);
  report.meta["theta0"] = window.theta0;
  // diagnostic: the matrix square of phi^(1) is not the k=2 moment operator
  report.meta["phi1_sq_second_moment"] = (phi1.entries * psi).squaredNorm();
  return report;
}

AcidTestResult acid_test(int n, int dim, const PolarGrid& grid) {
  const TruncatedState state = make_fock_state(n, dim);
  AcidTestResult result;
  result.report = phase_moments_q(state, grid, 2);
  result.variance = result.report.variance;
  result.pass = std::abs(result.variance - kPi * kPi / 3.0) <= 1e-6;
  return result;
}

OperatorMatrix evolve_phase_operator(const OperatorMatrix& op, const EvolutionConfig& cfg) {
  if (cfg.omega <= 0.0) throw ValidationError("evolution: omega must be positive");
  OperatorMatrix out = op;
  const int dim = op.dim();
  for (int mm = 0; mm < dim; ++mm)
    for (int nn = 0; nn < dim; ++nn)
      out.entries(mm, nn) *= std::polar(1.0, cfg.omega * (mm - nn) * cfg.t);
  out.meta["omega"] = cfg.omega;
  out.meta["t"] = cfg.t;
  return out;
}

}  // namespace phasekit
