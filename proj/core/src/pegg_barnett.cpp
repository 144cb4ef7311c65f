#include "phasekit/pegg_barnett.hpp"

#include <cmath>
#include <numbers>

#include "phasekit/errors.hpp"
#include "phasekit/numeric.hpp"

namespace phasekit {

namespace {
constexpr double kPi = std::numbers::pi;

void validate(const PBConfig& cfg) {
  if (cfg.s < 1) throw ValidationError("pegg-barnett: s must be >= 1");
}
}  // namespace

PBConfig PBConfig::for_window(int s, PhaseWindow window) {
  PBConfig cfg;
  cfg.s = s;
  cfg.theta0 = window.theta0 - kPi + kPi / (s + 1.0);
  return cfg;
}

std::vector<double> PBConfig::phase_values() const {
  std::vector<double> thetas(s + 1);
  for (int m = 0; m <= s; ++m) thetas[m] = theta0 + 2.0 * kPi * m / (s + 1.0);
  return thetas;
}

double PBConfig::window_center() const { return theta0 + kPi * s / (s + 1.0); }

OperatorMatrix pb_phase_operator(const PBConfig& cfg) {
  validate(cfg);
  const int dim = cfg.s + 1;
  const std::vector<double> thetas = cfg.phase_values();

  // entry(j,k) = (1/(s+1)) sum_m theta_m e^{i theta_m (k-j)}; shared sums per
  // frequency keep the fill O(s^2).
  std::vector<std::complex<double>> t(dim);  // q = 0..s; negative q by conjugation
  detail::parallel_for(t.size(), [&](std::size_t q) {
    t[q] = detail::pairwise_sum<std::complex<double>>(0, thetas.size(), [&](std::size_t m) {
      return thetas[m] * std::polar(1.0, static_cast<double>(q) * thetas[m]);
    });
  });

  Eigen::MatrixXcd a(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) {
      const int q = k - j;
      const std::complex<double> s = q >= 0 ? t[q] : std::conj(t[-q]);
      a(j, k) = s / static_cast<double>(dim);
    }

  OperatorMatrix op;
  op.entries = std::move(a);
  op.method = OperatorMethod::PeggBarnett;
  op.meta = {{"s", double(cfg.s)},
             {"theta_first", cfg.theta0},
             {"theta0", cfg.window_center()},
             {"hermiticity_defect", hermiticity_defect(op.entries)}};
  return op;
}

std::vector<double> pb_distribution(const TruncatedState& state, const PBConfig& cfg) {
  validate(cfg);
  if (state.dim() > cfg.s + 1)
    throw DimensionError("pegg-barnett: state dimension " + std::to_string(state.dim()) +
                         " exceeds space dimension s+1 = " + std::to_string(cfg.s + 1));
  const std::vector<double> thetas = cfg.phase_values();
  std::vector<double> p(cfg.s + 1);
  detail::parallel_for(p.size(), [&](std::size_t m) {
    std::complex<double> overlap = 0.0;
    const std::complex<double> step = std::polar(1.0, -thetas[m]);
    std::complex<double> w = 1.0;
    for (int n = 0; n < state.dim(); ++n) {
      overlap += state.amplitudes[n] * w;
      w *= step;
    }
    p[m] = std::norm(overlap) / (cfg.s + 1.0);
  });
  return p;
}

MomentReport pb_moments(const TruncatedState& state, const PBConfig& cfg, int k_max) {
  if (k_max < 1 || k_max > 4) throw ValidationError("pb_moments: k_max must be in [1,4]");
  const std::vector<double> p = pb_distribution(state, cfg);
  const std::vector<double> thetas = cfg.phase_values();
  const double center = cfg.window_center();

  auto centered_moment = [&](int q) {
    return detail::pairwise_sum<double>(0, p.size(), [&](std::size_t m) {
      return p[m] * std::pow(thetas[m] - center, q);
    });
  };
  const double mass = detail::pairwise_sum<double>(0, p.size(), [&](std::size_t m) {
    return p[m];
  });
  const double m1 = centered_moment(1);
  const double m2 = centered_moment(2);

  MomentReport report;
  report.method = "pegg-barnett";
  report.norm_defect = std::abs(1.0 - mass);
  report.mean = center + m1;
  report.second_moment = m2 + 2.0 * center * m1 + center * center;
  report.variance = m2 - m1 * m1;
  report.meta["pb_s"] = double(cfg.s);
  report.meta["theta0"] = center;
  if (k_max >= 3) report.meta["third_moment_centered"] = centered_moment(3);
  if (k_max >= 4) report.meta["fourth_moment_centered"] = centered_moment(4);
  return report;
}

}  // namespace phasekit
