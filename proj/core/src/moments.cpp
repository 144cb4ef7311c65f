#include "phasekit/moments.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "phasekit/errors.hpp"
#include "phasekit/numeric.hpp"

namespace phasekit {

std::complex<double> angular_moment_integral(int p, int k) {
  using namespace std::complex_literals;
  constexpr double pi = std::numbers::pi;
  if (p < 0 || p > 4) throw ValidationError("angular_moment_integral: p must be in [0,4]");
  if (k == 0) {
    switch (p) {
      case 0: return 2.0 * pi;
      case 1: return 0.0;
      case 2: return 2.0 * pi * pi * pi / 3.0;
      case 3: return 0.0;
      case 4: return 2.0 * std::pow(pi, 5) / 5.0;
    }
  }
  const double s = (k % 2 == 0) ? 1.0 : -1.0;  // (-1)^k
  const double kd = k;
  switch (p) {
    case 0: return 0.0;
    case 1: return -2.0 * pi * s / kd * 1i;
    case 2: return 4.0 * pi * s / (kd * kd);
    case 3: return (12.0 * pi / (kd * kd * kd) - 2.0 * pi * pi * pi / kd) * s * 1i;
    case 4: return s * (8.0 * pi * pi * pi / (kd * kd) - 48.0 * pi / (kd * kd * kd * kd));
  }
  return 0.0;
}

MomentReport moments_from_marginal(const PhaseDistribution& dist, int k_max) {
  if (k_max < 1 || k_max > 4)
    throw ValidationError("moments_from_marginal: k_max must be in [1,4]");
  if (dist.norm_defect > 1e-4)
    throw ConvergenceError("moments_from_marginal: marginal norm defect " +
                           std::to_string(dist.norm_defect) +
                           " exceeds 1e-4; enlarge the grid or the state dimension");

  const std::size_t m = dist.values.size();
  const double theta0 = dist.window.theta0;

  // Exact Fourier coefficients of the band-limited marginal.
  const std::size_t kmax_mode = m / 2 - 1;
  std::vector<std::complex<double>> coeff(kmax_mode + 1);
  detail::parallel_for(kmax_mode + 1, [&](std::size_t k) {
    coeff[k] = detail::pairwise_sum<std::complex<double>>(0, m, [&](std::size_t j) {
      const double u = dist.thetas[j] - theta0;
      return dist.values[j] * std::polar(1.0, -static_cast<double>(k) * u);
    });
    coeff[k] /= static_cast<double>(m);
  });

  // <u^p> = sum_k c_k I_p(k), folded to k >= 0 using c_{-k} = conj(c_k).
  auto centered_moment = [&](int p) {
    double acc = (coeff[0] * angular_moment_integral(p, 0)).real();
    for (std::size_t k = 1; k <= kmax_mode; ++k)
      acc += 2.0 * (coeff[k] * angular_moment_integral(p, static_cast<int>(k))).real();
    return acc;
  };

  const double m1 = centered_moment(1);
  const double m2 = centered_moment(2);

  MomentReport report;
  report.method = "q-integral";
  report.norm_defect = dist.norm_defect;
  report.mean = theta0 + m1;
  report.second_moment = m2 + 2.0 * theta0 * m1 + theta0 * theta0;
  report.variance = m2 - m1 * m1;
  report.meta["theta0"] = theta0;
  report.meta["n_angular"] = static_cast<double>(m);
  report.meta["min_value_preclamp"] = dist.min_value_preclamp;
  if (k_max >= 3) report.meta["third_moment_centered"] = centered_moment(3);
  if (k_max >= 4) report.meta["fourth_moment_centered"] = centered_moment(4);
  return report;
}

}  // namespace phasekit
