#include <doctest.h>

#include <cmath>
#include <numbers>

#include "phasekit/errors.hpp"
#include "phasekit/polar_grid.hpp"
#include "phasekit/special_functions.hpp"

using namespace phasekit;
namespace {
constexpr double kPi = std::numbers::pi;

// \int_0^inf e^{-r^2} r^p . r dr through the grid's parity-matched rule
double radial_integral(const PolarGrid& g, int p) {
  const auto& nodes = (p % 2 == 0) ? g.radial_nodes : g.radial_odd.nodes;
  const auto& weights = (p % 2 == 0) ? g.radial_weights : g.radial_odd.weights;
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    acc += weights[i] * std::exp(p * std::log(nodes[i]) - nodes[i] * nodes[i]);
  return acc;
}
}  // namespace

TEST_CASE("radial rule integrates e^{-r^2} r^{2k+1} exactly for k < n_radial") {
  const PolarGrid g = build_polar_grid(32, 8, {});
  for (int k = 0; k < 32; ++k) {
    // \int e^{-r^2} r^{2k+1} dr = k!/2
    const double want = 0.5 * std::exp(log_factorial(k));
    CHECK(std::abs(radial_integral(g, 2 * k) - want) <= 1e-12 * want);
  }
}

TEST_CASE("odd-parity companion integrates e^{-r^2} r^{2k+2} exactly") {
  const PolarGrid g = build_polar_grid(32, 8, {});
  for (int k = 0; k < 32; ++k) {
    // \int e^{-r^2} r^{2k+2} dr = Gamma(k + 3/2)/2
    const double want = 0.5 * std::exp(log_gamma(k + 1.5));
    CHECK(std::abs(radial_integral(g, 2 * k + 1) - want) <= 1e-12 * want);
  }
}

TEST_CASE("radial exactness holds at the Gauss degree edge") {
  // u-degree 2n-1 = 63 for n = 32: the last exactly integrated power
  const PolarGrid g32 = build_polar_grid(32, 8, {});
  const double want_edge = 0.5 * std::exp(log_factorial(63));
  CHECK(std::abs(radial_integral(g32, 126) - want_edge) <= 1e-11 * want_edge);

  // production size; p capped where the monomial integral still fits a double
  const PolarGrid g = build_polar_grid(128, 8, {});
  const double want = 0.5 * std::exp(log_factorial(165));
  CHECK(std::abs(radial_integral(g, 330) - want) <= 1e-11 * want);
  const double want_odd = 0.5 * std::exp(log_gamma(165 + 1.5));
  CHECK(std::abs(radial_integral(g, 331) - want_odd) <= 1e-11 * want_odd);
}

TEST_CASE("gauss_laguerre survives node counts where e^{-x/2} underflows") {
  std::vector<double> x, w;
  gauss_laguerre(2048, 0.0, x, w);  // largest node ~8120, e^{-x/2} ~ 1e-1764
  REQUIRE(x.size() == 2048);
  CHECK(std::isfinite(w.front()));
  CHECK(std::isfinite(w.back()));
  CHECK(w.back() > 0.0);
  // Gamma(1) = 1 via the modified weights (node precision drifts ~1e-11 here)
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * std::exp(-x[i]);
  CHECK(acc == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("angular nodes: spacing, window, exact mirror symmetry, antipodes") {
  const PhaseWindow win{0.3};
  const PolarGrid g = build_polar_grid(4, 8, win);
  REQUIRE(g.n_angular() == 8);
  CHECK(g.angular_weight == doctest::Approx(2.0 * kPi / 8));
  for (int j = 0; j + 1 < 8; ++j)
    CHECK(g.angular_nodes[j + 1] - g.angular_nodes[j] ==
          doctest::Approx(2.0 * kPi / 8).epsilon(1e-14));
  CHECK(g.angular_nodes.front() > win.lo());
  CHECK(g.angular_nodes.back() <= win.hi());
  // mirror pairs cancel odd integrands; exact at theta0 = 0, one rounding of
  // theta0 + off away from it otherwise
  for (int j = 0; j < 4; ++j)
    CHECK(std::abs((g.angular_nodes[j] - win.theta0) +
                   (g.angular_nodes[7 - j] - win.theta0)) <= 2e-15);
  const PolarGrid centered = build_polar_grid(4, 8, PhaseWindow{0.0});
  for (int j = 0; j < 4; ++j)
    CHECK(centered.angular_nodes[j] == -centered.angular_nodes[7 - j]);
  for (std::size_t j = 0; j < 8; ++j) {
    const double d = g.angular_nodes[g.antipode(j)] - g.angular_nodes[j];
    CHECK(std::abs(std::abs(d) - kPi) <= 1e-13);
  }
}

TEST_CASE("grid example: 2 radial and 4 angular nodes at pi/2 spacing") {
  const PolarGrid g = build_polar_grid(2, 4, {});
  REQUIRE(g.n_radial() == 2);
  REQUIRE(g.n_angular() == 4);
  CHECK(g.angular_weight == doctest::Approx(kPi / 2));
  // radial rule applied to \int e^{-r^2} r^3 dr -> Gamma(2)/2 = 1/2
  CHECK(radial_integral(g, 2) == doctest::Approx(0.5).epsilon(1e-13));
  // and to \int e^{-r^2} r dr -> Gamma(1)/2 = 1/2
  CHECK(radial_integral(g, 0) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(build_polar_grid(1, 8, {}), ValidationError);
  CHECK_THROWS_AS(build_polar_grid(4, 2, {}), ValidationError);
  CHECK_THROWS_AS(build_polar_grid(4, 7, {}), ValidationError);
}
