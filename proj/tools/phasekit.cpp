// phasekit command-line front end: acid-test, moments, operator, unitarity,
// evolve, compare. Reports are byte-stable for identical inputs; every run
// writes one manifest recording the resolved parameters.

#include <chrono>
#include <complex>
#include <ctime>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "phasekit/errors.hpp"
#include "phasekit/io.hpp"
#include "phasekit/logseries.hpp"
#include "phasekit/numeric.hpp"
#include "phasekit/pegg_barnett.hpp"
#include "phasekit/state_spec.hpp"
#include "phasekit/turski.hpp"
#include "phasekit/version.hpp"

namespace {

using phasekit::format_g;
using phasekit::round_sig;
using ordered_json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

struct CommonOpts {
  explicit CommonOpts(std::string default_format = "json")
      : format(std::move(default_format)) {}

  int radial = 0;        // 0 = module default
  int angular = 0;
  double theta0 = 0.0;
  std::string format;
  std::string out = "-";
  std::string manifest;  // empty = derive from out
  int threads = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--radial", radial, "radial nodes per parity family (0 = default)");
    cmd->add_option("--angular", angular, "angular nodes, even (0 = default)");
    cmd->add_option("--theta0", theta0, "phase window center in radians");
    cmd->add_option("--format", format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out, "output path ('-' = stdout)");
    cmd->add_option("--manifest", manifest, "manifest path");
    cmd->add_option("--threads", threads, "worker threads (results are identical for any count)");
  }
};

struct ManifestWriter {
  ordered_json resolved = ordered_json::object();
  std::vector<std::string> outputs;
  std::string command;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void write(const CommonOpts& opts) {
    ordered_json j;
    j["command"] = command;
    j["version"] = phasekit::kVersion;
    j["resolved"] = resolved;
    j["outputs"] = outputs;
    const double wall = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start).count();
    j["timing"] = ordered_json{{"wall_seconds", wall},
                               {"unix_time", static_cast<long>(std::time(nullptr))}};
    std::string path = opts.manifest;
    if (path.empty())
      path = opts.out == "-" ? "phasekit.manifest.json" : opts.out + ".manifest.json";
    phasekit::write_text_file(path, j.dump(2) + "\n");
  }
};

phasekit::PolarGrid make_grid(const CommonOpts& opts, int dim, bool operator_grid) {
  const int nr = opts.radial > 0 ? opts.radial : std::max(128, dim / 2 + 8);
  int na = opts.angular;
  if (na <= 0) na = operator_grid ? (1 << 19) : std::max(512, 8 * dim);
  return phasekit::build_polar_grid(nr, na, phasekit::PhaseWindow{opts.theta0});
}

void emit(const CommonOpts& opts, ManifestWriter& mf, const std::string& text) {
  phasekit::write_text_file(opts.out, text);
  mf.outputs.push_back(opts.out);
}

ordered_json report_json(const phasekit::MomentReport& report) {
  return ordered_json::parse(phasekit::moment_report_json(report));
}

phasekit::MomentReport run_method(const std::string& method,
                                  const phasekit::TruncatedState& state,
                                  const CommonOpts& opts, int pb_s, int kmax,
                                  phasekit::PhaseDistribution* marginal_out = nullptr) {
  const phasekit::PhaseWindow window{opts.theta0};
  if (method == "q") {
    const phasekit::PolarGrid grid = make_grid(opts, state.dim(), false);
    if (marginal_out) *marginal_out = phasekit::phase_marginal(state, grid);
    return phasekit::phase_moments_q(state, grid, kmax);
  }
  if (method == "pb") {
    const auto cfg = phasekit::PBConfig::for_window(pb_s, window);
    if (marginal_out) {
      const auto p = phasekit::pb_distribution(state, cfg);
      marginal_out->thetas = cfg.phase_values();
      marginal_out->values.resize(p.size());
      const double dtheta = 2.0 * kPi / (pb_s + 1);
      for (std::size_t m = 0; m < p.size(); ++m)
        marginal_out->values[m] = p[m] / dtheta;  // density, like the q marginal
      marginal_out->window = window;
    }
    return phasekit::pb_moments(state, cfg, kmax);
  }
  if (method == "operator") {
    if (marginal_out)
      throw phasekit::ValidationError("csv output needs a sampled distribution; use method q or pb");
    return phasekit::operator_expectation_moments(state, state.dim(),
                                                  std::min(kmax, 2), window);
  }
  throw phasekit::ValidationError("unknown method '" + method + "' (expected q|pb|operator)");
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phasekit: phase operators and phase statistics on truncated Fock spaces"};
  app.require_subcommand(1);

  ManifestWriter mf;
  mf.command = join_args(argc, argv);
  int exit_code = 0;

  // ---- acid-test
  auto* acid = app.add_subcommand("acid-test", "phase variance of a number state vs pi^2/3");
  CommonOpts acid_opts{"text"};
  int acid_n = 0, acid_dim = 0;
  acid->add_option("--n", acid_n, "Fock index")->required();
  acid->add_option("--dim", acid_dim, "truncation dimension")->required();
  acid_opts.attach(acid);
  acid->callback([&] {
    phasekit::set_thread_count(acid_opts.threads);
    const auto grid = make_grid(acid_opts, acid_dim, false);
    const auto result = phasekit::acid_test(acid_n, acid_dim, grid);
    mf.resolved = {{"n", acid_n}, {"dim", acid_dim},
                   {"n_radial", grid.n_radial()}, {"n_angular", grid.n_angular()},
                   {"theta0", acid_opts.theta0}, {"threads", acid_opts.threads}};
    if (acid_opts.format == "json") {
      ordered_json j{{"n", acid_n}, {"dim", acid_dim},
                     {"variance", round_sig(result.variance)},
                     {"target", round_sig(kPi * kPi / 3.0)},
                     {"pass", result.pass},
                     {"report", report_json(result.report)}};
      emit(acid_opts, mf, j.dump(2) + "\n");
    } else {
      emit(acid_opts, mf,
           "variance " + format_g(result.variance) + "\npass " +
               (result.pass ? "true" : "false") + "\n");
    }
    mf.write(acid_opts);
    if (!result.pass) exit_code = 2;
  });

  // ---- moments
  auto* mom = app.add_subcommand("moments", "phase moments of a state");
  CommonOpts mom_opts;
  std::string mom_state, mom_method = "q";
  int mom_dim = 0, mom_kmax = 2, mom_pb_s = 255;
  bool mom_force = false;
  mom->add_option("--state", mom_state, "state spec (fock:n, coherent:a, sup:..., file:path)")
      ->required();
  mom->add_option("--method", mom_method, "q|pb|operator");
  mom->add_option("--kmax", mom_kmax, "highest moment order (<=4; <=2 for operator)");
  mom->add_option("--dim", mom_dim, "truncation dimension (0 = auto)");
  mom->add_option("--pb-s", mom_pb_s, "Pegg-Barnett s (space dimension s+1)");
  mom->add_flag("--force", mom_force, "override the coherent-state truncation check");
  mom_opts.attach(mom);
  mom->callback([&] {
    phasekit::set_thread_count(mom_opts.threads);
    const auto spec = phasekit::parse_state_spec(mom_state);
    const auto state = phasekit::resolve_state(spec, mom_dim, mom_force);
    phasekit::PhaseDistribution dist;
    const bool want_csv = mom_opts.format == "csv";
    const auto report = run_method(mom_method, state, mom_opts, mom_pb_s, mom_kmax,
                                   want_csv ? &dist : nullptr);
    mf.resolved = {{"state", phasekit::format_state_spec(spec)},
                   {"dim", state.dim()}, {"method", mom_method},
                   {"kmax", mom_kmax}, {"pb_s", mom_pb_s},
                   {"theta0", mom_opts.theta0}, {"threads", mom_opts.threads}};
    if (want_csv)
      emit(mom_opts, mf, phasekit::distribution_csv(dist));
    else
      emit(mom_opts, mf, phasekit::moment_report_json(report));
    mf.write(mom_opts);
  });

  // ---- operator
  auto* oper = app.add_subcommand("operator", "build and export an operator matrix");
  CommonOpts op_opts;
  std::string op_method;
  int op_dim = 0, op_series_order = 64, op_pb_s = 0, op_dim_work = 0;
  double op_chi = 0.0;
  oper->add_option("--method", op_method,
                   "turski-analytic|turski-quadrature|log-series|pegg-barnett")
      ->required()
      ->check(CLI::IsMember({"turski-analytic", "turski-quadrature", "log-series",
                             "pegg-barnett"}));
  oper->add_option("--dim", op_dim, "operator dimension")->required();
  oper->add_option("--chi", op_chi, "log-series displacement parameter (0 = default)");
  oper->add_option("--series-order", op_series_order, "log-series order K");
  oper->add_option("--dim-work", op_dim_work, "log-series working dimension (0 = 8*dim)");
  oper->add_option("--pb-s", op_pb_s, "Pegg-Barnett s (default dim-1)");
  op_opts.attach(oper);
  oper->callback([&] {
    phasekit::set_thread_count(op_opts.threads);
    const phasekit::PhaseWindow window{op_opts.theta0};
    phasekit::OperatorMatrix op;
    if (op_method == "turski-analytic") {
      op = phasekit::build_phase_operator_analytic(op_dim, window);
    } else if (op_method == "turski-quadrature") {
      op = phasekit::build_phase_operator_quadrature(op_dim, make_grid(op_opts, op_dim, true));
    } else if (op_method == "log-series") {
      phasekit::LogSeriesConfig cfg = phasekit::LogSeriesConfig::defaults(op_dim);
      if (op_dim_work > 0) cfg.dim_work = op_dim_work;
      if (op_chi > 0.0) cfg.chi = op_chi;
      cfg.series_order = op_series_order;
      op = phasekit::build_log_series_operator(cfg);
    } else {
      const int s = op_pb_s > 0 ? op_pb_s : op_dim - 1;
      op = phasekit::pb_phase_operator(phasekit::PBConfig::for_window(s, window));
    }
    phasekit::require_finite(op, "operator export");
    mf.resolved = {{"method", op_method}, {"dim", op.dim()}, {"theta0", op_opts.theta0},
                   {"threads", op_opts.threads}};
    for (const auto& [k, v] : op.meta) mf.resolved[k] = round_sig(v);
    phasekit::write_operator_csv(op, op_opts.out);
    mf.outputs.push_back(op_opts.out);
    if (op_opts.out != "-") mf.outputs.push_back(op_opts.out + ".meta.json");
    mf.write(op_opts);
  });

  // ---- unitarity
  auto* uni = app.add_subcommand("unitarity", "measured deviation of E^dag E from identity");
  CommonOpts uni_opts;
  int uni_dim = 0;
  uni->add_option("--dim", uni_dim, "truncation dimension")->required();
  uni_opts.attach(uni);
  uni->callback([&] {
    phasekit::set_thread_count(uni_opts.threads);
    const auto report = phasekit::unitarity_defect(uni_dim);
    mf.resolved = {{"dim", uni_dim}, {"threads", uni_opts.threads}};
    emit(uni_opts, mf, phasekit::unitarity_report_json(report));
    mf.write(uni_opts);
  });

  // ---- evolve
  auto* evo = app.add_subcommand("evolve", "free evolution of the phase operator");
  CommonOpts evo_opts;
  int evo_dim = 0;
  double evo_omega = 1.0, evo_t = 0.0;
  bool evo_check = false;
  evo->add_option("--dim", evo_dim, "operator dimension")->required();
  evo->add_option("--omega", evo_omega, "oscillator frequency");
  evo->add_option("--t", evo_t, "time");
  evo->add_flag("--check", evo_check, "verify the rotation law and the commutator derivative");
  evo_opts.attach(evo);
  evo->callback([&] {
    phasekit::set_thread_count(evo_opts.threads);
    const phasekit::PhaseWindow window{evo_opts.theta0};
    const auto phi = phasekit::build_phase_operator_analytic(evo_dim, window);
    const phasekit::EvolutionConfig cfg{evo_omega, evo_t};
    const auto evolved = phasekit::evolve_phase_operator(phi, cfg);
    mf.resolved = {{"dim", evo_dim}, {"omega", evo_omega}, {"t", evo_t},
                   {"theta0", evo_opts.theta0}, {"threads", evo_opts.threads}};
    if (evo_check) {
      double law_dev = 0.0, period_dev = 0.0, fd_dev = 0.0;
      const auto back = phasekit::evolve_phase_operator(
          phi, {evo_omega, 2.0 * kPi / evo_omega});
      const double h = 1e-6;
      const auto plus = phasekit::evolve_phase_operator(phi, {evo_omega, h});
      const auto minus = phasekit::evolve_phase_operator(phi, {evo_omega, -h});
      for (int m = 0; m < evo_dim; ++m)
        for (int n = 0; n < evo_dim; ++n) {
          const std::complex<double> law =
              std::polar(1.0, evo_omega * (m - n) * evo_t) * phi.entries(m, n);
          law_dev = std::max(law_dev, std::abs(evolved.entries(m, n) - law));
          period_dev = std::max(period_dev, std::abs(back.entries(m, n) - phi.entries(m, n)));
          const std::complex<double> fd =
              (plus.entries(m, n) - minus.entries(m, n)) / (2.0 * h);
          const std::complex<double> commutator =
              std::complex<double>(0.0, evo_omega * (m - n)) * phi.entries(m, n);
          fd_dev = std::max(fd_dev, std::abs(fd - commutator));
        }
      const bool ok = law_dev <= 1e-12 && period_dev <= 1e-12 && fd_dev <= 1e-6;
      ordered_json j{{"omega", evo_omega}, {"t", evo_t},
                     {"rotation_law_max_dev", round_sig(law_dev)},
                     {"period_return_max_dev", round_sig(period_dev)},
                     {"fd_commutator_max_dev", round_sig(fd_dev)},
                     {"pass", ok}};
      emit(evo_opts, mf, j.dump(2) + "\n");
      if (!ok) exit_code = 2;
    } else {
      phasekit::write_operator_csv(evolved, evo_opts.out);
      mf.outputs.push_back(evo_opts.out);
      if (evo_opts.out != "-") mf.outputs.push_back(evo_opts.out + ".meta.json");
    }
    mf.write(evo_opts);
  });

  // ---- compare
  auto* cmp = app.add_subcommand("compare", "phase moments of one state under several methods");
  CommonOpts cmp_opts;
  std::string cmp_state, cmp_methods = "q,pb";
  int cmp_dim = 0, cmp_kmax = 2, cmp_pb_s = 255;
  bool cmp_force = false;
  cmp->add_option("--state", cmp_state, "state spec")->required();
  cmp->add_option("--methods", cmp_methods, "comma list from q,pb,operator");
  cmp->add_option("--kmax", cmp_kmax, "highest moment order");
  cmp->add_option("--dim", cmp_dim, "truncation dimension (0 = auto)");
  cmp->add_option("--pb-s", cmp_pb_s, "Pegg-Barnett s");
  cmp->add_flag("--force", cmp_force, "override the coherent-state truncation check");
  cmp_opts.attach(cmp);
  cmp->callback([&] {
    phasekit::set_thread_count(cmp_opts.threads);
    const auto spec = phasekit::parse_state_spec(cmp_state);
    const auto state = phasekit::resolve_state(spec, cmp_dim, cmp_force);
    std::vector<std::string> methods;
    for (std::size_t pos = 0; pos < cmp_methods.size();) {
      const std::size_t comma = cmp_methods.find(',', pos);
      methods.push_back(cmp_methods.substr(pos, comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (methods.empty()) throw phasekit::ValidationError("compare: --methods is empty");
    ordered_json reports = ordered_json::object();
    double q_var = -1.0, pb_var = -1.0;
    for (const auto& method : methods) {
      const auto report = run_method(method, state, cmp_opts, cmp_pb_s, cmp_kmax);
      reports[report.method] = report_json(report);
      if (method == "q") q_var = report.variance;
      if (method == "pb") pb_var = report.variance;
    }
    ordered_json j{{"state", phasekit::format_state_spec(spec)},
                   {"dim", state.dim()},
                   {"reports", reports}};
    if (q_var >= 0.0 && pb_var >= 0.0)
      j["q_minus_pb_variance"] = round_sig(q_var - pb_var);
    mf.resolved = {{"state", phasekit::format_state_spec(spec)}, {"dim", state.dim()},
                   {"methods", cmp_methods}, {"kmax", cmp_kmax}, {"pb_s", cmp_pb_s},
                   {"theta0", cmp_opts.theta0}, {"threads", cmp_opts.threads}};
    emit(cmp_opts, mf, j.dump(2) + "\n");
    mf.write(cmp_opts);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const phasekit::ConvergenceError& e) {  // includes IntegrationError
    std::cerr << "phasekit: " << e.what() << "\n";
    return 2;
  } catch (const phasekit::IoError& e) {
    std::cerr << "phasekit: " << e.what() << "\n";
    return 3;
  } catch (const phasekit::ValidationError& e) {
    std::cerr << "phasekit: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "phasekit: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
