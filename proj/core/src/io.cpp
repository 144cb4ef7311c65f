#include "phasekit/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "phasekit/errors.hpp"

namespace phasekit {

using ordered_json = nlohmann::ordered_json;

std::string format_g(double x, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant, x);
  return buf;
}

double round_sig(double x, int significant) {
  return std::strtod(format_g(x, significant).c_str(), nullptr);
}

namespace {

double num(double x) { return round_sig(x); }

ordered_json meta_to_json(const std::map<std::string, double>& meta) {
  ordered_json j = ordered_json::object();
  for (const auto& [key, value] : meta) j[key] = num(value);
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

TruncatedState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open state file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("state file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.contains("dim") || !j.contains("amplitudes"))
    throw ValidationError("state file '" + path + "' needs fields dim and amplitudes");
  const int dim = j["dim"].get<int>();
  const auto& amps = j["amplitudes"];
  if (dim < 1 || static_cast<int>(amps.size()) != dim)
    throw ValidationError("state file '" + path + "': amplitudes length must equal dim");
  Eigen::VectorXcd v(dim);
  for (int n = 0; n < dim; ++n)
    v[n] = std::complex<double>(amps[n].value("re", 0.0), amps[n].value("im", 0.0));
  const double norm = v.norm();
  if (norm < 1.0 - 1e-6 || norm > 1.0 + 1e-6)
    throw ValidationError("state file '" + path + "': norm " + format_g(norm) +
                          " outside [1-1e-6, 1+1e-6]");
  v /= norm;
  return TruncatedState{std::move(v), "file:" + path};
}

void save_state_file(const TruncatedState& state, const std::string& path) {
  ordered_json j;
  j["dim"] = state.dim();
  ordered_json amps = ordered_json::array();
  for (int n = 0; n < state.dim(); ++n) {
    amps.push_back(ordered_json{{"re", state.amplitudes[n].real()},
                                {"im", state.amplitudes[n].imag()}});
  }
  j["amplitudes"] = std::move(amps);
  write_text_file(path, dump(j));
}

void write_operator_csv(const OperatorMatrix& op, const std::string& path) {
  std::ostringstream os;
  os << "m,n,re,im\n";
  for (int m = 0; m < op.dim(); ++m)
    for (int n = 0; n < op.dim(); ++n)
      os << m << ',' << n << ',' << format_g(op.entries(m, n).real(), 15) << ','
         << format_g(op.entries(m, n).imag(), 15) << '\n';
  write_text_file(path, os.str());
  if (path != "-") write_text_file(path + ".meta.json", operator_meta_json(op));
}

Eigen::MatrixXcd read_operator_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open operator file '" + path + "'");
  std::string line;
  std::getline(in, line);  // header
  struct Cell { int m, n; std::complex<double> z; };
  std::vector<Cell> cells;
  int dim = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    int m = 0, n = 0;
    double re = 0.0, im = 0.0;
    if (std::sscanf(line.c_str(), "%d,%d,%lf,%lf", &m, &n, &re, &im) != 4)
      throw ValidationError("operator file '" + path + "': bad row '" + line + "'");
    cells.push_back({m, n, {re, im}});
    dim = std::max(dim, std::max(m, n) + 1);
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& c : cells) out(c.m, c.n) = c.z;
  return out;
}

std::string operator_meta_json(const OperatorMatrix& op) {
  ordered_json j;
  j["method"] = to_string(op.method);
  j["dim"] = op.dim();
  j["meta"] = meta_to_json(op.meta);
  return dump(j);
}

std::string distribution_csv(const PhaseDistribution& dist) {
  std::ostringstream os;
  os << "theta,p\n";
  for (std::size_t j = 0; j < dist.thetas.size(); ++j)
    os << format_g(dist.thetas[j], 15) << ',' << format_g(dist.values[j], 15) << '\n';
  return os.str();
}

std::string moment_report_json(const MomentReport& report) {
  static const char* grid_keys[] = {"n_radial", "n_angular", "theta0", "pb_s"};
  ordered_json j;
  j["mean"] = num(report.mean);
  j["second_moment"] = num(report.second_moment);
  j["variance"] = num(report.variance);
  j["method"] = report.method;
  j["norm_defect"] = num(report.norm_defect);
  ordered_json grid = ordered_json::object();
  ordered_json extra = ordered_json::object();
  grid["n_radial"] = 0;
  grid["n_angular"] = 0;
  grid["theta0"] = 0.0;
  for (const auto& [key, value] : report.meta) {
    bool is_grid = false;
    for (const char* g : grid_keys) is_grid = is_grid || key == g;
    if (is_grid && key != "theta0")
      grid[key] = static_cast<long long>(std::llround(value));
    else if (is_grid)
      grid[key] = num(value);
    else
      extra[key] = num(value);
  }
  j["grid"] = std::move(grid);
  if (!extra.empty()) j["meta"] = std::move(extra);
  return dump(j);
}

std::string unitarity_report_json(const UnitarityReport& report) {
  ordered_json j;
  j["construction"] = report.construction;
  j["dim"] = static_cast<int>(report.diagonal.size());
  ordered_json diag = ordered_json::array();
  for (double d : report.diagonal) diag.push_back(num(d));
  j["diagonal_of_EdagE"] = std::move(diag);
  j["max_defect_inner_block"] = num(report.max_defect_inner_block);
  j["note"] =
      "E^dag E is measured on the truncated space: the diagonal starts at "
      "pi/4 ~ 0.785 for n=0 and approaches 1 only as n grows; the last "
      "diagonal entry is the truncation corner. The defect is reported as "
      "data, unitarity is not assumed.";
  return dump(j);
}

std::string equivalence_report_json(const EquivalenceReport& report, int block) {
  ordered_json j;
  j["block"] = block;
  j["max_abs_dev"] = num(report.max_abs_dev);
  j["fro_dev"] = num(report.fro_dev);
  ordered_json entries = ordered_json::array();
  for (const auto& e : report.entries) {
    entries.push_back(ordered_json{{"m", e.m},
                                   {"n", e.n},
                                   {"lhs_re", num(e.lhs.real())},
                                   {"lhs_im", num(e.lhs.imag())},
                                   {"rhs_re", num(e.rhs.real())},
                                   {"rhs_im", num(e.rhs.imag())},
                                   {"abs_dev", num(e.abs_dev)}});
  }
  j["entries"] = std::move(entries);
  return dump(j);
}

void write_text_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace phasekit
