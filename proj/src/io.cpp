#include "rosenau/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rosenau/errors.hpp"

namespace rosenau::io {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw IoError("could not format number");
  return std::string(buf, end);
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_json(const std::filesystem::path& path, const json& doc) {
  write_text(path, doc.dump(2) + "\n");
}

std::string snapshots_csv(const EvolutionRecord& record) {
  std::string out = "t,x,u\n";
  for (std::size_t i = 0; i < record.snapshots.size(); ++i) {
    const Field& f = record.snapshots[i];
    const std::string t = format_double(record.times[i]);
    for (int j = 0; j < f.size(); ++j) {
      out += t;
      out += ',';
      out += format_double(f.grid.node(j));
      out += ',';
      out += format_double(f[j]);
      out += '\n';
    }
  }
  return out;
}

std::string profile_csv(const Field& Q) {
  std::string out = "x,Q\n";
  for (int j = 0; j < Q.size(); ++j) {
    out += format_double(Q.grid.node(j)) + "," + format_double(Q[j]) + "\n";
  }
  return out;
}

std::string convergence_csv(const ConvergenceTable& table) {
  std::string out = "resolution,Linf_error,observed_order\n";
  for (const auto& row : table.rows) {
    out += std::to_string(row.resolution) + "," + format_double(row.error) + "," +
           (std::isnan(row.observed_order) ? "" : format_double(row.observed_order)) + "\n";
  }
  return out;
}

std::string curve_csv(const std::vector<double>& x, const std::vector<RealOrPole>& u) {
  std::string out = "x,u,pole\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    out += format_double(x[i]) + "," + (u[i].pole ? "inf" : format_double(u[i].value)) +
           "," + (u[i].pole ? "1" : "0") + "\n";
  }
  return out;
}

std::string energy_csv(const EvolutionRecord& record) {
  std::string out = "t,energy\n";
  for (std::size_t i = 0; i < record.times.size(); ++i) {
    out += format_double(record.times[i]) + "," + format_double(record.energy_series[i]) + "\n";
  }
  return out;
}

Field read_profile_csv(const std::filesystem::path& path) {
  std::istringstream in(read_text(path));
  std::string line;
  if (!std::getline(in, line)) throw IoError(path.string() + ": empty profile file");
  std::vector<double> xs, qs;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw IoError(path.string() + ":" + std::to_string(lineno) + ": expected x,Q");
    }
    try {
      xs.push_back(std::stod(line.substr(0, comma)));
      qs.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw IoError(path.string() + ":" + std::to_string(lineno) + ": not a number");
    }
  }
  if (xs.size() < 4) throw IoError(path.string() + ": too few rows for a profile");
  const double dx = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (std::abs(xs[i] - xs[i - 1] - dx) > 1e-9 * std::max(1.0, std::abs(dx))) {
      throw ConfigError(path.string() + ": x column is not uniformly spaced");
    }
  }
  const int n = static_cast<int>(xs.size());
  return Field(make_grid(xs.front(), xs.front() + n * dx, n), std::move(qs));
}

namespace {

json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

json with_schema(json body) {
  json out;
  out["schema_version"] = kSchemaVersion;
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

json to_json(const IdentitySuite& suite) {
  json reports = json::array();
  for (const auto& r : suite.reports) {
    reports.push_back({{"identity", to_string(r.identity)},
                       {"lhs", number(r.lhs)},
                       {"rhs", number(r.rhs)},
                       {"abs_gap", number(r.abs_gap)},
                       {"rel_gap", number(r.rel_gap)}});
  }
  return {{"identities", reports},
          {"edge_value", number(suite.edge_value)},
          {"warnings", suite.warnings}};
}

json to_json(const ConvergenceTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    rows.push_back({{"resolution", row.resolution},
                    {"Linf_error", number(row.error)},
                    {"observed_order", number(row.observed_order)}});
  }
  return {{"rows", rows}, {"fitted_order", number(table.fitted_order())}};
}

json to_json(const SolitaryProfile& profile) {
  json history = json::array();
  for (const auto& d : profile.history) {
    history.push_back({{"iteration", d.iteration},
                       {"error_max", number(d.error_max)},
                       {"error_l2", number(d.error_l2)},
                       {"factor", number(d.factor)},
                       {"factor_error", number(d.factor_error)},
                       {"residual", number(d.residual)}});
  }
  const Grid& g = profile.Q.grid;
  return {{"c", profile.c},
          {"p", profile.p},
          {"nu", profile.nu},
          {"domain", {g.a(), g.b()}},
          {"N", g.size()},
          {"iterations", profile.iterations},
          {"peak_amplitude", number(profile.peak_amplitude())},
          {"warnings", profile.warnings},
          {"history", history}};
}

json to_json(const CollisionReport& r) {
  json peaks = json::array();
  for (const auto& pk : r.peaks) {
    json entry = {{"t", pk.t}, {"x_main", number(pk.x_main)}, {"amplitude", number(pk.amplitude)}};
    if (pk.has_second) {
      entry["x_second"] = number(pk.x_second);
      entry["second_amplitude"] = number(pk.second_amplitude);
    }
    peaks.push_back(entry);
  }
  json out = {{"initial_peaks", {number(r.peak1), number(r.peak2)}},
              {"overtaken", r.overtaken},
              {"crossover_time", r.overtaken ? number(r.crossover_time) : json(nullptr)},
              {"collision_amplitude", number(r.collision_amplitude)},
              {"fast_position", number(r.fast_position)},
              {"slow_position", number(r.slow_position)},
              {"tail_window", {number(r.tail_window_lo), number(r.tail_window_hi)}},
              {"tail_amplitude", number(r.tail_amplitude)},
              {"radiation_amplitude", number(r.radiation_amplitude)},
              {"relative_energy_drift", number(r.relative_energy_drift)}};
  if (r.refined) {
    out["tail_error_M_vs_4M"] = number(r.tail_error_m);
    out["tail_error_2M_vs_4M"] = number(r.tail_error_2m);
    out["tail_error_ratio"] = number(r.tail_error_ratio);
  }
  out["peaks"] = peaks;
  return out;
}

json to_json(const EllipticCaseParams& p) {
  json roots = json::array();
  for (const auto& r : p.roots) roots.push_back({number(r.real()), number(r.imag())});
  return {{"case", to_string(p.kind)},
          {"c", p.c},
          {"k", p.k},
          {"c2", p.c2},
          {"c4", p.c4},
          {"xi0", p.xi0},
          {"epsilon", p.epsilon},
          {"a0", number(p.a0)},
          {"a2", number(p.a2)},
          {"a4", number(p.a4)},
          {"c0", number(p.c0)},
          {"roots", roots},
          {"modulus", number(p.modulus)},
          {"g", number(p.g)},
          {"R", number(p.R)},
          {"argument_scale", number(p.argument_scale)},
          {"period", number(p.period())},
          {"has_poles", p.has_poles()}};
}

json to_json(const PropagationReport& r) {
  return {{"shape_error", number(r.shape_error)},
          {"energy_drift", number(r.energy_drift)},
          {"initial_energy", number(r.initial_energy)}};
}

}  // namespace rosenau::io
