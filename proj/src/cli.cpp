#include "rosenau/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "rosenau/errors.hpp"

namespace rosenau::cli {

namespace {

const std::map<std::string, Command> kCommands = {
    {"solve", Command::solve},
    {"profile", Command::profile},
    {"exact", Command::exact},
    {"check-identities", Command::check_identities},
    {"converge-time", Command::converge_time},
    {"converge-space", Command::converge_space},
    {"collide", Command::collide},
};

// Flags each command accepts, besides --out and --config.
const std::map<Command, std::set<std::string>> kAllowed = {
    {Command::solve, {"a", "b", "N", "M", "T", "p", "c", "init", "profile-file", "dealias", "stride"}},
    {Command::profile, {"a", "b", "N", "p", "c", "nu", "tol-error", "tol-factor", "tol-residual", "max-iters"}},
    {Command::exact, {"case", "c", "k", "c2", "c4", "xi0", "epsilon", "x-lo", "x-hi", "samples", "t"}},
    {Command::check_identities, {"a", "b", "N", "p", "c", "profile-file", "nu", "tol-error", "tol-factor", "tol-residual", "max-iters"}},
    {Command::converge_time, {"a", "b", "N", "p", "c", "T", "M-list", "M-ref"}},
    {Command::converge_space, {"a", "b", "p", "c", "T", "M", "N-list", "N-ref"}},
    {Command::collide, {"a", "b", "N", "M", "T", "p", "c1", "c2", "x1", "x2", "stride", "no-refine"}},
};

std::string flag_name(const std::string& token) {
  if (token.rfind("--", 0) != 0) return {};
  std::string name = token.substr(2);
  const auto eq = name.find('=');
  if (eq != std::string::npos) name.resize(eq);
  return name;
}

// key = value lines, '#' comments; a JSON object (such as an echoed
// config.json) is accepted as well.
std::vector<std::pair<std::string, std::string>> load_config_file(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw ConfigError("config file '" + path + "' does not exist; check the --config path");
  }
  const std::string text = io::read_text(path);
  std::vector<std::pair<std::string, std::string>> out;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    io::json doc;
    try {
      doc = io::json::parse(text);
    } catch (const std::exception& e) {
      throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    for (const auto& [key, value] : doc.items()) {
      if (key == "schema_version") continue;
      std::string v;
      if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
          if (i) v += ",";
          v += value[i].is_string() ? value[i].get<std::string>() : value[i].dump();
        }
      } else if (value.is_string()) {
        v = value.get<std::string>();
      } else {
        v = value.dump();
      }
      out.emplace_back(key, v);
    }
    return out;
  }
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto trim = [](std::string s) {
      const auto l = s.find_first_not_of(" \t\r");
      if (l == std::string::npos) return std::string();
      const auto r = s.find_last_not_of(" \t\r");
      return s.substr(l, r - l + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected key = value; write e.g. 'N = 1024'");
    }
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    out.emplace_back(trim(line.substr(0, eq)), value);
  }
  return out;
}

bool is_true(const std::string& v) { return v == "true" || v == "1" || v == "yes" || v == "on"; }

}  // namespace

std::string to_string(Command cmd) {
  for (const auto& [name, c] : kCommands) {
    if (c == cmd) return name;
  }
  return "?";
}

std::optional<RunConfig> parse_and_validate(const std::vector<std::string>& args,
                                            std::string* help_text) {
  RunConfig cfg;
  std::string command;
  std::string out_dir = "out";
  std::string config_path;
  std::string profile_file;
  double nu = 0.0;
  double t_eval = 0.0;

  CLI::App app{"Rosenau equation solver, solitary-wave profiles and exact solutions", "rosenau"};
  app.add_option("command", command, "solve | profile | exact | check-identities | converge-time | converge-space | collide")
      ->required();
  app.add_option("--config", config_path, "key = value file (or an echoed config.json); flags override it");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--a", cfg.a, "left end of the periodic interval");
  app.add_option("--b", cfg.b, "right end of the periodic interval");
  app.add_option("--N", cfg.N, "number of grid nodes (even)");
  app.add_option("--M", cfg.M, "number of time steps");
  app.add_option("--T", cfg.T, "final time");
  app.add_option("--p", cfg.p, "nonlinearity exponent");
  app.add_option("--c", cfg.c, "wave speed");
  app.add_option("--c1", cfg.c1, "collide: speed of the faster wave");
  app.add_option("--c2", cfg.c2, "collide: speed of the slower wave; exact: coefficient c2 of P(phi)");
  app.add_option("--x1", cfg.x1, "collide: initial position of the faster wave");
  app.add_option("--x2", cfg.x2, "collide: initial position of the slower wave");
  app.add_option("--stride", cfg.snapshot_stride, "steps between stored snapshots");
  app.add_option("--init", cfg.init, "solve: initial data, profile or zero")
      ->check(CLI::IsMember({"profile", "zero"}));
  app.add_option("--profile-file", profile_file, "x,Q profile CSV used instead of a fresh profile");
  app.add_flag("--dealias", cfg.dealias, "solve: 2/3-rule dealiasing of the nonlinear term");
  app.add_option("--nu", nu, "Petviashvili exponent (default (p+1)/p)");
  app.add_option("--tol-error", cfg.tol_error, "Petviashvili tolerance on successive iterates");
  app.add_option("--tol-factor", cfg.tol_factor, "Petviashvili tolerance on |1 - M_n|");
  app.add_option("--tol-residual", cfg.tol_residual, "Petviashvili tolerance on the residual");
  app.add_option("--max-iters", cfg.max_iters, "Petviashvili iteration cap");
  app.add_option("--case", cfg.elliptic_case, "exact: I, IIa, IIb, IIc, IId, IIe or IIf");
  app.add_option("--k", cfg.k, "exact: wavenumber in xi = k x - c t");
  app.add_option("--c4", cfg.c4, "exact: coefficient c4 of P(phi)");
  app.add_option("--xi0", cfg.xi0, "exact: phase shift");
  app.add_option("--epsilon", cfg.epsilon, "exact: branch sign +1 or -1");
  app.add_option("--x-lo", cfg.x_lo, "exact: left end of the sampled x range");
  app.add_option("--x-hi", cfg.x_hi, "exact: right end of the sampled x range");
  app.add_option("--samples", cfg.samples, "exact: number of x samples");
  app.add_option("--t", t_eval, "exact: evaluation time");
  app.add_option("--M-list", cfg.M_list, "converge-time: step counts")->delimiter(',');
  app.add_option("--M-ref", cfg.M_ref, "converge-time: reference step count");
  app.add_option("--N-list", cfg.N_list, "converge-space: grid sizes")->delimiter(',');
  app.add_option("--N-ref", cfg.N_ref, "converge-space: reference grid size");
  bool no_refine = false;
  app.add_flag("--no-refine", no_refine, "collide: skip the 2M and 4M tail refinement runs");

  // Flags given on the command line win over the config file.
  std::vector<std::string> merged;
  std::set<std::string> given;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string name = flag_name(args[i]);
    if (!name.empty()) given.insert(name);
    if (name == "config") {
      const auto eq = args[i].find('=');
      if (eq != std::string::npos) {
        config_path = args[i].substr(eq + 1);
      } else if (i + 1 < args.size()) {
        config_path = args[i + 1];
      }
    }
  }
  std::vector<std::pair<std::string, std::string>> from_file;
  if (!config_path.empty()) from_file = load_config_file(config_path);
  std::string file_command;
  for (const auto& [key, value] : from_file) {
    if (key == "command") {
      file_command = value;
      continue;
    }
    if (!app.get_option_no_throw("--" + key)) {
      throw ConfigError("unknown key '" + key + "' in config file " + config_path +
                        "; run 'rosenau --help' for the list of settings");
    }
    if (given.count(key)) continue;
    given.insert(key);
    if (key == "dealias" || key == "no-refine") {
      if (is_true(value)) merged.push_back("--" + key);
    } else {
      merged.push_back("--" + key + "=" + value);
    }
  }
  const bool has_positional = std::any_of(args.begin(), args.end(), [](const std::string& s) {
    return !s.empty() && s[0] != '-' && kCommands.count(s);
  });
  std::vector<std::string> full;
  if (!has_positional && !file_command.empty()) full.push_back(file_command);
  full.insert(full.end(), args.begin(), args.end());
  full.insert(full.end(), merged.begin(), merged.end());

  std::vector<std::string> reversed(full.rbegin(), full.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    if (help_text) *help_text = app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(std::string(e.what()) + "; run 'rosenau --help' for usage");
  }

  const auto it = kCommands.find(command);
  if (it == kCommands.end()) {
    throw ConfigError("unknown command '" + command +
                      "'; use one of solve, profile, exact, check-identities, "
                      "converge-time, converge-space, collide");
  }
  cfg.command = it->second;
  const auto& allowed = kAllowed.at(cfg.command);
  for (const auto& name : given) {
    if (name == "out" || name == "config") continue;
    if (!allowed.count(name)) {
      throw ConfigError("--" + name + " does not apply to '" + command +
                        "'; remove it or pick the command that uses it");
    }
  }

  auto was_given = [&](const char* name) { return given.count(name) > 0; };
  if (cfg.command == Command::collide) {
    if (!was_given("a")) cfg.a = -200.0;
    if (!was_given("b")) cfg.b = 200.0;
    if (!was_given("N")) cfg.N = 16384;
    if (!was_given("T")) cfg.T = 100.0;
  }
  if (cfg.command == Command::exact) {
    if (!was_given("c2")) cfg.c2 = -1.0;
    if (!was_given("c")) cfg.c = 1.0;
    cfg.T = t_eval;
  }
  cfg.output_dir = out_dir;
  cfg.refine = !no_refine;
  if (was_given("nu")) cfg.nu = nu;
  if (!profile_file.empty()) {
    cfg.seed_profile_path = profile_file;
    if (!std::filesystem::exists(profile_file)) {
      throw ConfigError("profile file '" + profile_file +
                        "' does not exist; create it with 'rosenau profile' or fix the path");
    }
  }

  // Cross-field checks.
  if (cfg.command != Command::exact) {
    if (!(cfg.b > cfg.a)) throw ConfigError("need b > a; swap --a and --b");
    if (cfg.N < 4 || cfg.N % 2) throw ConfigError("--N must be even and at least 4");
    if (!(cfg.p > 0.0)) throw ConfigError("--p must be positive");
  }
  if (cfg.command == Command::solve || cfg.command == Command::collide ||
      cfg.command == Command::converge_space) {
    if (cfg.M < 1) throw ConfigError("--M must be at least 1");
    if (!(cfg.T > 0.0)) throw ConfigError("--T must be positive");
    if (cfg.snapshot_stride < 1) throw ConfigError("--stride must be at least 1");
  }
  if (cfg.command == Command::converge_time) {
    if (cfg.M_list.empty()) throw ConfigError("--M-list is empty; pass e.g. --M-list 125,250,500,1000");
    for (std::size_t i = 1; i < cfg.M_list.size(); ++i) {
      if (cfg.M_list[i] <= cfg.M_list[i - 1]) {
        throw ConfigError("--M-list must be strictly increasing");
      }
    }
    if (cfg.M_list.front() < 1) throw ConfigError("--M-list entries must be positive");
    if (cfg.M_ref < 4 * cfg.M_list.back()) {
      throw ConfigError("--M-ref must be at least 4 times the largest --M-list entry");
    }
  }
  if (cfg.command == Command::converge_space) {
    if (cfg.N_list.empty()) throw ConfigError("--N-list is empty; pass e.g. --N-list 32,64,128,256");
    for (int n : cfg.N_list) {
      if (n < 4 || n % 2) throw ConfigError("--N-list entries must be even and at least 4");
      if (n > cfg.N_ref) throw ConfigError("--N-list entries may not exceed --N-ref");
    }
    if (cfg.N_ref % 2) throw ConfigError("--N-ref must be even");
  }
  if (cfg.command == Command::collide) {
    CollisionConfig cc;
    cc.c1 = cfg.c1;
    cc.c2 = cfg.c2;
    cc.x1 = cfg.x1;
    cc.x2 = cfg.x2;
    cc.a = cfg.a;
    cc.b = cfg.b;
    cc.M = cfg.M;
    cc.T = cfg.T;
    cc.snapshot_stride = cfg.snapshot_stride;
    try {
      validate(cc);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(e.what()) + "; adjust --c1/--c2/--x1/--x2");
    }
  }
  if (cfg.command == Command::exact) {
    parse_elliptic_case(cfg.elliptic_case);
    if (cfg.samples < 2) throw ConfigError("--samples must be at least 2");
    if (!(cfg.x_hi > cfg.x_lo)) throw ConfigError("need --x-hi > --x-lo");
  }
  if (cfg.command == Command::profile || cfg.command == Command::check_identities) {
    if (cfg.max_iters < 1) throw ConfigError("--max-iters must be at least 1");
  }
  return cfg;
}

io::json to_json(const RunConfig& cfg) {
  io::json all;
  all["a"] = cfg.a;
  all["b"] = cfg.b;
  all["N"] = cfg.N;
  all["M"] = cfg.M;
  all["T"] = cfg.T;
  all["p"] = cfg.p;
  all["c"] = cfg.c;
  all["c1"] = cfg.c1;
  all["c2"] = cfg.c2;
  all["x1"] = cfg.x1;
  all["x2"] = cfg.x2;
  all["stride"] = cfg.snapshot_stride;
  all["init"] = cfg.init;
  if (cfg.seed_profile_path) all["profile-file"] = cfg.seed_profile_path->string();
  all["dealias"] = cfg.dealias;
  if (cfg.nu) all["nu"] = *cfg.nu;
  all["tol-error"] = cfg.tol_error;
  all["tol-factor"] = cfg.tol_factor;
  all["tol-residual"] = cfg.tol_residual;
  all["max-iters"] = cfg.max_iters;
  all["case"] = cfg.elliptic_case;
  all["k"] = cfg.k;
  all["c4"] = cfg.c4;
  all["xi0"] = cfg.xi0;
  all["epsilon"] = cfg.epsilon;
  all["x-lo"] = cfg.x_lo;
  all["x-hi"] = cfg.x_hi;
  all["samples"] = cfg.samples;
  all["t"] = cfg.T;
  all["M-list"] = cfg.M_list;
  all["M-ref"] = cfg.M_ref;
  all["N-list"] = cfg.N_list;
  all["N-ref"] = cfg.N_ref;
  all["no-refine"] = !cfg.refine;

  io::json out;
  out["schema_version"] = io::kSchemaVersion;
  out["command"] = to_string(cfg.command);
  for (const auto& [key, value] : all.items()) {
    if (kAllowed.at(cfg.command).count(key)) out[key] = value;
  }
  out["out"] = cfg.output_dir.string();
  return out;
}

namespace {

PetviashviliConfig profile_config(const RunConfig& cfg, const Grid& grid) {
  PetviashviliConfig pc;
  pc.c = cfg.c;
  pc.p = cfg.p;
  pc.nu = cfg.nu;
  pc.grid = grid;
  pc.tol_error = cfg.tol_error;
  pc.tol_factor = cfg.tol_factor;
  pc.tol_residual = cfg.tol_residual;
  pc.max_iters = cfg.max_iters;
  return pc;
}

// The profile from --profile-file, interpolated onto `grid`.
Field load_profile(const RunConfig& cfg, const Grid& grid) {
  Field q = io::read_profile_csv(*cfg.seed_profile_path);
  if (std::abs(q.grid.a() - grid.a()) > 1e-9 || std::abs(q.grid.b() - grid.b()) > 1e-9) {
    throw ConfigError("profile file covers [" + io::format_double(q.grid.a()) + ", " +
                      io::format_double(q.grid.b()) +
                      "] but the run uses a different interval; pass matching --a/--b");
  }
  return resample(q, grid);
}

void run_command(const RunConfig& cfg) {
  const auto& dir = cfg.output_dir;
  switch (cfg.command) {
    case Command::solve: {
      const Grid grid = make_grid(cfg.a, cfg.b, cfg.N);
      Field u0(grid);
      if (cfg.seed_profile_path) {
        u0 = load_profile(cfg, grid);
      } else if (cfg.init == "profile") {
        u0 = solve_profile(profile_config(cfg, grid)).Q;
      }
      SolverOptions opts;
      opts.dealias = cfg.dealias;
      const EvolutionRecord rec = evolve(u0, cfg.p, cfg.T, cfg.M, cfg.snapshot_stride, opts);
      io::write_text(dir / "snapshots.csv", io::snapshots_csv(rec));
      io::write_text(dir / "energy.csv", io::energy_csv(rec));
      io::write_json(dir / "summary.json",
                     io::with_schema({{"initial_energy", rec.energy_series.front()},
                                      {"max_energy_drift", rec.max_energy_drift()},
                                      {"snapshots", rec.snapshots.size()}}));
      break;
    }
    case Command::profile: {
      const SolitaryProfile prof = solve_profile(profile_config(cfg, make_grid(cfg.a, cfg.b, cfg.N)));
      io::write_text(dir / "profile.csv", io::profile_csv(prof.Q));
      io::write_json(dir / "profile.json", io::with_schema(io::to_json(prof)));
      break;
    }
    case Command::exact: {
      const auto params = derive_case_params(parse_elliptic_case(cfg.elliptic_case), cfg.c,
                                             cfg.k, cfg.c2, cfg.c4, cfg.xi0, cfg.epsilon);
      std::vector<double> xs;
      std::vector<RealOrPole> us;
      for (int i = 0; i < cfg.samples; ++i) {
        const double x = cfg.x_lo + (cfg.x_hi - cfg.x_lo) * i / (cfg.samples - 1);
        xs.push_back(x);
        us.push_back(evaluate_solution(params, x, cfg.T));
      }
      const double margin = params.has_poles() ? 0.25 : 1e-3;
      const auto samples = period_samples(params, 200, margin);
      io::json doc = io::to_json(params);
      doc["t"] = cfg.T;
      doc["ode_residual"] = ode_residual_phi(params, samples);
      doc["ode_sample_margin"] = margin;
      const double xi_lo = params.k * cfg.x_lo - params.c * cfg.T;
      const double xi_hi = params.k * cfg.x_hi - params.c * cfg.T;
      doc["poles_xi"] = pole_locations(params, std::min(xi_lo, xi_hi), std::max(xi_lo, xi_hi));
      io::write_text(dir / "curve.csv", io::curve_csv(xs, us));
      io::write_json(dir / "exact.json", io::with_schema(doc));
      break;
    }
    case Command::check_identities: {
      const Grid grid = make_grid(cfg.a, cfg.b, cfg.N);
      IdentitySuite suite;
      if (cfg.seed_profile_path) {
        suite = check_identities(load_profile(cfg, grid), cfg.c, cfg.p);
      } else {
        const SolitaryProfile prof = solve_profile(profile_config(cfg, grid));
        io::write_text(dir / "profile.csv", io::profile_csv(prof.Q));
        suite = check_identities(prof);
      }
      io::json doc = io::to_json(suite);
      doc["c"] = cfg.c;
      doc["p"] = cfg.p;
      io::write_json(dir / "identities.json", io::with_schema(doc));
      break;
    }
    case Command::converge_time: {
      const SolitaryProfile prof =
          solve_profile(profile_config(cfg, make_grid(cfg.a, cfg.b, cfg.N)));
      const auto table = temporal_convergence(prof.Q, cfg.p, cfg.T, cfg.M_list, cfg.M_ref);
      io::write_text(dir / "convergence_time.csv", io::convergence_csv(table));
      io::json doc = io::to_json(table);
      doc["M_ref"] = cfg.M_ref;
      io::write_json(dir / "convergence_time.json", io::with_schema(doc));
      break;
    }
    case Command::converge_space: {
      const SolitaryProfile prof =
          solve_profile(profile_config(cfg, make_grid(cfg.a, cfg.b, cfg.N_ref)));
      const auto table = spatial_convergence(prof.Q, cfg.p, cfg.T, cfg.N_list, cfg.M);
      io::write_text(dir / "convergence_space.csv", io::convergence_csv(table));
      io::json doc = io::to_json(table);
      doc["N_ref"] = cfg.N_ref;
      doc["M"] = cfg.M;
      io::write_json(dir / "convergence_space.json", io::with_schema(doc));
      break;
    }
    case Command::collide: {
      CollisionConfig cc;
      cc.p = cfg.p;
      cc.c1 = cfg.c1;
      cc.c2 = cfg.c2;
      cc.x1 = cfg.x1;
      cc.x2 = cfg.x2;
      cc.a = cfg.a;
      cc.b = cfg.b;
      cc.N = cfg.N;
      cc.M = cfg.M;
      cc.T = cfg.T;
      cc.snapshot_stride = cfg.snapshot_stride;
      cc.refine = cfg.refine;
      const CollisionReport rep = collision_experiment(cc);
      io::write_text(dir / "snapshots.csv", io::snapshots_csv(rep.record));
      io::write_text(dir / "energy.csv", io::energy_csv(rep.record));
      io::write_json(dir / "collision.json", io::with_schema(io::to_json(rep)));
      break;
    }
  }
}

io::json error_json(const std::string& name, const std::string& message, int code) {
  return io::with_schema({{"error", name}, {"message", message}, {"exit_code", code}});
}

void try_write_error(const std::filesystem::path& dir, const io::json& doc) {
  try {
    io::write_json(dir / "error.json", doc);
  } catch (const std::exception&) {
    // Nowhere left to report to besides stderr.
  }
}

}  // namespace

int execute(const RunConfig& cfg) {
  try {
    std::filesystem::create_directories(cfg.output_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: cannot create output directory " << cfg.output_dir << ": " << e.what() << "\n";
    return static_cast<int>(ErrorKind::Io);
  }
  try {
    io::write_json(cfg.output_dir / "config.json", to_json(cfg));
    std::filesystem::remove(cfg.output_dir / "error.json");
    run_command(cfg);
    return 0;
  } catch (const InstabilityError& e) {
    io::json doc = error_json(e.name(), e.what(), static_cast<int>(e.kind()));
    doc["t"] = e.time();
    doc["step"] = e.step();
    try_write_error(cfg.output_dir, doc);
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const NonConvergenceError& e) {
    io::json doc = error_json(e.name(), e.what(), static_cast<int>(e.kind()));
    doc["iterations"] = e.history().size();
    try_write_error(cfg.output_dir, doc);
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const Error& e) {
    try_write_error(cfg.output_dir, error_json(e.name(), e.what(), static_cast<int>(e.kind())));
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    try_write_error(cfg.output_dir, error_json("io", e.what(), 4));
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::Io);
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<RunConfig> cfg;
  std::string help;
  try {
    cfg = parse_and_validate(args, &help);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  }
  if (!cfg) {
    std::cout << help;
    return 0;
  }
  return execute(*cfg);
}

}  // namespace rosenau::cli
