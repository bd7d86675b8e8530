#pragma once

// Command-line front end: one experiment per invocation, artifacts written
// to an output directory together with the resolved configuration.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rosenau/io.hpp"

namespace rosenau::cli {

enum class Command { solve, profile, exact, check_identities, converge_time, converge_space, collide };

std::string to_string(Command cmd);

struct RunConfig {
  Command command = Command::profile;
  double a = -50.0;
  double b = 50.0;
  int N = 1024;
  long M = 10000;
  double T = 10.0;
  double p = 1.0;
  double c = 2.0;
  // collide: speed of the slower wave. exact: quadratic coefficient of P(phi).
  double c2 = 1.2;
  double c1 = 2.0;
  double x1 = -60.0;
  double x2 = -20.0;
  std::filesystem::path output_dir = "out";
  long snapshot_stride = 100;
  std::optional<std::filesystem::path> seed_profile_path;

  // solve
  std::string init = "profile";  // profile | zero
  bool dealias = false;

  // profile
  std::optional<double> nu;
  double tol_error = 1e-12;
  double tol_factor = 1e-12;
  double tol_residual = 1e-10;
  int max_iters = 200;

  // exact
  std::string elliptic_case = "IIb";
  double k = 1.0;
  double c4 = 1.0;
  double xi0 = 0.0;
  double epsilon = 1.0;
  double x_lo = -10.0;
  double x_hi = 10.0;
  int samples = 2001;

  // convergence studies
  std::vector<long> M_list{125, 250, 500, 1000};
  long M_ref = 10000;
  std::vector<int> N_list{32, 64, 128, 256};
  int N_ref = 1024;

  // collide
  bool refine = true;
};

// Throws ConfigError (message ends with a remedy hint). Returns nullopt when
// help was requested; `help_text` then holds the usage.
std::optional<RunConfig> parse_and_validate(const std::vector<std::string>& args,
                                            std::string* help_text = nullptr);

io::json to_json(const RunConfig& cfg);

// Runs the experiment and writes its artifacts. Errors from the modules are
// caught, written to output_dir/error.json and mapped to the exit code.
int execute(const RunConfig& cfg);

// parse_and_validate + execute with the exit-code mapping; for main().
int run(int argc, char** argv);

}  // namespace rosenau::cli
