#pragma once

// Solitary-wave profiles of the Rosenau equation by Petviashvili iteration.
//
// A wave u = Q(x - c t) satisfies c Q'''' + (c - 1) Q - Q^{p+1}/(p+1) = 0,
// i.e. (c K^4 + c - 1) Q^ = (Q^{p+1})^ / (p+1) mode by mode. The iteration
//
//   Q^_{n+1} = M_n^nu (Q_n^{p+1})^ / ((p+1)(c K^4 + c - 1))
//
// uses the stabilizing factor
//
//   M_n = sum (c K^4 + c - 1) |Q^_n|^2 / ((1/(p+1)) sum conj(Q^_n) (Q_n^{p+1})^)
//
// which tends to 1 at a fixed point and keeps the iterates from collapsing to
// zero or blowing up.

#include <optional>
#include <string>
#include <vector>

#include "rosenau/errors.hpp"
#include "rosenau/spectral.hpp"

namespace rosenau {

struct PetviashviliConfig {
  double c = 2.0;
  double p = 1.0;
  // Defaults to (p+1)/p when unset.
  std::optional<double> nu;
  Grid grid = make_grid(-50.0, 50.0, 1024);
  // Defaults to exp(-(x - x_mid)^2), x_mid the center of the interval.
  std::optional<Field> initial_guess;
  double tol_error = 1e-12;
  double tol_factor = 1e-12;
  double tol_residual = 1e-10;
  int max_iters = 200;
  double overflow_bound = 1e6;
  // Move the converged peak to the center of the interval.
  bool recenter = true;

  double effective_nu() const { return nu.value_or((p + 1.0) / p); }
  Field seed() const;
  // Throws ConfigError on invalid settings (including c K^4 + c - 1 = 0
  // somewhere on the grid, e.g. c = 1).
  void validate() const;
  // True when c K^4 + c - 1 takes both signs on the grid (0 < c < 1).
  bool denominator_changes_sign() const;
};

struct IterationDiagnostics {
  int iteration = 0;
  // ||Q_n - Q_{n-1}|| in max-norm (the controlling one) and discrete L2.
  double error_max = 0.0;
  double error_l2 = 0.0;
  double factor = 0.0;  // M_n
  double factor_error = 0.0;  // |1 - M_n|
  double residual = 0.0;  // ||R Q_n||_inf
};

struct SolitaryProfile {
  Field Q;
  SpectralField spectrum;
  double c;
  double p;
  double nu;
  int iterations;
  std::vector<IterationDiagnostics> history;
  std::vector<std::string> warnings;

  const IterationDiagnostics& final_diagnostics() const { return history.back(); }
  double peak_amplitude() const;  // signed value of the largest |Q|
};

class NonConvergenceError : public NumericalError {
 public:
  NonConvergenceError(const std::string& what,
                      std::vector<IterationDiagnostics> history)
      : NumericalError("non_convergence", what), history_(std::move(history)) {}
  const std::vector<IterationDiagnostics>& history() const noexcept { return history_; }

 private:
  std::vector<IterationDiagnostics> history_;
};

// c K^4 + c - 1 for every storage slot of the grid.
std::vector<double> linear_symbol(const Grid& grid, double c);

double stabilizing_factor(const SpectralField& Qhat, const PetviashviliConfig& cfg);

SpectralField iterate_once(const SpectralField& Qhat, const PetviashviliConfig& cfg);

// R Q = c Q'''' + (c - 1) Q - Q^{p+1}/(p+1). The spectral overload applies the
// fourth derivative to the given coefficients directly, avoiding the
// roundoff that re-transforming nodal values injects into high modes.
Field residual_operator(const Field& Q, double c, double p);
Field residual_operator(const SpectralField& Qhat, double c, double p);

SolitaryProfile solve_profile(const PetviashviliConfig& cfg);

}  // namespace rosenau
