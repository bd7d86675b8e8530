#pragma once

// Pseudo-spectral RK4 time stepping for
//
//   u_t + u_x + u_xxxxt + (u^{p+1}/(p+1))_x = 0
//
// on a periodic interval. In Fourier space every mode obeys
//
//   dU~_k/dt = -(i K_k / (1 + K_k^4)) [U~_k + (u^{p+1})~_k / (p+1)],
//
// with K_k = scale * k, and the nonlinear coefficient is formed on the nodes.

#include <vector>

#include "rosenau/spectral.hpp"

namespace rosenau {

struct SolverOptions {
  // max|u| above this aborts the run with InstabilityError.
  double blowup_bound = 1e6;
  // Zero |k| > N/3 in the nonlinear term (2/3 rule). Off by default.
  bool dealias = false;
  // Test-only switch: drop the nonlinear term and integrate the linear flow.
  bool nonlinear = true;
};

// The Fourier coefficients are the evolving quantity; the nodal field is
// materialized on request (with the reality check applied).
class SolverState {
 public:
  SolverState(const Field& u0, double p, double dt, double t = 0.0);
  SolverState(SpectralField spectrum, double p, double dt, double t);

  const Grid& grid() const noexcept { return spectrum_.grid; }
  double time() const noexcept { return t_; }
  double p() const noexcept { return p_; }
  double dt() const noexcept { return dt_; }
  const SpectralField& spectrum() const noexcept { return spectrum_; }
  // Throws SymmetryError if the imaginary residue exceeds 1e-10.
  Field u() const { return inverse_dft(spectrum_); }

 private:
  SpectralField spectrum_;
  double p_;
  double dt_;
  double t_;
};

struct EvolutionRecord {
  std::vector<double> times;
  std::vector<Field> snapshots;
  std::vector<double> energy_series;
  // Spectrum at t = T, for restarts and exact comparisons.
  SpectralField final_spectrum;

  const Field& final_field() const { return snapshots.back(); }
  double max_energy_drift() const;
};

// u^{p+1}/(p+1) on the nodes. Integer exponents use repeated multiplication;
// a fractional exponent with a negative value throws DomainError.
void nonlinear_flux(std::span<const double> u, double p, std::span<double> out);

SpectralField rhs_fourier(const SpectralField& s, double p,
                          const SolverOptions& options = {});

// One classical RK4 step of size state.dt().
SolverState rk4_step(const SolverState& state, const SolverOptions& options = {});

// M uniform steps from t = 0 to T. Snapshots (with their energy) are kept at
// t = 0, every `snapshot_stride` steps, and at t = T.
EvolutionRecord evolve(const Field& u0, double p, double T, long M,
                       long snapshot_stride, const SolverOptions& options = {});

// Same, starting from a spectrum (avoids a round trip through the nodes).
EvolutionRecord evolve(const SpectralField& u0, double p, double T, long M,
                       long snapshot_stride, const SolverOptions& options = {});

// E(u) = integral of u^2 + (u_xx)^2 over the period.
double energy(const Field& u);

}  // namespace rosenau
