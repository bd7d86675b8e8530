#pragma once

// Quantitative experiments on top of the solver and the profile iteration:
// integral identities, convergence studies, single-wave propagation and the
// two-wave overtaking collision.

#include <array>
#include <string>
#include <vector>

#include "rosenau/petviashvili.hpp"
#include "rosenau/solver.hpp"

namespace rosenau {

enum class Identity { energy_identity, pohozaev, combined };

std::string to_string(Identity id);

struct IdentityReport {
  Identity identity = Identity::energy_identity;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_gap = 0.0;
  double rel_gap = 0.0;
};

struct IdentitySuite {
  std::array<IdentityReport, 3> reports;
  // max(|Q| at the two end nodes)
  double edge_value = 0.0;
  std::vector<std::string> warnings;

  const IdentityReport& operator[](Identity id) const {
    return reports[static_cast<int>(id)];
  }
};

inline constexpr double kRelGapFloor = 1e-14;

IdentityReport make_identity_report(Identity id, double lhs, double rhs);

// With I1 = int (Q'')^2, I0 = int Q^2, Ip = int Q^{p+2}:
//   energy:    c I1 + (c-1) I0                 =  Ip / (p+1)
//   pohozaev:  (3c/2) I1 - ((c-1)/2) I0        = -Ip / ((p+1)(p+2))
//   combined:  c (3p+8) / (2(p+2)) I1          =  (c-1) p / (2(p+2)) I0
IdentitySuite check_identities(const Field& Q, double c, double p);
IdentitySuite check_identities(const SolitaryProfile& profile);

struct ConvergenceRow {
  long resolution = 0;
  double error = 0.0;
  double observed_order = 0.0;  // NaN on the first row
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  // Least-squares slope of -log(error) against log(resolution) over the rows
  // with a positive error.
  double fitted_order() const;
};

ConvergenceTable make_convergence_table(const std::vector<long>& resolutions,
                                        const std::vector<double>& errors);

// L-infinity error at T of M-step runs against an M_ref-step run. The runs
// are independent and execute concurrently.
ConvergenceTable temporal_convergence(const Field& u0, double p, double T,
                                      const std::vector<long>& M_list,
                                      long M_ref);

// u0_ref lives on the reference grid; each coarse run starts from its
// trigonometric interpolant and is compared with the reference run at the
// coarse nodes.
ConvergenceTable spatial_convergence(const Field& u0_ref, double p, double T,
                                     const std::vector<int>& N_list, long M);

struct PropagationReport {
  EvolutionRecord record;
  double shape_error = 0.0;  // relative L-infinity against Q(x - c T)
  double energy_drift = 0.0;  // max_t |E(t) - E(0)|
  double initial_energy = 0.0;
};

PropagationReport propagate_profile(const SolitaryProfile& profile, double T,
                                    long M, long snapshot_stride);

struct PeakSample {
  double t = 0.0;
  double x_main = 0.0;  // position of the global maximum
  double amplitude = 0.0;
  // Largest other local maximum, if it is separated from the main one.
  bool has_second = false;
  double x_second = 0.0;
  double second_amplitude = 0.0;
};

// Maxima refined by a parabola through the three nodes around them.
// Secondary maxima below `min_height` or within `min_separation` of the main
// one are ignored.
PeakSample locate_peaks(const Field& u, double t, double min_height,
                        double min_separation);

struct CollisionConfig {
  double p = 1.0;
  double c1 = 2.0;
  double c2 = 1.2;
  double x1 = -60.0;
  double x2 = -20.0;
  double a = -200.0;
  double b = 200.0;
  int N = 16384;
  long M = 10000;
  double T = 100.0;
  long snapshot_stride = 100;
  // Also run 2M and 4M steps and compare the trailing tail.
  bool refine = true;
};

struct CollisionReport {
  EvolutionRecord record;
  double peak1 = 0.0;  // initial peak amplitudes of the two profiles
  double peak2 = 0.0;
  std::vector<PeakSample> peaks{};
  bool overtaken = false;
  double crossover_time = 0.0;
  double collision_amplitude = 0.0;
  double slow_position = 0.0;  // at T
  double fast_position = 0.0;
  double tail_window_lo = 0.0;
  double tail_window_hi = 0.0;
  // max |u(T)| over the window
  double tail_amplitude = 0.0;
  // max |u(T) - Q_{c2}(x - slow_position)| over the window
  double radiation_amplitude = 0.0;
  double relative_energy_drift = 0.0;
  // Filled when refine is set: max tail differences M vs 4M and 2M vs 4M.
  bool refined = false;
  double tail_error_m = 0.0;
  double tail_error_2m = 0.0;
  double tail_error_ratio = 0.0;
};

void validate(const CollisionConfig& cfg);

CollisionReport collision_experiment(const CollisionConfig& cfg);

}  // namespace rosenau
