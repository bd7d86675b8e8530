#include "rosenau/validation.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "rosenau/errors.hpp"

namespace rosenau {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double power(double v, double e) {
  const double r = std::round(e);
  if (r == e && std::abs(r) < 64) {
    double out = 1.0;
    for (int i = 0; i < static_cast<int>(r); ++i) out *= v;
    return out;
  }
  return std::pow(v, e);
}

// u restricted to the coarse nodes. Exact subsampling when the coarse grid
// nests in the fine one, trigonometric interpolation otherwise.
Field restrict_to(const Field& fine, const Grid& coarse) {
  const int nf = fine.size();
  const int nc = coarse.size();
  if (fine.grid.a() == coarse.a() && fine.grid.b() == coarse.b() && nf % nc == 0) {
    const int stride = nf / nc;
    Field out(coarse);
    for (int j = 0; j < nc; ++j) out[j] = fine[j * stride];
    return out;
  }
  return resample(fine, coarse);
}

double parabola_vertex(double ym, double y0, double yp, double& height) {
  const double den = ym - 2.0 * y0 + yp;
  if (den == 0.0) {
    height = y0;
    return 0.0;
  }
  const double off = 0.5 * (ym - yp) / den;
  height = y0 - 0.25 * (ym - yp) * off;
  return off;
}

}  // namespace

std::string to_string(Identity id) {
  switch (id) {
    case Identity::energy_identity: return "energy_identity";
    case Identity::pohozaev: return "pohozaev";
    case Identity::combined: return "combined";
  }
  return "?";
}

IdentityReport make_identity_report(Identity id, double lhs, double rhs) {
  IdentityReport r;
  r.identity = id;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_gap = std::abs(lhs - rhs);
  r.rel_gap = r.abs_gap / std::max({std::abs(lhs), std::abs(rhs), kRelGapFloor});
  return r;
}

IdentitySuite check_identities(const Field& Q, double c, double p) {
  const Field q2 = spectral_derivative(Q, 2);
  Field sq(Q.grid), sq2(Q.grid), qp(Q.grid);
  for (int j = 0; j < Q.size(); ++j) {
    sq[j] = Q[j] * Q[j];
    sq2[j] = q2[j] * q2[j];
    qp[j] = power(Q[j], p + 2.0);
  }
  const double i0 = quadrature(sq);
  const double i1 = quadrature(sq2);
  const double ip = quadrature(qp);

  IdentitySuite suite;
  suite.reports[0] = make_identity_report(Identity::energy_identity,
                                          c * i1 + (c - 1.0) * i0, ip / (p + 1.0));
  suite.reports[1] = make_identity_report(
      Identity::pohozaev, 1.5 * c * i1 - 0.5 * (c - 1.0) * i0,
      -ip / ((p + 1.0) * (p + 2.0)));
  suite.reports[2] = make_identity_report(
      Identity::combined, c * (3.0 * p + 8.0) / (2.0 * (p + 2.0)) * i1,
      (c - 1.0) * p / (2.0 * (p + 2.0)) * i0);
  suite.edge_value = std::max(std::abs(Q[0]), std::abs(Q[Q.size() - 1]));
  if (suite.edge_value >= 1e-10) {
    suite.warnings.push_back(
        "profile has not decayed at the interval ends (|Q| = " +
        std::to_string(suite.edge_value) +
        "); identity gaps include truncation of the whole-line integrals");
  }
  return suite;
}

IdentitySuite check_identities(const SolitaryProfile& profile) {
  return check_identities(profile.Q, profile.c, profile.p);
}

double ConvergenceTable::fitted_order() const {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& row : rows) {
    if (!(row.error > 0.0) || row.resolution <= 0) continue;
    const double x = std::log(static_cast<double>(row.resolution));
    const double y = -std::log(row.error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) return kNaN;
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ConvergenceTable make_convergence_table(const std::vector<long>& resolutions,
                                        const std::vector<double>& errors) {
  if (resolutions.size() != errors.size()) {
    throw ConfigError("convergence table: resolutions and errors differ in length");
  }
  ConvergenceTable table;
  for (std::size_t i = 0; i < resolutions.size(); ++i) {
    ConvergenceRow row{resolutions[i], errors[i], kNaN};
    if (i > 0) {
      row.observed_order = std::log(errors[i - 1] / errors[i]) /
                           std::log(static_cast<double>(resolutions[i]) /
                                    static_cast<double>(resolutions[i - 1]));
    }
    table.rows.push_back(row);
  }
  return table;
}

ConvergenceTable temporal_convergence(const Field& u0, double p, double T,
                                      const std::vector<long>& M_list,
                                      long M_ref) {
  if (M_list.empty()) throw ConfigError("temporal convergence: empty M list");
  for (std::size_t i = 1; i < M_list.size(); ++i) {
    if (M_list[i] <= M_list[i - 1]) {
      throw ConfigError("temporal convergence: M list must be increasing");
    }
  }
  auto run = [&](long M) {
    return evolve(u0, p, T, M, M).final_field();
  };
  auto ref_future = std::async(std::launch::async, run, M_ref);
  std::vector<std::future<Field>> futures;
  for (long M : M_list) futures.push_back(std::async(std::launch::async, run, M));
  const Field ref = ref_future.get();
  std::vector<double> errors;
  for (auto& f : futures) errors.push_back(max_abs_diff(f.get().values, ref.values));
  return make_convergence_table(M_list, errors);
}

ConvergenceTable spatial_convergence(const Field& u0_ref, double p, double T,
                                     const std::vector<int>& N_list, long M) {
  if (N_list.empty()) throw ConfigError("spatial convergence: empty N list");
  const Grid& ref_grid = u0_ref.grid;
  auto run = [&](int N) {
    const Grid g = make_grid(ref_grid.a(), ref_grid.b(), N);
    return evolve(resample(u0_ref, g), p, T, M, M).final_field();
  };
  auto ref_future = std::async(std::launch::async, [&] {
    return evolve(u0_ref, p, T, M, M).final_field();
  });
  std::vector<std::future<Field>> futures;
  for (int N : N_list) futures.push_back(std::async(std::launch::async, run, N));
  const Field ref = ref_future.get();
  std::vector<long> resolutions;
  std::vector<double> errors;
  for (std::size_t i = 0; i < N_list.size(); ++i) {
    const Field u = futures[i].get();
    resolutions.push_back(N_list[i]);
    errors.push_back(max_abs_diff(u.values, restrict_to(ref, u.grid).values));
  }
  return make_convergence_table(resolutions, errors);
}

PropagationReport propagate_profile(const SolitaryProfile& profile, double T,
                                    long M, long snapshot_stride) {
  PropagationReport report{.record = evolve(profile.spectrum, profile.p, T, M, snapshot_stride)};
  const Field expected = translate(profile.Q, profile.c * T);
  report.shape_error = max_abs_diff(report.record.final_field().values, expected.values) /
                       max_abs(profile.Q.values);
  report.energy_drift = report.record.max_energy_drift();
  report.initial_energy = report.record.energy_series.front();
  return report;
}

PeakSample locate_peaks(const Field& u, double t, double min_height,
                        double min_separation) {
  const int n = u.size();
  const double dx = u.grid.spacing();
  struct Max {
    double x;
    double h;
  };
  std::vector<Max> maxima;
  for (int j = 0; j < n; ++j) {
    const double ym = u[(j - 1 + n) % n];
    const double y0 = u[j];
    const double yp = u[(j + 1) % n];
    if (y0 > ym && y0 >= yp) {
      double h = 0.0;
      const double off = parabola_vertex(ym, y0, yp, h);
      maxima.push_back({u.grid.node(j) + off * dx, h});
    }
  }
  PeakSample s;
  s.t = t;
  if (maxima.empty()) return s;
  std::sort(maxima.begin(), maxima.end(), [](const Max& l, const Max& r) { return l.h > r.h; });
  s.x_main = maxima[0].x;
  s.amplitude = maxima[0].h;
  for (std::size_t i = 1; i < maxima.size(); ++i) {
    if (maxima[i].h < min_height) break;
    if (std::abs(maxima[i].x - s.x_main) < min_separation) continue;
    s.has_second = true;
    s.x_second = maxima[i].x;
    s.second_amplitude = maxima[i].h;
    break;
  }
  return s;
}

void validate(const CollisionConfig& cfg) {
  if (!(cfg.c1 > cfg.c2)) {
    throw ConfigError("collide: c1 must exceed c2 for the faster wave to overtake");
  }
  if (!(cfg.x1 < cfg.x2)) {
    throw ConfigError("collide: the faster wave must start behind (x1 < x2)");
  }
  if (!(cfg.x1 > cfg.a && cfg.x2 < cfg.b)) {
    throw ConfigError("collide: initial positions must lie inside the domain");
  }
  if (cfg.M < 1 || cfg.snapshot_stride < 1 || !(cfg.T > 0.0)) {
    throw ConfigError("collide: M, snapshot stride and T must be positive");
  }
}

CollisionReport collision_experiment(const CollisionConfig& cfg) {
  validate(cfg);
  const Grid grid = make_grid(cfg.a, cfg.b, cfg.N);
  const double mid = 0.5 * (cfg.a + cfg.b);

  PetviashviliConfig pc;
  pc.p = cfg.p;
  pc.grid = grid;
  pc.c = cfg.c1;
  const SolitaryProfile fast = solve_profile(pc);
  pc.c = cfg.c2;
  const SolitaryProfile slow = solve_profile(pc);

  SpectralField u0 = translate(fast.spectrum, cfg.x1 - mid);
  const SpectralField s2 = translate(slow.spectrum, cfg.x2 - mid);
  for (int i = 0; i < grid.size(); ++i) u0.coeffs[i] += s2.coeffs[i];

  CollisionReport rep{.record = evolve(u0, cfg.p, cfg.T, cfg.M, cfg.snapshot_stride)};
  rep.peak1 = fast.peak_amplitude();
  rep.peak2 = slow.peak_amplitude();

  const double min_height = 0.5 * std::min(rep.peak1, rep.peak2);
  const double separation = 2.0;
  for (std::size_t i = 0; i < rep.record.snapshots.size(); ++i) {
    rep.peaks.push_back(
        locate_peaks(rep.record.snapshots[i], rep.record.times[i], min_height, separation));
  }

  // The fast (main) wave is behind while the other peak sits to its right.
  double last_behind = kNaN;
  std::size_t last_behind_idx = 0;
  for (std::size_t i = 0; i < rep.peaks.size(); ++i) {
    const auto& pk = rep.peaks[i];
    if (pk.has_second && pk.x_second > pk.x_main) {
      last_behind = pk.t;
      last_behind_idx = i;
    }
  }
  if (!std::isnan(last_behind)) {
    for (std::size_t i = last_behind_idx + 1; i < rep.peaks.size(); ++i) {
      const auto& pk = rep.peaks[i];
      if (pk.has_second && pk.x_second < pk.x_main) {
        rep.overtaken = true;
        rep.crossover_time = 0.5 * (last_behind + pk.t);
        break;
      }
    }
  }
  if (rep.overtaken) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rep.peaks.size(); ++i) {
      if (std::abs(rep.peaks[i].t - rep.crossover_time) <
          std::abs(rep.peaks[best].t - rep.crossover_time)) {
        best = i;
      }
    }
    rep.collision_amplitude = rep.peaks[best].amplitude;
  }

  const PeakSample& end = rep.peaks.back();
  rep.fast_position = end.x_main;
  rep.slow_position = end.has_second ? end.x_second : kNaN;
  const Field& uT = rep.record.final_field();
  if (end.has_second) {
    rep.tail_window_lo = rep.slow_position - 60.0;
    rep.tail_window_hi = rep.slow_position - 10.0;
    const Field fitted = inverse_dft(translate(slow.spectrum, rep.slow_position - mid));
    for (int j = 0; j < grid.size(); ++j) {
      const double x = grid.node(j);
      if (x < rep.tail_window_lo || x > rep.tail_window_hi) continue;
      rep.tail_amplitude = std::max(rep.tail_amplitude, std::abs(uT[j]));
      rep.radiation_amplitude = std::max(rep.radiation_amplitude, std::abs(uT[j] - fitted[j]));
    }
  }

  const double e0 = rep.record.energy_series.front();
  for (double e : rep.record.energy_series) {
    rep.relative_energy_drift = std::max(rep.relative_energy_drift, std::abs(e - e0) / e0);
  }

  if (cfg.refine && end.has_second) {
    auto final_at = [&](long M) {
      return inverse_dft(evolve(u0, cfg.p, cfg.T, M, M).final_spectrum);
    };
    auto f2 = std::async(std::launch::async, final_at, 2 * cfg.M);
    auto f4 = std::async(std::launch::async, final_at, 4 * cfg.M);
    const Field u2 = f2.get();
    const Field u4 = f4.get();
    for (int j = 0; j < grid.size(); ++j) {
      const double x = grid.node(j);
      if (x < rep.tail_window_lo || x > rep.tail_window_hi) continue;
      rep.tail_error_m = std::max(rep.tail_error_m, std::abs(uT[j] - u4[j]));
      rep.tail_error_2m = std::max(rep.tail_error_2m, std::abs(u2[j] - u4[j]));
    }
    rep.refined = true;
    rep.tail_error_ratio = rep.tail_error_m / rep.tail_error_2m;
  }
  return rep;
}

}  // namespace rosenau
