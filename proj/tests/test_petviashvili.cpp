#include <doctest.h>

#include <cmath>

#include "rosenau/petviashvili.hpp"

using namespace rosenau;

namespace {

const SolitaryProfile& reference_profile() {
  static const SolitaryProfile prof = solve_profile(PetviashviliConfig{});
  return prof;
}

int sign_changes(const std::vector<double>& v, int from, int to, double floor) {
  int count = 0;
  double last = 0.0;
  for (int j = from; j != to; j += (to > from ? 1 : -1)) {
    if (std::abs(v[j]) < floor) continue;
    if (last != 0.0 && (v[j] > 0) != (last > 0)) ++count;
    last = v[j];
  }
  return count;
}

}  // namespace

TEST_CASE("linear symbol") {
  const Grid g = make_grid(-1.0, 1.0, 8);
  const auto L = linear_symbol(g, 2.0);
  CHECK(L[0] == doctest::Approx(1.0));
  const double K = g.angular(3);
  CHECK(L[3] == doctest::Approx(2.0 * K * K * K * K + 1.0));
}

TEST_CASE("default exponent") {
  PetviashviliConfig cfg;
  cfg.p = 3.0;
  CHECK(cfg.effective_nu() == doctest::Approx(4.0 / 3.0));
  cfg.nu = 1.5;
  CHECK(cfg.effective_nu() == 1.5);
}

TEST_CASE("c = 1 is rejected") {
  PetviashviliConfig cfg;
  cfg.c = 1.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  CHECK_THROWS_AS(solve_profile(cfg), ConfigError);
}

TEST_CASE("zero seed is rejected") {
  PetviashviliConfig cfg;
  cfg.initial_guess = Field(cfg.grid);
  CHECK_THROWS_AS(solve_profile(cfg), ConfigError);
}

TEST_CASE("stabilizing factor scales like alpha^-p") {
  PetviashviliConfig cfg;
  const SpectralField s = forward_dft(cfg.seed());
  SpectralField twice = s;
  for (auto& z : twice.coeffs) z *= 2.0;
  CHECK(stabilizing_factor(twice, cfg) ==
        doctest::Approx(0.5 * stabilizing_factor(s, cfg)).epsilon(1e-12));
  cfg.p = 2.0;
  CHECK(stabilizing_factor(twice, cfg) ==
        doctest::Approx(0.25 * stabilizing_factor(s, cfg)).epsilon(1e-12));
}

TEST_CASE("c = 2, p = 1 profile") {
  const auto& prof = reference_profile();
  const auto& last = prof.final_diagnostics();
  CHECK(prof.iterations <= 200);
  CHECK(last.residual < 1e-10);
  CHECK(last.factor_error < 1e-10);
  CHECK(last.error_max < 1e-12);
  CHECK(prof.warnings.empty());
  CHECK(prof.peak_amplitude() == doctest::Approx(2.6576).epsilon(1e-4));

  const auto& q = prof.Q.values;
  const int n = prof.Q.size();
  const int mid = n / 2;
  CHECK(std::abs(q[mid]) == doctest::Approx(max_abs(q)));
  double asym = 0.0;
  for (int i = 1; i < mid; ++i) asym = std::max(asym, std::abs(q[mid + i] - q[mid - i]));
  CHECK(asym < 1e-8 * max_abs(q));

  CHECK(sign_changes(q, mid, n, 1e-14) >= 2);
  CHECK(sign_changes(q, mid, -1, 1e-14) >= 2);

  // the converged profile is a fixed point of the map
  PetviashviliConfig cfg;
  const SpectralField again = iterate_once(prof.spectrum, cfg);
  double diff = 0.0;
  for (int s = 0; s < n; ++s) diff = std::max(diff, std::abs(again.coeffs[s] - prof.spectrum.coeffs[s]));
  CHECK(diff < 1e-12);
  CHECK(max_abs(residual_operator(prof.spectrum, 2.0, 1.0).values) <= 1e-10);
  CHECK(max_abs(residual_operator(prof.Q, 2.0, 1.0).values) < 1e-9);
  CHECK(stabilizing_factor(prof.spectrum, cfg) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("the profile does not depend on where the seed sits") {
  PetviashviliConfig cfg;
  cfg.initial_guess = sample(cfg.grid, [](double x) { return 1.5 * std::exp(-(x - 7.3) * (x - 7.3) / 3.0); });
  const auto moved = solve_profile(cfg);
  CHECK(max_abs_diff(moved.Q.values, reference_profile().Q.values) < 1e-8);
}

TEST_CASE("negative speed") {
  PetviashviliConfig cfg;
  cfg.c = -2.0;
  cfg.initial_guess = sample(cfg.grid, [](double x) { return -std::exp(-x * x); });
  const auto prof = solve_profile(cfg);
  CHECK(prof.final_diagnostics().residual < 1e-10);
  CHECK(prof.peak_amplitude() < 0.0);
}

TEST_CASE("0 < c < 1 carries a warning and does not produce a wave") {
  PetviashviliConfig cfg;
  cfg.c = 0.5;
  CHECK(cfg.denominator_changes_sign());
  bool warned = false;
  try {
    const auto prof = solve_profile(cfg);
    warned = !prof.warnings.empty();
  } catch (const NonConvergenceError& e) {
    warned = std::string(e.what()).find("changes sign") != std::string::npos;
  } catch (const NumericalError& e) {
    warned = true;
  }
  CHECK(warned);
}

TEST_CASE("iteration cap") {
  PetviashviliConfig cfg;
  cfg.max_iters = 3;
  try {
    solve_profile(cfg);
    FAIL("expected non-convergence");
  } catch (const NonConvergenceError& e) {
    CHECK(e.history().size() == 3);
    CHECK(e.kind() == ErrorKind::Numerical);
  }
}

TEST_CASE("higher nonlinearity gives smaller waves") {
  double previous = reference_profile().peak_amplitude();
  for (double p : {2.0, 4.0}) {
    PetviashviliConfig cfg;
    cfg.p = p;
    const auto prof = solve_profile(cfg);
    CHECK(prof.peak_amplitude() < previous);
    previous = prof.peak_amplitude();
  }
}
