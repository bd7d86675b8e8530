#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rosenau/errors.hpp"
#include "rosenau/jacobi.hpp"

using namespace rosenau;

namespace {

// F(phi, k) by composite Simpson, independent of the Carlson code.
double simpson_f(double phi, double k) {
  const int n = 20000;
  const double h = phi / n;
  auto f = [k](double t) { return 1.0 / std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t)); };
  double s = f(0.0) + f(phi);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0;
}

// sn by inverting u = F(phi, k) with bisection, for 0 <= u <= K.
double sn_by_inversion(double u, double k) {
  double lo = 0.0, hi = 0.5 * std::numbers::pi;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (simpson_f(mid, k) < u ? lo : hi) = mid;
  }
  return std::sin(0.5 * (lo + hi));
}

}  // namespace

TEST_CASE("zero modulus reduces to circular functions") {
  for (double u : {0.3, 1.0, 2.5}) {
    const auto v = jacobi_sncndn({u, 0.0});
    CHECK(std::abs(v.sn - std::sin(u)) < 1e-13);
    CHECK(std::abs(v.cn - std::cos(u)) < 1e-13);
    CHECK(v.dn == 1.0);
  }
}

TEST_CASE("values at the origin") {
  for (double k : {0.0, 0.3, 0.985171, 0.999}) {
    const auto v = jacobi_sncndn({0.0, k});
    CHECK(v.sn == 0.0);
    CHECK(v.cn == 1.0);
    CHECK(v.dn == 1.0);
  }
}

TEST_CASE("modulus outside [0, 1) is rejected") {
  CHECK_THROWS_AS(jacobi_sn({0.5, 1.0}), ConfigError);
  CHECK_THROWS_AS(jacobi_sn({0.5, -0.1}), ConfigError);
  CHECK_THROWS_AS(complete_elliptic_k(1.0), ConfigError);
}

TEST_CASE("sn against integral inversion") {
  const double k = 0.985171;
  CHECK(std::abs(jacobi_sn({1.2, k}) - sn_by_inversion(1.2, k)) < 1e-12);
  for (double kk : {0.2, 0.7, 0.9}) {
    for (double u : {0.1, 0.8, 1.3}) {
      CHECK(std::abs(jacobi_sn({u, kk}) - sn_by_inversion(u, kk)) < 1e-12);
    }
  }
}

TEST_CASE("Pythagorean identities on random arguments") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> ud(-20.0, 20.0), kd(0.0, 0.999999);
  for (int i = 0; i < 2000; ++i) {
    const double u = ud(rng), k = kd(rng);
    const auto v = jacobi_sncndn({u, k});
    REQUIRE(std::abs(v.sn * v.sn + v.cn * v.cn - 1.0) < 1e-12);
    REQUIRE(std::abs(v.dn * v.dn + k * k * v.sn * v.sn - 1.0) < 1e-12);
  }
}

TEST_CASE("derivative of sn is cn dn") {
  const double k = 0.8, h = 1e-5;
  for (double u : {-2.0, 0.4, 1.7, 5.0}) {
    const double d = (jacobi_sn({u + h, k}) - jacobi_sn({u - h, k})) / (2 * h);
    CHECK(d == doctest::Approx(jacobi_cn({u, k}) * jacobi_dn({u, k})).epsilon(1e-8));
  }
}

TEST_CASE("complete integral") {
  CHECK(complete_elliptic_k(0.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  const double lemniscate = std::pow(std::tgamma(0.25), 2) / (4.0 * std::sqrt(std::numbers::pi));
  CHECK(complete_elliptic_k(1.0 / std::sqrt(2.0)) == doctest::Approx(lemniscate).epsilon(1e-14));
  for (double k : {0.1, 0.5, 0.985171}) {
    CHECK(incomplete_elliptic_f(std::numbers::pi / 2, k) ==
          doctest::Approx(complete_elliptic_k(k)).epsilon(1e-13));
    CHECK(incomplete_elliptic_f(0.7, k) == doctest::Approx(simpson_f(0.7, k)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(incomplete_elliptic_f(2.0, 0.5), ConfigError);
}

TEST_CASE("quarter-period values and periodicity") {
  for (double k : {0.3, 0.985171}) {
    const double K = complete_elliptic_k(k);
    const auto q = jacobi_sncndn({K, k});
    CHECK(q.sn == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(q.cn) < 1e-7);
    CHECK(q.dn == doctest::Approx(std::sqrt(1 - k * k)).epsilon(1e-6));
    for (double u : {0.2, 1.1, 2.9}) {
      const auto v = jacobi_sncndn({u, k});
      const auto half = jacobi_sncndn({u + 2 * K, k});
      const auto full = jacobi_sncndn({u + 4 * K, k});
      CHECK(half.sn == doctest::Approx(-v.sn).epsilon(1e-11));
      CHECK(half.cn == doctest::Approx(-v.cn).epsilon(1e-11));
      CHECK(half.dn == doctest::Approx(v.dn).epsilon(1e-11));
      CHECK(full.sn == doctest::Approx(v.sn).epsilon(1e-11));
      CHECK(full.cn == doctest::Approx(v.cn).epsilon(1e-11));
    }
  }
}

TEST_CASE("tn is tagged at its poles") {
  const double k = 1.0 / std::sqrt(2.0);
  const double K = complete_elliptic_k(k);
  CHECK(jacobi_tn({K, k}).pole);
  CHECK(jacobi_tn({3 * K, k}).pole);
  const auto v = jacobi_tn({0.5, k});
  CHECK_FALSE(v.pole);
  CHECK(v.value == doctest::Approx(jacobi_sn({0.5, k}) / jacobi_cn({0.5, k})));
}

TEST_CASE("odd and even symmetry") {
  for (double u : {0.4, 2.2}) {
    const auto p = jacobi_sncndn({u, 0.6});
    const auto m = jacobi_sncndn({-u, 0.6});
    CHECK(m.sn == doctest::Approx(-p.sn).epsilon(1e-14));
    CHECK(m.cn == doctest::Approx(p.cn).epsilon(1e-14));
    CHECK(m.dn == doctest::Approx(p.dn).epsilon(1e-14));
  }
}
