#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rosenau/errors.hpp"
#include "rosenau/spectral.hpp"

using namespace rosenau;

namespace {

Field random_field(const Grid& g, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  Field f(g);
  for (double& v : f.values) v = dist(rng);
  return f;
}

// Naive O(N^2) transform with the documented convention.
std::vector<complex> naive_dft(const Field& f) {
  const int n = f.size();
  std::vector<complex> out(n);
  for (int s = 0; s < n; ++s) {
    const int k = f.grid.wavenumber(s);
    complex acc = 0.0;
    for (int j = 0; j < n; ++j) {
      acc += f[j] * std::polar(1.0, -2.0 * std::numbers::pi * k * j / n);
    }
    out[s] = acc / static_cast<double>(n);
  }
  return out;
}

}  // namespace

TEST_CASE("grid rejects bad intervals and sizes") {
  CHECK_THROWS_AS(make_grid(1.0, 1.0, 16), ConfigError);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 15), ConfigError);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 2), ConfigError);
  CHECK_THROWS_AS(make_grid(0.0, INFINITY, 8), ConfigError);
}

TEST_CASE("wrapped storage order") {
  const Grid g = make_grid(-1.0, 1.0, 8);
  CHECK(g.wavenumber(0) == 0);
  CHECK(g.wavenumber(3) == 3);
  CHECK(g.wavenumber(4) == -4);
  CHECK(g.wavenumber(7) == -1);
  for (int s = 0; s < 8; ++s) CHECK(g.slot_of(g.wavenumber(s)) == s);
  CHECK(g.scale() == doctest::Approx(std::numbers::pi));
  CHECK(g.node(4) == doctest::Approx(0.0));
}

TEST_CASE("forward transform agrees with the naive sum") {
  std::mt19937_64 rng(7);
  const Grid g = make_grid(-3.0, 5.0, 24);
  const Field f = random_field(g, rng);
  const auto fast = forward_dft(f);
  const auto slow = naive_dft(f);
  for (int s = 0; s < g.size(); ++s) CHECK(std::abs(fast.coeffs[s] - slow[s]) < 1e-14);
}

TEST_CASE("round trip on 100 random fields") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 * (2 + static_cast<int>(rng() % 300));
    const Grid g = make_grid(-10.0, 10.0, n);
    const Field f = random_field(g, rng);
    const Field back = inverse_dft(forward_dft(f));
    REQUIRE(max_abs_diff(f.values, back.values) < 1e-12 * std::max(1.0, max_abs(f.values)));
  }
}

TEST_CASE("Parseval") {
  std::mt19937_64 rng(11);
  for (int n : {16, 64, 250, 1024}) {
    const Grid g = make_grid(0.0, 1.0, n);
    const Field f = random_field(g, rng);
    const auto s = forward_dft(f);
    double nodal = 0.0, modal = 0.0;
    for (double v : f.values) nodal += v * v;
    for (const auto& z : s.coeffs) modal += std::norm(z);
    CHECK(nodal / n == doctest::Approx(modal).epsilon(1e-12));
  }
}

TEST_CASE("linearity") {
  std::mt19937_64 rng(3);
  const Grid g = make_grid(0.0, 2.0, 128);
  const Field f = random_field(g, rng), h = random_field(g, rng);
  Field combo(g);
  for (int j = 0; j < g.size(); ++j) combo[j] = 2.5 * f[j] - 0.75 * h[j];
  const auto sf = forward_dft(f), sh = forward_dft(h), sc = forward_dft(combo);
  for (int s = 0; s < g.size(); ++s) {
    CHECK(std::abs(sc.coeffs[s] - (2.5 * sf.coeffs[s] - 0.75 * sh.coeffs[s])) < 1e-14);
  }
}

TEST_CASE("non-finite input is rejected") {
  const Grid g = make_grid(0.0, 1.0, 8);
  Field f(g);
  f[3] = NAN;
  CHECK_THROWS_AS(forward_dft(f), NumericalError);
}

TEST_CASE("imaginary residue raises a symmetry error") {
  const Grid g = make_grid(0.0, 1.0, 16);
  SpectralField s(g);
  s.coeffs[1] = 1.0;  // e^{ikx} without its conjugate partner
  CHECK(imaginary_residue(s) > 0.5);
  CHECK_THROWS_AS(inverse_dft(s), SymmetryError);
  s.coeffs[g.slot_of(-1)] = 1.0;
  CHECK(imaginary_residue(s) < 1e-15);
  CHECK_NOTHROW(inverse_dft(s));
}

TEST_CASE("derivatives of single modes are exact") {
  const Grid g = make_grid(-4.0, 6.0, 64);
  const double w = 5.0 * g.scale();
  const Field f = sample(g, [&](double x) { return std::sin(w * x) + 0.5 * std::cos(2.0 * g.scale() * x); });
  const double w2 = 2.0 * g.scale();
  const Field d1 = spectral_derivative(f, 1);
  const Field d2 = spectral_derivative(f, 2);
  const Field d3 = spectral_derivative(f, 3);
  const Field d4 = spectral_derivative(f, 4);
  for (int j = 0; j < g.size(); ++j) {
    const double x = g.node(j);
    CHECK(d1[j] == doctest::Approx(w * std::cos(w * x) - 0.5 * w2 * std::sin(w2 * x)).epsilon(1e-12).scale(10));
    CHECK(d2[j] == doctest::Approx(-w * w * std::sin(w * x) - 0.5 * w2 * w2 * std::cos(w2 * x)).epsilon(1e-12).scale(100));
    CHECK(d3[j] == doctest::Approx(-w * w * w * std::cos(w * x) + 0.5 * w2 * w2 * w2 * std::sin(w2 * x)).epsilon(1e-11).scale(1e3));
    CHECK(d4[j] == doctest::Approx(std::pow(w, 4) * std::sin(w * x) + 0.5 * std::pow(w2, 4) * std::cos(w2 * x)).epsilon(1e-11).scale(1e4));
  }
  CHECK_THROWS_AS(spectral_derivative(f, 0), ConfigError);
  CHECK_THROWS_AS(spectral_derivative(f, 5), ConfigError);
}

TEST_CASE("odd derivatives drop the Nyquist mode") {
  const Grid g = make_grid(0.0, 1.0, 16);
  Field f(g);
  for (int j = 0; j < g.size(); ++j) f[j] = (j % 2 == 0) ? 1.0 : -1.0;
  const auto d1 = spectral_derivative(forward_dft(f), 1);
  CHECK(std::abs(d1.coeffs[g.nyquist_slot()]) == 0.0);
  const Field d2 = spectral_derivative(f, 2);
  const double k = g.scale() * 8.0;
  CHECK(d2[0] == doctest::Approx(-k * k));
}

TEST_CASE("quadrature is spectrally accurate for periodic integrands") {
  const Grid g = make_grid(0.0, 2.0 * std::numbers::pi, 32);
  const Field f = sample(g, [](double x) { return std::exp(std::cos(x)); });
  CHECK(quadrature(f) == doctest::Approx(2.0 * std::numbers::pi * std::cyl_bessel_i(0.0, 1.0)).epsilon(1e-14));
}

TEST_CASE("translation by one node is a roll") {
  std::mt19937_64 rng(5);
  const Grid g = make_grid(-1.0, 3.0, 40);
  const Field f = random_field(g, rng);
  const Field t = translate(f, g.spacing());
  for (int j = 0; j < g.size(); ++j) {
    CHECK(t[(j + 1) % g.size()] == doctest::Approx(f[j]).epsilon(1e-12));
  }
}

TEST_CASE("translation equivariance of smooth fields") {
  const Grid g = make_grid(-20.0, 20.0, 256);
  auto bump = [](double x) { return std::exp(-x * x); };
  const Field f = sample(g, bump);
  for (double shift : {0.37, -3.1, 7.25}) {
    const Field t = translate(f, shift);
    const Field exact = sample(g, [&](double x) { return bump(x - shift); });
    CHECK(max_abs_diff(t.values, exact.values) < 1e-13);
    // translate then differentiate = differentiate then translate
    const Field a = spectral_derivative(t, 2);
    const Field b = translate(spectral_derivative(f, 2), shift);
    CHECK(max_abs_diff(a.values, b.values) < 1e-12);
  }
}

TEST_CASE("resample up and back down is the identity") {
  std::mt19937_64 rng(9);
  const Grid coarse = make_grid(0.0, 1.0, 32);
  const Grid fine = make_grid(0.0, 1.0, 96);
  const Field f = random_field(coarse, rng);
  const Field up = resample(f, fine);
  for (int j = 0; j < coarse.size(); ++j) CHECK(up[3 * j] == doctest::Approx(f[j]).epsilon(1e-12));
  const Field down = resample(up, coarse);
  CHECK(max_abs_diff(down.values, f.values) < 1e-12);
  CHECK(max_abs_diff(resample(f, coarse).values, f.values) == 0.0);
  CHECK_THROWS_AS(resample(f, make_grid(0.0, 2.0, 32)), ConfigError);
}
