#include "rosenau/jacobi.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rosenau/errors.hpp"

namespace rosenau {

namespace {

void check_modulus(double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    std::ostringstream msg;
    msg << "elliptic modulus must satisfy 0 <= k < 1, got " << k;
    throw ConfigError(msg.str());
  }
}

// Carlson's symmetric integral R_F(x, y, z) by duplication.
double carlson_rf(double x, double y, double z) {
  constexpr double tol = 1e-4;  // error ~ tol^6 / 4 after the series
  for (int it = 0; it < 100; ++it) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sx * (sy + sz) + sy * sz;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    const double mean = (x + y + z) / 3.0;
    const double dx = (mean - x) / mean, dy = (mean - y) / mean, dz = (mean - z) / mean;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < tol) {
      const double e2 = dx * dy - dz * dz;
      const double e3 = dx * dy * dz;
      return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) /
             std::sqrt(mean);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

JacobiValues jacobi_sncndn(const JacobiArgs& args) {
  const double k = args.modulus;
  check_modulus(k);
  const double u = args.u;
  if (u == 0.0) return {0.0, 1.0, 1.0};
  if (k == 0.0) return {std::sin(u), std::cos(u), 1.0};

  // Descending ladder a_{n+1} = (a_n + b_n)/2, b_{n+1} = sqrt(a_n b_n),
  // c_{n+1} = (a_n - b_n)/2, until c_n is negligible.
  constexpr int kMaxLevels = 32;
  std::array<double, kMaxLevels + 1> a{}, c{};
  a[0] = 1.0;
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  c[0] = k;
  int n = 0;
  while (n < kMaxLevels &&
         std::abs(c[n]) > std::numeric_limits<double>::epsilon() * a[n]) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  // Ascend: phi_{n-1} = (phi_n + asin(c_n/a_n sin phi_n)) / 2.
  double phi = std::ldexp(a[n] * u, n);
  double phi_prev = phi;
  for (int level = n; level > 0; --level) {
    phi_prev = phi;
    phi = 0.5 * (phi + std::asin(c[level] / a[level] * std::sin(phi)));
  }
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  // dn = cos(phi_0) / cos(phi_1 - phi_0) loses accuracy where both cosines
  // vanish (near odd multiples of K); fall back to the square root there.
  double dn = std::abs(cn) > 1e-3 ? cn / std::cos(phi_prev - phi)
                                  : std::sqrt(std::max(0.0, (1.0 - k * sn) * (1.0 + k * sn)));
  return {sn, cn, dn};
}

double jacobi_sn(const JacobiArgs& args) { return jacobi_sncndn(args).sn; }
double jacobi_cn(const JacobiArgs& args) { return jacobi_sncndn(args).cn; }
double jacobi_dn(const JacobiArgs& args) { return jacobi_sncndn(args).dn; }

RealOrPole jacobi_tn(const JacobiArgs& args) {
  const auto v = jacobi_sncndn(args);
  if (std::abs(v.cn) < 1e-12) return RealOrPole::at_pole();
  return RealOrPole::of(v.sn / v.cn);
}

double complete_elliptic_k(double modulus) {
  check_modulus(modulus);
  double a = 1.0;
  double b = std::sqrt((1.0 - modulus) * (1.0 + modulus));
  for (int it = 0; it < 64 && std::abs(a - b) > 1e-16 * a; ++it) {
    const double next = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next;
  }
  return std::numbers::pi / (2.0 * a);
}

double incomplete_elliptic_f(double phi, double modulus) {
  check_modulus(modulus);
  if (std::abs(phi) > 0.5 * std::numbers::pi + 1e-15) {
    throw ConfigError("incomplete_elliptic_f: amplitude must lie in [-pi/2, pi/2]");
  }
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  const double ks = modulus * s;
  return s * carlson_rf(c * c, (1.0 - ks) * (1.0 + ks), 1.0);
}

}  // namespace rosenau
