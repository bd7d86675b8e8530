#pragma once

// Jacobi elliptic functions by the arithmetic-geometric mean (descending
// Landen) ladder.
//
// The second argument is the *modulus* k, not the parameter m = k^2:
// sn(u, k) inverts u = F(phi, k) = int_0^phi dtheta / sqrt(1 - k^2 sin^2 theta).

#include <limits>

namespace rosenau {

// A real value, or a tagged pole where the function is unbounded.
struct RealOrPole {
  double value = 0.0;
  bool pole = false;

  static RealOrPole of(double v) { return {v, false}; }
  static RealOrPole at_pole() { return {std::numeric_limits<double>::infinity(), true}; }
};

struct JacobiArgs {
  double u = 0.0;
  double modulus = 0.0;  // 0 <= modulus < 1
};

struct JacobiValues {
  double sn;
  double cn;
  double dn;
};

// Throws ConfigError unless 0 <= modulus < 1.
JacobiValues jacobi_sncndn(const JacobiArgs& args);

double jacobi_sn(const JacobiArgs& args);
double jacobi_cn(const JacobiArgs& args);
double jacobi_dn(const JacobiArgs& args);
// sn/cn; a pole when |cn| < 1e-12.
RealOrPole jacobi_tn(const JacobiArgs& args);

// Complete integral K(k) = pi / (2 AGM(1, sqrt(1 - k^2))).
double complete_elliptic_k(double modulus);

// Incomplete integral F(phi, k) for |phi| <= pi/2, via Carlson's R_F.
double incomplete_elliptic_f(double phi, double modulus);

}  // namespace rosenau
