#pragma once

// Closed-form traveling waves u(x, t) = F(k x - c t) of the quadratic Rosenau
// equation u_t + u_x + (u^2)_x + u_xxxxt = 0, with
//
//   F = a0 + a2 phi^2 + a4 phi^4,   (phi')^2 = P(phi) = c0 + c2 phi^2 + c4 phi^4,
//
//   a0 = (112 c c2^2 k^4 + c - k) / (2k),  a2 = 560 c c2 c4 k^3,
//   a4 = 840 c c4^2 k^3,                   c0 = 2 c2^2 / (9 c4).
//
// phi is built from Jacobi functions; which branch applies depends on the
// signs of c2, c4 and on the root interval phi lives in:
//
//   I    c2 = 0, c4 > 0      phi = eps / (sqrt(c4) (xi - xi0))
//   IIa  c4 > 0, c2 < 0      phi >= phi1, R = 4 - 2 sqrt2 (singular)
//   IIb  c4 > 0, c2 < 0      phi3 <= phi <= phi2, R = 2 (sqrt2 - 1)
//   IIc  c4 > 0, c2 < 0      phi <= phi4, R = 4 - 2 sqrt2 (singular)
//   IId  c4 < 0, c2 > 0      phi4 <= phi <= phi3, R = m = 3 - 2 sqrt2
//   IIe  c4 < 0, c2 > 0      phi2 <= phi <= phi1, R = m = 3 - 2 sqrt2
//   IIf  c4 > 0, c2 > 0      phi = b tn(sqrt(2 c2 / 3)(xi - xi0), 1/sqrt2)
//
// The Jacobi second argument is the modulus (m, with m^2 the parameter).

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rosenau/jacobi.hpp"

namespace rosenau {

enum class EllipticCase { I, IIa, IIb, IIc, IId, IIe, IIf };

std::string to_string(EllipticCase kind);
// Accepts "I", "IIa" ... "IIf" (case-insensitive). Throws ConfigError.
EllipticCase parse_elliptic_case(const std::string& name);

struct EllipticCaseParams {
  EllipticCase kind = EllipticCase::IIb;
  double c = 1.0;
  double k = 1.0;
  double c2 = -1.0;
  double c4 = 1.0;
  double xi0 = 0.0;
  // Branch sign; only changes phi in Cases I and IIf (u is even in phi).
  double epsilon = 1.0;

  double a0 = 0.0, a2 = 0.0, a4 = 0.0, c0 = 0.0;
  // phi1 > phi2 > phi3 > phi4 for the real-root cases, purely imaginary
  // +-i sqrt(c2/3c4), +-i sqrt(2c2/3c4) for IIf, all zero for Case I.
  std::array<std::complex<double>, 4> roots{};
  // NaN where a branch does not use the quantity (m, g, R in Case I; R in IIf).
  double modulus = 0.0;
  double g = 0.0;
  double R = 0.0;
  // Factor in front of (xi - xi0) inside sn / tn.
  double argument_scale = 0.0;

  bool has_poles() const;
  // Period of phi in xi (infinite for Case I).
  double period() const;
};

// Throws ConfigError naming the case and the offending parameter when the
// sign constraints fail or k = 0.
EllipticCaseParams derive_case_params(EllipticCase kind, double c, double k,
                                      double c2, double c4, double xi0,
                                      double epsilon = 1.0);

// P(phi) = c0 + c2 phi^2 + c4 phi^4.
double quartic(const EllipticCaseParams& params, double phi);

RealOrPole evaluate_phi(const EllipticCaseParams& params, double xi);
RealOrPole evaluate_solution(const EllipticCaseParams& params, double x, double t);

// Pole positions of phi with xi in [lo, hi], ascending.
std::vector<double> pole_locations(const EllipticCaseParams& params, double lo,
                                   double hi);

// `count` equally spaced xi over one period starting at xi0 (over [xi0 + 1,
// xi0 + 5] for Case I), skipping points within `pole_margin` of a pole.
std::vector<double> period_samples(const EllipticCaseParams& params, int count,
                                   double pole_margin = 1e-3);

// max |(phi')^2 - P(phi)| with phi' from the 5-point central difference,
// step h = 1e-5. Samples whose stencil touches a pole are skipped.
double ode_residual_phi(const EllipticCaseParams& params,
                        std::span<const double> xi_samples);

using SpaceTimeFunction = std::function<double(double x, double t)>;

struct PdeResidual {
  double max_residual = 0.0;
  double max_abs_u = 0.0;  // over the same sample points
};

// Residual of u_t + u_x + (u^2)_x + u_xxxxt at `count` points x in
// [x_lo, x_hi] and time t, every derivative taken by tenth-order central
// differences (steps h/|k| in x and h/|c| in t; pass k = c = 1 for a generic
// function).
PdeResidual pde_residual(const SpaceTimeFunction& u, double x_lo, double x_hi,
                         int count, double t, double k = 1.0, double c = 1.0,
                         double h = 0.03);
PdeResidual pde_residual(const EllipticCaseParams& params, double x_lo,
                         double x_hi, int count, double t);

// Weights w_i with f^(m)(0) ~ sum_i w_i f(offsets_i h) / h^m (Fornberg).
std::vector<double> finite_difference_weights(int derivative,
                                              std::span<const double> offsets);

}  // namespace rosenau
