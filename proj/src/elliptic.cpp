#include "rosenau/elliptic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "rosenau/errors.hpp"

namespace rosenau {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPoleTol = 1e-12;
const double kSqrt2 = std::numbers::sqrt2;

[[noreturn]] void sign_violation(EllipticCase kind, const std::string& what) {
  throw ConfigError("Case " + to_string(kind) + " requires " + what);
}

}  // namespace

std::string to_string(EllipticCase kind) {
  switch (kind) {
    case EllipticCase::I: return "I";
    case EllipticCase::IIa: return "IIa";
    case EllipticCase::IIb: return "IIb";
    case EllipticCase::IIc: return "IIc";
    case EllipticCase::IId: return "IId";
    case EllipticCase::IIe: return "IIe";
    case EllipticCase::IIf: return "IIf";
  }
  return "?";
}

EllipticCase parse_elliptic_case(const std::string& name) {
  std::string lower;
  for (char ch : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (auto kind : {EllipticCase::I, EllipticCase::IIa, EllipticCase::IIb,
                    EllipticCase::IIc, EllipticCase::IId, EllipticCase::IIe,
                    EllipticCase::IIf}) {
    std::string tag;
    for (char ch : to_string(kind)) tag += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (tag == lower) return kind;
  }
  throw ConfigError("unknown elliptic case '" + name +
                    "'; expected one of I, IIa, IIb, IIc, IId, IIe, IIf");
}

bool EllipticCaseParams::has_poles() const {
  switch (kind) {
    case EllipticCase::I:
    case EllipticCase::IIf:
      return true;
    default:
      return R > 1.0;
  }
}

double EllipticCaseParams::period() const {
  if (kind == EllipticCase::I) return std::numeric_limits<double>::infinity();
  // sn^2 and tn both repeat after 2K in their argument.
  return 2.0 * complete_elliptic_k(modulus) / argument_scale;
}

EllipticCaseParams derive_case_params(EllipticCase kind, double c, double k,
                                      double c2, double c4, double xi0,
                                      double epsilon) {
  if (k == 0.0 || !std::isfinite(k)) {
    throw ConfigError("Case " + to_string(kind) + ": wavenumber k must be nonzero");
  }
  if (!(std::isfinite(c) && std::isfinite(c2) && std::isfinite(c4) && std::isfinite(xi0))) {
    throw ConfigError("Case " + to_string(kind) + ": parameters must be finite");
  }
  if (epsilon != 1.0 && epsilon != -1.0) {
    throw ConfigError("branch sign epsilon must be +1 or -1");
  }
  switch (kind) {
    case EllipticCase::I:
      if (c2 != 0.0) sign_violation(kind, "c2 = 0 (got c2=" + std::to_string(c2) + ")");
      if (!(c4 > 0.0)) sign_violation(kind, "c4 > 0 (got c4=" + std::to_string(c4) + ")");
      break;
    case EllipticCase::IIa:
    case EllipticCase::IIb:
    case EllipticCase::IIc:
      if (!(c4 > 0.0)) sign_violation(kind, "c4 > 0 (got c4=" + std::to_string(c4) + ")");
      if (!(c2 < 0.0)) sign_violation(kind, "c2 < 0 (got c2=" + std::to_string(c2) + ")");
      break;
    case EllipticCase::IId:
    case EllipticCase::IIe:
      if (!(c4 < 0.0)) sign_violation(kind, "c4 < 0 (got c4=" + std::to_string(c4) + ")");
      if (!(c2 > 0.0)) sign_violation(kind, "c2 > 0 (got c2=" + std::to_string(c2) + ")");
      break;
    case EllipticCase::IIf:
      if (!(c4 > 0.0)) sign_violation(kind, "c4 > 0 (got c4=" + std::to_string(c4) + ")");
      if (!(c2 > 0.0)) sign_violation(kind, "c2 > 0 (got c2=" + std::to_string(c2) + ")");
      break;
  }

  EllipticCaseParams out;
  out.kind = kind;
  out.c = c;
  out.k = k;
  out.c2 = c2;
  out.c4 = c4;
  out.xi0 = xi0;
  out.epsilon = epsilon;
  out.a0 = (112.0 * c * c2 * c2 * k * k * k * k + c - k) / (2.0 * k);
  out.a2 = 560.0 * c * c2 * c4 * k * k * k;
  out.a4 = 840.0 * c * c4 * c4 * k * k * k;
  out.c0 = 2.0 * c2 * c2 / (9.0 * c4);

  switch (kind) {
    case EllipticCase::I:
      out.roots = {};
      out.modulus = kNaN;
      out.g = kNaN;
      out.R = kNaN;
      out.argument_scale = std::sqrt(c4);
      break;
    case EllipticCase::IIf: {
      const double b = std::sqrt(c2 / (3.0 * c4));
      const double a = std::sqrt(2.0 * c2 / (3.0 * c4));
      out.roots = {std::complex<double>(0.0, a), std::complex<double>(0.0, b),
                   std::complex<double>(0.0, -b), std::complex<double>(0.0, -a)};
      out.modulus = 1.0 / kSqrt2;
      out.g = std::sqrt(3.0 * c4 / (2.0 * c2));
      out.R = kNaN;
      out.argument_scale = std::sqrt(2.0 * c2 / 3.0);
      break;
    }
    default: {
      const double phi1 = std::sqrt(-2.0 * c2 / (3.0 * c4));
      const double phi2 = std::sqrt(-c2 / (3.0 * c4));
      out.roots = {phi1, phi2, -phi2, -phi1};
      out.g = 2.0 * (kSqrt2 - 1.0) * std::sqrt(-3.0 * c4 / c2);
      if (c4 > 0.0) {
        out.modulus = 2.0 * std::sqrt(3.0 * kSqrt2 - 4.0);
        out.R = kind == EllipticCase::IIb ? 2.0 * (kSqrt2 - 1.0) : 4.0 - 2.0 * kSqrt2;
        out.argument_scale = std::sqrt(c4) / out.g;
      } else {
        out.modulus = 3.0 - 2.0 * kSqrt2;
        out.R = 3.0 - 2.0 * kSqrt2;
        out.argument_scale = std::sqrt(-c4) / out.g;
      }
      break;
    }
  }
  return out;
}

double quartic(const EllipticCaseParams& params, double phi) {
  const double phi2 = phi * phi;
  return params.c0 + params.c2 * phi2 + params.c4 * phi2 * phi2;
}

RealOrPole evaluate_phi(const EllipticCaseParams& params, double xi) {
  const double shifted = xi - params.xi0;
  if (params.kind == EllipticCase::I) {
    const double den = std::sqrt(params.c4) * shifted;
    if (std::abs(den) < kPoleTol) return RealOrPole::at_pole();
    return RealOrPole::of(params.epsilon / den);
  }
  const JacobiArgs args{params.argument_scale * shifted, params.modulus};
  if (params.kind == EllipticCase::IIf) {
    const RealOrPole tn = jacobi_tn({params.epsilon * args.u, args.modulus});
    if (tn.pole) return tn;
    return RealOrPole::of(params.roots[1].imag() * tn.value);
  }

  const double sn = jacobi_sn(args);
  const double s = sn * sn;
  const double R = params.R;
  const double phi1 = params.roots[0].real();
  const double phi2 = params.roots[1].real();
  const double phi3 = params.roots[2].real();
  const double phi4 = params.roots[3].real();
  double num = 0.0;
  double den = 0.0;
  switch (params.kind) {
    case EllipticCase::IIa:
      num = phi1 - phi2 * R * s;
      den = 1.0 - R * s;
      break;
    case EllipticCase::IIb:
      num = phi2 - phi1 * R * s;
      den = 1.0 - R * s;
      break;
    case EllipticCase::IIc:
      num = phi4 - phi3 * R * s;
      den = 1.0 - R * s;
      break;
    case EllipticCase::IId:
      num = phi4 + phi1 * R * s;
      den = 1.0 + R * s;
      break;
    case EllipticCase::IIe:
      num = phi2 + phi3 * R * s;
      den = 1.0 - R * s;
      break;
    default:
      break;
  }
  if (std::abs(den) < kPoleTol) return RealOrPole::at_pole();
  return RealOrPole::of(num / den);
}

RealOrPole evaluate_solution(const EllipticCaseParams& params, double x, double t) {
  const RealOrPole phi = evaluate_phi(params, params.k * x - params.c * t);
  if (phi.pole) return phi;
  const double phi2 = phi.value * phi.value;
  return RealOrPole::of(params.a0 + params.a2 * phi2 + params.a4 * phi2 * phi2);
}

std::vector<double> pole_locations(const EllipticCaseParams& params, double lo,
                                   double hi) {
  std::vector<double> poles;
  if (!params.has_poles() || !(hi >= lo)) return poles;
  if (params.kind == EllipticCase::I) {
    if (params.xi0 >= lo && params.xi0 <= hi) poles.push_back(params.xi0);
    return poles;
  }
  const double big_k = complete_elliptic_k(params.modulus);
  // Arguments w (of sn or tn) at which phi is singular, modulo 2K.
  std::vector<double> base;
  if (params.kind == EllipticCase::IIf) {
    base.push_back(big_k);  // cn = 0
  } else {
    const double w0 = incomplete_elliptic_f(std::asin(1.0 / std::sqrt(params.R)),
                                            params.modulus);
    base.push_back(w0);
    base.push_back(2.0 * big_k - w0);
  }
  const double scale = params.argument_scale;
  const double w_lo = scale * (lo - params.xi0);
  const double w_hi = scale * (hi - params.xi0);
  const long j_lo = static_cast<long>(std::floor(w_lo / (2.0 * big_k))) - 1;
  const long j_hi = static_cast<long>(std::ceil(w_hi / (2.0 * big_k))) + 1;
  for (long j = j_lo; j <= j_hi; ++j) {
    for (double w : base) {
      const double xi = params.xi0 + (w + 2.0 * big_k * static_cast<double>(j)) / scale;
      if (xi >= lo && xi <= hi) poles.push_back(xi);
    }
  }
  std::sort(poles.begin(), poles.end());
  return poles;
}

std::vector<double> period_samples(const EllipticCaseParams& params, int count,
                                   double pole_margin) {
  double lo = params.xi0;
  double hi = params.xi0 + params.period();
  if (params.kind == EllipticCase::I) {
    lo = params.xi0 + 1.0;
    hi = params.xi0 + 5.0;
  }
  const auto poles = pole_locations(params, lo - pole_margin, hi + pole_margin);
  std::vector<double> samples;
  samples.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double xi = lo + (hi - lo) * (i + 0.5) / count;
    const bool near_pole = std::any_of(poles.begin(), poles.end(), [&](double p) {
      return std::abs(xi - p) < pole_margin;
    });
    if (!near_pole) samples.push_back(xi);
  }
  return samples;
}

double ode_residual_phi(const EllipticCaseParams& params,
                        std::span<const double> xi_samples) {
  constexpr double h = 1e-5;
  double worst = 0.0;
  for (double xi : xi_samples) {
    std::array<double, 5> f{};
    bool pole = false;
    for (int i = 0; i < 5; ++i) {
      const RealOrPole v = evaluate_phi(params, xi + (i - 2) * h);
      if (v.pole) pole = true;
      f[i] = v.value;
    }
    if (pole) continue;
    const double dphi = (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12.0 * h);
    worst = std::max(worst, std::abs(dphi * dphi - quartic(params, f[2])));
  }
  return worst;
}

std::vector<double> finite_difference_weights(int derivative,
                                              std::span<const double> offsets) {
  // Fornberg's recursion, evaluated at 0.
  const int n = static_cast<int>(offsets.size());
  const int m = derivative;
  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = offsets[0];
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = offsets[i];
    for (int j = 0; j < i; ++j) {
      const double c3 = offsets[i] - offsets[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int r = mn; r >= 1; --r) {
          c[i][r] = c1 * (r * c[i - 1][r - 1] - c5 * c[i - 1][r]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int r = mn; r >= 1; --r) {
        c[j][r] = (c4 * c[j][r] - r * c[j][r - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][m];
  return w;
}

namespace {

// Central offsets for a tenth-order accurate stencil of the given derivative.
std::vector<double> central_offsets(int derivative) {
  constexpr int order = 10;
  const int half = (derivative + order - 1) / 2;
  std::vector<double> offsets;
  for (int i = -half; i <= half; ++i) offsets.push_back(i);
  return offsets;
}

}  // namespace

PdeResidual pde_residual(const SpaceTimeFunction& u, double x_lo, double x_hi,
                         int count, double t, double k, double c, double h) {
  const double hx = h / (k != 0.0 ? std::abs(k) : 1.0);
  const double ht = h / (c != 0.0 ? std::abs(c) : 1.0);
  const auto off1 = central_offsets(1);
  const auto off4 = central_offsets(4);
  const auto w1 = finite_difference_weights(1, off1);
  const auto w4 = finite_difference_weights(4, off4);

  auto d_dx = [&](double x, double tt) {
    double s = 0.0;
    for (std::size_t i = 0; i < off1.size(); ++i) s += w1[i] * u(x + off1[i] * hx, tt);
    return s / hx;
  };
  auto d4_dx4 = [&](double x, double tt) {
    double s = 0.0;
    for (std::size_t i = 0; i < off4.size(); ++i) s += w4[i] * u(x + off4[i] * hx, tt);
    return s / (hx * hx * hx * hx);
  };

  PdeResidual out;
  for (int i = 0; i < count; ++i) {
    const double x = count == 1 ? x_lo : x_lo + (x_hi - x_lo) * i / (count - 1);
    double ut = 0.0;
    double uxxxxt = 0.0;
    for (std::size_t j = 0; j < off1.size(); ++j) {
      const double tt = t + off1[j] * ht;
      ut += w1[j] * u(x, tt);
      uxxxxt += w1[j] * d4_dx4(x, tt);
    }
    ut /= ht;
    uxxxxt /= ht;
    const double value = u(x, t);
    const double ux = d_dx(x, t);
    const double r = ut + ux + 2.0 * value * ux + uxxxxt;
    out.max_residual = std::max(out.max_residual, std::abs(r));
    out.max_abs_u = std::max(out.max_abs_u, std::abs(value));
  }
  return out;
}

PdeResidual pde_residual(const EllipticCaseParams& params, double x_lo,
                         double x_hi, int count, double t) {
  auto u = [&params](double x, double tt) {
    const RealOrPole v = evaluate_solution(params, x, tt);
    if (v.pole) {
      throw NumericalError("pole", "pde_residual: stencil touches a pole of Case " +
                                       to_string(params.kind));
    }
    return v.value;
  };
  return pde_residual(u, x_lo, x_hi, count, t, params.k, params.c);
}

}  // namespace rosenau
